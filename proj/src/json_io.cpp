#include "wreath/json_io.hpp"

#include "wreath/errors.hpp"

#include <stdexcept>

namespace wreath {

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const MultiPartition& mu) {
    Json out = Json::array();
    for (const Partition& comp : mu.components()) out.push_back(to_json(comp));
    return out;
}

Json to_json(const Tableau& t) { return Json(t.rows()); }

Json to_json(const StandardMultiTableau& t) {
    Json out = Json::array();
    for (const Tableau& comp : t.components()) out.push_back(to_json(comp));
    return out;
}

Json to_json(const SymmetricClassLabel& label) {
    return Json{{"f", label.fixed}, {"p", label.paired}};
}

Json to_json(const ConjClassLabel& label) {
    Json cycles = Json::array();
    for (int s = 0; s < label.r; ++s)
        for (int len : label.cycles[s].parts()) cycles.push_back(Json::array({len, s}));
    return Json{{"cycles", cycles}};
}

Json to_json(const ClassDecomposition& dec) {
    Json summands = Json::array();
    for (const auto& [mu, mult] : dec.summands)
        summands.push_back(Json{{"multipartition", to_json(mu)}, {"multiplicity", mult}});
    return Json{{"class", to_json(dec.label)}, {"summands", summands}, {"verified", dec.verified}};
}

Json character_table_json(int r, int n) {
    const ConjClassTable& table = conj_classes(r, n);
    const auto& fer = multipartitions(r, n);
    const auto& irreducibles = irreducible_characters(r, n);

    Json classes = Json::array();
    for (const ConjClass& cls : table.classes()) {
        Json entry = to_json(cls.label);
        entry["size"] = cls.size;
        classes.push_back(entry);
    }
    Json chars = Json::array();
    for (std::size_t i = 0; i < fer.size(); ++i) {
        Json values = Json::array();
        for (int c = 0; c < irreducibles[i].class_count(); ++c) {
            Json coeffs = Json::array();
            for (const BigInt& coeff : irreducibles[i].at_index(c).coeffs())
                coeffs.push_back(coeff.to_string());
            values.push_back(coeffs);
        }
        chars.push_back(Json{{"multipartition", to_json(fer[i])}, {"values", values}});
    }
    return Json{{"r", r}, {"n", n}, {"classes", classes}, {"irreducibles", chars}};
}

std::vector<ClassFunction> character_table_from_json(const Json& doc, int r, int n) {
    if (!doc.contains("r") || !doc.contains("n") || doc["r"].get<int>() != r ||
        doc["n"].get<int>() != n)
        throw std::invalid_argument("character table cache: wrong group");
    const ConjClassTable& table = conj_classes(r, n);
    std::vector<ClassFunction> out;
    for (const Json& entry : doc.at("irreducibles")) {
        ClassFunction chi(r, n);
        const Json& values = entry.at("values");
        if (values.size() != table.classes().size())
            throw std::invalid_argument("character table cache: class count mismatch");
        for (std::size_t c = 0; c < values.size(); ++c) {
            std::vector<BigInt> coeffs;
            for (const Json& coeff : values[c])
                coeffs.push_back(BigInt::from_string(coeff.get<std::string>()));
            chi.at_index(static_cast<int>(c)) = CyclotomicInt(r, std::move(coeffs));
        }
        out.push_back(std::move(chi));
    }
    return out;
}

} // namespace wreath
