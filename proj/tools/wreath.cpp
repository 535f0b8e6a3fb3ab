// Command-line frontend: exact computations with colored permutations,
// the generalized Robinson-Schensted correspondence, symmetric conjugacy
// classes, characters, and the Gelfand-model decomposition for G(r,n).

#include "wreath/errors.hpp"
#include "wreath/json_io.hpp"
#include "wreath/model.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace wreath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitLimit = 3;

struct Options {
    int r = 2;
    int n = 0;
    std::string format = "table";
    std::string cache_dir;
    std::int64_t limit = kDefaultElementLimit;
};

SymmetricClassLabel parse_class_label(int r, int n, const std::string& text) {
    SymmetricClassLabel label;
    label.r = r;
    label.n = n;
    auto parse_list = [](const std::string& body) {
        std::vector<int> out;
        std::stringstream stream(body);
        std::string item;
        while (std::getline(stream, item, ',')) out.push_back(std::stoi(item));
        return out;
    };
    std::stringstream stream(text);
    std::string field;
    while (std::getline(stream, field, ';')) {
        if (field.rfind("f=", 0) == 0)
            label.fixed = parse_list(field.substr(2));
        else if (field.rfind("p=", 0) == 0)
            label.paired = parse_list(field.substr(2));
        else
            throw std::invalid_argument("class label: expected f=...;p=...");
    }
    validate(label);
    return label;
}

std::string cyclo_string(const CyclotomicInt& value) { return value.to_string(); }

int cmd_rsk(const Options& opt, const std::string& window_text) {
    ColoredPermutation g = parse_window(opt.r, window_text);
    auto [p, q] = rsk(g);
    if (opt.format == "json") {
        Json out{{"r", opt.r},
                 {"window", window_string(g)},
                 {"P", to_json(p)},
                 {"Q", to_json(q)},
                 {"shape", to_json(p.shape())}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "window: " << window_string(g) << "\n";
        for (int c = 0; c < opt.r; ++c) {
            std::cout << "P_" << c << ":";
            for (const auto& row : p.component(c).rows()) {
                std::cout << " [";
                for (std::size_t j = 0; j < row.size(); ++j)
                    std::cout << (j ? "," : "") << row[j];
                std::cout << "]";
            }
            std::cout << "\nQ_" << c << ":";
            for (const auto& row : q.component(c).rows()) {
                std::cout << " [";
                for (std::size_t j = 0; j < row.size(); ++j)
                    std::cout << (j ? "," : "") << row[j];
                std::cout << "]";
            }
            std::cout << "\n";
        }
        std::cout << "shape: " << p.shape().to_string() << "\n";
    }
    return kExitOk;
}

int cmd_classes(const Options& opt) {
    auto labels = enumerate_symmetric_classes(opt.r, opt.n);
    std::int64_t total = 0;
    Json rows = Json::array();
    for (const auto& label : labels) {
        std::int64_t size = class_size(label);
        total += size;
        ColoredPermutation rep = canonical_representative(label);
        Json shapes = Json::array();
        for (const auto& mu : shapes_of_class(label)) shapes.push_back(to_json(mu));
        Json row = to_json(label);
        row["size"] = size;
        row["representative"] = window_string(rep);
        row["shapes"] = shapes;
        rows.push_back(row);
        if (opt.format != "json") {
            std::cout << label.to_string() << "  size=" << size
                      << "  rep=" << window_string(rep) << "  Sh(c)={";
            bool first = true;
            for (const auto& mu : shapes_of_class(label)) {
                std::cout << (first ? "" : ", ") << mu.to_string();
                first = false;
            }
            std::cout << "}\n";
        }
    }
    if (opt.format == "json") {
        Json out{{"r", opt.r}, {"n", opt.n}, {"classes", rows}, {"involutions", total}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "classes: " << labels.size() << ", absolute involutions: " << total << "\n";
    }
    return kExitOk;
}

int cmd_decompose(const Options& opt, const std::string& class_text, bool all) {
    std::vector<SymmetricClassLabel> labels;
    if (all)
        labels = enumerate_symmetric_classes(opt.r, opt.n);
    else
        labels.push_back(parse_class_label(opt.r, opt.n, class_text));

    bool mismatch = false;
    Json reports = Json::array();
    for (const auto& label : labels) {
        ClassDecomposition dec = decompose_class(label, ModelVariant::inversion_signed, opt.limit);
        mismatch = mismatch || !dec.verified;
        reports.push_back(to_json(dec));
        if (opt.format != "json") {
            std::cout << label.to_string() << " -> ";
            bool first = true;
            for (const auto& [mu, mult] : dec.summands) {
                std::cout << (first ? "" : " + ");
                if (mult != 1) std::cout << mult << "*";
                std::cout << mu.to_string();
                first = false;
            }
            std::cout << (dec.verified ? "  [matches Sh(c)]" : "  [MISMATCH]") << "\n";
        }
    }
    if (opt.format == "json") {
        if (all)
            std::cout << reports.dump(2) << "\n";
        else
            std::cout << reports[0].dump(2) << "\n";
    }
    return mismatch ? kExitMismatch : kExitOk;
}

int cmd_chartable(const Options& opt) {
    Json doc;
    std::string cache_dir = opt.cache_dir;
    if (cache_dir.empty()) {
        if (const char* env = std::getenv("WREATH_CACHE_DIR")) cache_dir = env;
    }
    bool loaded = false;
    std::filesystem::path cache_path;
    if (!cache_dir.empty()) {
        cache_path = std::filesystem::path(cache_dir) /
                     ("chartable_r" + std::to_string(opt.r) + "_n" + std::to_string(opt.n) +
                      ".json");
        if (std::filesystem::exists(cache_path)) {
            std::ifstream in(cache_path);
            in >> doc;
            character_table_from_json(doc, opt.r, opt.n);  // validates
            loaded = true;
        }
    }
    if (!loaded) {
        doc = character_table_json(opt.r, opt.n);
        if (!cache_dir.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(cache_path.parent_path(), ec);
            std::ofstream out(cache_path);
            out << doc.dump(2) << "\n";
            if (!out) std::cerr << "warning: cache not written: " << cache_path << "\n";
        }
    }

    if (opt.format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::vector<ClassFunction> chars = character_table_from_json(doc, opt.r, opt.n);
        const ConjClassTable& table = conj_classes(opt.r, opt.n);
        const auto& fer = multipartitions(opt.r, opt.n);
        std::cout << "classes (" << table.classes().size() << "):\n";
        for (const auto& cls : table.classes())
            std::cout << "  " << cls.label.to_string() << "  size=" << cls.size << "\n";
        for (std::size_t i = 0; i < chars.size(); ++i) {
            std::cout << fer[i].to_string() << ":";
            for (int c = 0; c < chars[i].class_count(); ++c)
                std::cout << "  " << cyclo_string(chars[i].at_index(c));
            std::cout << "\n";
        }
    }
    return kExitOk;
}

struct SuiteResult {
    std::string name;
    bool applicable = true;
    bool passed = true;
    std::string detail;
};

SuiteResult run_homomorphism(const Options& opt) {
    SuiteResult result;
    result.name = "homomorphism";
    const InvolutionBasis& basis = involution_basis(opt.r, opt.n, opt.limit);
    auto elements = enumerate_group(opt.r, opt.n, opt.limit);
    std::int64_t checked = 0, failures = 0;
    if (elements.size() <= 200) {
        for (const auto& g : elements)
            for (const auto& h : elements) {
                ++checked;
                if (!(multiply(model_matrix(basis, g), model_matrix(basis, h)) ==
                      model_matrix(basis, multiply(g, h))))
                    ++failures;
            }
    } else {
        std::mt19937_64 gen(0x5eedu + static_cast<unsigned>(opt.r * 100 + opt.n));
        std::uniform_int_distribution<std::size_t> dist(0, elements.size() - 1);
        for (int trial = 0; trial < 10000; ++trial) {
            ++checked;
            const auto& g = elements[dist(gen)];
            const auto& h = elements[dist(gen)];
            if (!(multiply(model_matrix(basis, g), model_matrix(basis, h)) ==
                  model_matrix(basis, multiply(g, h))))
                ++failures;
        }
    }
    result.passed = failures == 0;
    result.detail = std::to_string(checked) + " pairs, " + std::to_string(failures) + " failures";
    return result;
}

SuiteResult run_gelfand(const Options& opt) {
    SuiteResult result;
    result.name = "gelfand";
    ClassFunction model =
        model_character(opt.r, opt.n, ModelVariant::inversion_signed, std::nullopt, opt.limit);
    int failures = 0;
    const auto& chars = irreducible_characters(opt.r, opt.n);
    for (const auto& chi : chars)
        if (inner_product(model, chi) != 1) ++failures;
    result.passed = failures == 0;
    result.detail = std::to_string(chars.size()) + " irreducibles, " + std::to_string(failures) +
                    " with multiplicity != 1";
    return result;
}

SuiteResult run_branching(const Options& opt) {
    SuiteResult result;
    result.name = "branching";
    if (opt.n == 0) {
        result.applicable = false;
        result.detail = "requires n >= 1";
        return result;
    }
    int failures = 0, checked = 0;
    const auto& fer = multipartitions(opt.r, opt.n);
    const auto& chars = irreducible_characters(opt.r, opt.n);
    for (std::size_t i = 0; i < fer.size(); ++i) {
        ClassFunction expected(opt.r, opt.n - 1);
        for (const auto& nu : branch_down(fer[i])) expected += irreducible_character(opt.r, nu);
        ++checked;
        if (!(restrict_character(chars[i]) == expected)) ++failures;
    }
    // Frobenius reciprocity over all pairs of irreducibles
    const auto& small = irreducible_characters(opt.r, opt.n - 1);
    for (const auto& a : small) {
        ClassFunction up = induce_character(a, opt.limit);
        for (const auto& b : chars) {
            ++checked;
            if (inner_product(up, b) != inner_product(a, restrict_character(b))) ++failures;
        }
    }
    result.passed = failures == 0;
    result.detail = std::to_string(checked) + " identities, " + std::to_string(failures) +
                    " failures";
    return result;
}

SuiteResult run_pieri(const Options& opt) {
    SuiteResult result;
    result.name = "pieri";
    int added_total = opt.n / 2;
    int base_total = opt.n - added_total;
    if (added_total == 0) {
        result.applicable = false;
        result.detail = "requires n >= 2";
        return result;
    }
    int failures = 0, checked = 0;
    std::vector<int> added(opt.r, 0);
    auto compositions = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == opt.r - 1) {
            added[slot] = remaining;
            for (const auto& mu : multipartitions(opt.r, base_total)) {
                std::vector<Partition> iotas;
                for (int c = 0; c < opt.r; ++c) iotas.push_back(single_row(added[c]));
                ClassFunction induced =
                    induce_blocks({irreducible_character(opt.r, mu),
                                   irreducible_character(opt.r, MultiPartition(iotas))});
                ClassFunction expected(opt.r, opt.n);
                for (const auto& nu : pieri_summands(mu, added))
                    expected += irreducible_character(opt.r, nu);
                ++checked;
                if (!(induced == expected)) ++failures;
            }
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            added[slot] = v;
            self(self, slot + 1, remaining - v);
        }
    };
    compositions(compositions, 0, added_total);
    result.passed = failures == 0;
    result.detail = std::to_string(checked) + " inductions, " + std::to_string(failures) +
                    " failures";
    return result;
}

SuiteResult run_invinv(const Options& opt) {
    SuiteResult result;
    result.name = "invinv";
    if (opt.r != 2 || opt.n % 2 != 0 || opt.n == 0) {
        result.applicable = false;
        result.detail = "requires r = 2 and even n >= 2";
        return result;
    }
    int m = opt.n / 2;
    std::int64_t checked = 0, failures = 0;
    for (int p0 = 0; p0 <= m; ++p0) {
        std::vector<int> q{p0, m - p0};
        SymmetricClassLabel label{2, opt.n, {0, 0}, q};
        ColoredPermutation u = canonical_representative(label);
        for (const auto& g : pair_block_stabilizer(2, q)) {
            ++checked;
            int inv_total = static_cast<int>(inv_set(g).size());
            if (inv_v(g, u) % 2 != inv_total % 2) ++failures;
        }
    }
    result.passed = failures == 0;
    result.detail = std::to_string(checked) + " stabilizer elements, " +
                    std::to_string(failures) + " congruence failures";
    return result;
}

SuiteResult run_nofix(const Options& opt) {
    SuiteResult result;
    result.name = "nofix";
    if (opt.n % 2 != 0) {
        result.applicable = false;
        result.detail = "requires even n";
        return result;
    }
    int m = opt.n / 2;
    NoFixedPointReport phi = no_fixed_point_module_check(opt.r, m, ModelVariant::color_only,
                                                         opt.limit);
    NoFixedPointReport rho = no_fixed_point_module_check(opt.r, m, ModelVariant::inversion_signed,
                                                         opt.limit);
    result.passed = phi.ok && rho.ok;
    std::string issues;
    for (const auto& f : phi.failures) issues += " | " + f;
    for (const auto& f : rho.failures) issues += " | " + f;
    result.detail = "even-row, no-odd-column and restriction/induction checks" + issues;
    return result;
}

int cmd_verify(const Options& opt, const std::string& suite) {
    std::vector<std::string> names;
    if (suite == "all")
        names = {"homomorphism", "gelfand", "branching", "pieri", "invinv", "nofix"};
    else
        names = {suite};

    bool failed = false;
    for (const std::string& name : names) {
        SuiteResult result;
        if (name == "homomorphism")
            result = run_homomorphism(opt);
        else if (name == "gelfand")
            result = run_gelfand(opt);
        else if (name == "branching")
            result = run_branching(opt);
        else if (name == "pieri")
            result = run_pieri(opt);
        else if (name == "invinv")
            result = run_invinv(opt);
        else if (name == "nofix")
            result = run_nofix(opt);
        else
            throw std::invalid_argument("unknown suite: " + name);
        std::string status = !result.applicable ? "skip" : (result.passed ? "pass" : "FAIL");
        std::cout << result.name << ": " << status << " (" << result.detail << ")\n";
        if (result.applicable && !result.passed) failed = true;
    }
    return failed ? kExitMismatch : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gelfand-model computations for wreath products G(r,n)"};
    app.require_subcommand(1);

    Options opt;
    std::string window_text, class_text, suite = "all";
    bool all_classes = false;

    auto add_common = [&](CLI::App* cmd, bool needs_n) {
        cmd->add_option("-r", opt.r, "color modulus r")->required();
        if (needs_n) cmd->add_option("-n", opt.n, "degree n")->required();
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--limit", opt.limit, "enumeration budget in group elements");
        cmd->add_option("--cache-dir", opt.cache_dir, "character table cache directory");
    };

    CLI::App* rsk_cmd = app.add_subcommand("rsk", "generalized Robinson-Schensted of a window");
    add_common(rsk_cmd, false);
    rsk_cmd->add_option("window", window_text, "window notation")->required();

    CLI::App* classes_cmd =
        app.add_subcommand("classes", "symmetric conjugacy classes of absolute involutions");
    add_common(classes_cmd, true);

    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "irreducible decomposition of the submodules M(c)");
    add_common(decompose_cmd, true);
    decompose_cmd->add_option("--class", class_text, "class label f=...;p=...");
    decompose_cmd->add_flag("--all", all_classes, "decompose every class");

    CLI::App* chartable_cmd = app.add_subcommand("chartable", "character table of G(r,n)");
    add_common(chartable_cmd, true);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
    add_common(verify_cmd, true);
    verify_cmd->add_option("--suite", suite,
                           "homomorphism|gelfand|branching|pieri|invinv|nofix|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rsk_cmd->parsed()) return cmd_rsk(opt, window_text);
        if (classes_cmd->parsed()) return cmd_classes(opt);
        if (decompose_cmd->parsed()) {
            if (!all_classes && class_text.empty())
                throw std::invalid_argument("decompose: pass --class or --all");
            return cmd_decompose(opt, class_text, all_classes);
        }
        if (chartable_cmd->parsed()) return cmd_chartable(opt);
        if (verify_cmd->parsed()) return cmd_verify(opt, suite);
    } catch (const LimitError& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return kExitLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
