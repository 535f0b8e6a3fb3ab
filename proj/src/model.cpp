#include "wreath/model.hpp"

#include "wreath/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wreath {

InvolutionBasis::InvolutionBasis(int r, int n, std::int64_t limit)
    : r_(r), n_(n), elements_(enumerate_absolute_involutions(r, n, limit)) {
    sorted_ = elements_;
    std::sort(sorted_.begin(), sorted_.end());
    sorted_index_.resize(sorted_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        auto it = std::lower_bound(sorted_.begin(), sorted_.end(), elements_[i]);
        sorted_index_[static_cast<std::size_t>(it - sorted_.begin())] = static_cast<int>(i);
    }
}

int InvolutionBasis::index_of(const ColoredPermutation& v) const {
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), v);
    if (it == sorted_.end() || !(*it == v))
        throw std::invalid_argument("InvolutionBasis: not an absolute involution of G(r,n)");
    return sorted_index_[static_cast<std::size_t>(it - sorted_.begin())];
}

const InvolutionBasis& involution_basis(int r, int n, std::int64_t limit) {
    static std::map<std::pair<int, int>, InvolutionBasis> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(r, n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, InvolutionBasis(r, n, limit)).first;
    return it->second;
}

ModelMatrix::ModelMatrix(int r, std::vector<int> row_of_col,
                         std::vector<CyclotomicInt> coeff_of_col)
    : r_(r), row_of_col_(std::move(row_of_col)), coeff_of_col_(std::move(coeff_of_col)) {
    if (row_of_col_.size() != coeff_of_col_.size())
        throw std::invalid_argument("ModelMatrix: size mismatch");
    std::vector<bool> seen(row_of_col_.size(), false);
    for (int row : row_of_col_) {
        if (row < 0 || row >= static_cast<int>(row_of_col_.size()) || seen[row])
            throw std::invalid_argument("ModelMatrix: rows not a permutation of columns");
        seen[row] = true;
    }
}

CyclotomicInt ModelMatrix::trace() const {
    CyclotomicInt out(r_);
    for (int col = 0; col < dimension(); ++col)
        if (row_of_col_[col] == col) out += coeff_of_col_[col];
    return out;
}

ModelMatrix multiply(const ModelMatrix& a, const ModelMatrix& b) {
    if (a.r() != b.r() || a.dimension() != b.dimension())
        throw std::invalid_argument("ModelMatrix: mismatched shapes");
    std::vector<int> rows(a.dimension());
    std::vector<CyclotomicInt> coeffs;
    coeffs.reserve(a.dimension());
    for (int col = 0; col < a.dimension(); ++col) {
        int mid = b.row(col);
        rows[col] = a.row(mid);
        coeffs.push_back(a.coeff(mid) * b.coeff(col));
    }
    return ModelMatrix(a.r(), std::move(rows), std::move(coeffs));
}

CyclotomicInt model_coefficient(const ColoredPermutation& g, const ColoredPermutation& v,
                                ModelVariant variant) {
    CyclotomicInt coeff = CyclotomicInt::root_power(g.r(), pairing(g, v));
    if (variant == ModelVariant::inversion_signed && inv_v(g, v) % 2 == 1) coeff = -coeff;
    return coeff;
}

ModelMatrix model_matrix(const InvolutionBasis& basis, const ColoredPermutation& g,
                         ModelVariant variant) {
    if (g.r() != basis.r() || g.n() != basis.n())
        throw std::invalid_argument("model_matrix: element not in G(r,n)");
    std::vector<int> rows(basis.dimension());
    std::vector<CyclotomicInt> coeffs;
    coeffs.reserve(basis.dimension());
    for (int col = 0; col < basis.dimension(); ++col) {
        const ColoredPermutation& v = basis.elements()[col];
        rows[col] = basis.index_of(absolute_conjugate(g, v));
        coeffs.push_back(model_coefficient(g, v, variant));
    }
    return ModelMatrix(basis.r(), std::move(rows), std::move(coeffs));
}

namespace {

// v fixed by the absolute conjugation by g, checked in place
bool fixed_by(const ColoredPermutation& g, const ColoredPermutation& v) {
    const auto& gi = g.images();
    const auto& vi = v.images();
    const auto& vc = v.colors();
    for (int j = 0; j < g.n(); ++j) {
        if (vi[gi[j]] != gi[vi[j]]) return false;
        if (vc[gi[j]] != vc[j]) return false;
    }
    return true;
}

CyclotomicInt submodule_trace(const ColoredPermutation& g,
                              const std::vector<ColoredPermutation>& members,
                              ModelVariant variant) {
    CyclotomicInt total(g.r());
    for (const ColoredPermutation& v : members)
        if (fixed_by(g, v)) total += model_coefficient(g, v, variant);
    return total;
}

} // namespace

ClassFunction model_character(int r, int n, ModelVariant variant,
                              const std::optional<SymmetricClassLabel>& restriction,
                              std::int64_t limit, std::int64_t verify_limit) {
    std::vector<ColoredPermutation> members;
    if (restriction) {
        if (restriction->r != r || restriction->n != n)
            throw std::invalid_argument("model_character: restriction label mismatch");
        members = class_members(*restriction, limit);
    } else {
        members = involution_basis(r, n, limit).elements();
    }

    const ConjClassTable& table = conj_classes(r, n);
    ClassFunction out(r, n);
    for (std::size_t i = 0; i < table.classes().size(); ++i)
        out.at_index(static_cast<int>(i)) =
            submodule_trace(table.classes()[i].representative, members, variant);

    if (table.group_order() <= verify_limit) {
        for_each_element(
            r, n,
            [&](const ColoredPermutation& g) {
                if (!(submodule_trace(g, members, variant) == out.at(g)))
                    throw ExactnessError("model_character: trace not constant on a class");
            },
            limit);
    }
    return out;
}

ClassDecomposition decompose_class(const SymmetricClassLabel& label, ModelVariant variant,
                                   std::int64_t limit) {
    validate(label);
    ClassDecomposition out;
    out.label = label;
    out.predicted = shapes_of_class(label);

    ClassFunction chi = model_character(label.r, label.n, variant, label, limit);
    const std::vector<MultiPartition>& fer = multipartitions(label.r, label.n);
    const std::vector<ClassFunction>& irreducibles = irreducible_characters(label.r, label.n);
    for (std::size_t i = 0; i < fer.size(); ++i) {
        std::int64_t mult = inner_product(chi, irreducibles[i]);
        if (mult != 0) out.summands.push_back({fer[i], static_cast<int>(mult)});
    }

    out.verified = out.summands.size() == out.predicted.size();
    if (out.verified) {
        for (const auto& [mu, mult] : out.summands) {
            if (mult != 1 ||
                std::find(out.predicted.begin(), out.predicted.end(), mu) == out.predicted.end()) {
                out.verified = false;
                break;
            }
        }
    }
    return out;
}

namespace {

bool all_even_rows(const MultiPartition& mu) {
    for (const Partition& comp : mu.components())
        for (int part : comp.parts())
            if (part % 2 == 1) return false;
    return true;
}

std::vector<SymmetricClassLabel> fixed_point_free_labels(int r, int m) {
    std::vector<SymmetricClassLabel> out;
    for (const SymmetricClassLabel& label : enumerate_symmetric_classes(r, 2 * m)) {
        bool free = true;
        for (int f : label.fixed)
            if (f != 0) free = false;
        if (free) out.push_back(label);
    }
    return out;
}

} // namespace

NoFixedPointReport no_fixed_point_module_check(int r, int m, ModelVariant variant,
                                               std::int64_t limit) {
    NoFixedPointReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.failures.push_back(std::move(msg));
    };

    int n = 2 * m;
    std::vector<SymmetricClassLabel> labels = fixed_point_free_labels(r, m);

    if (variant == ModelVariant::color_only) {
        // whole no-fixed-point span: multiplicity 1 exactly on even-row diagrams
        ClassFunction chi(r, n);
        for (const SymmetricClassLabel& label : labels)
            chi += model_character(r, n, variant, label, limit);
        const auto& fer = multipartitions(r, n);
        const auto& irreducibles = irreducible_characters(r, n);
        for (std::size_t i = 0; i < fer.size(); ++i) {
            std::int64_t mult = inner_product(chi, irreducibles[i]);
            std::int64_t expected = all_even_rows(fer[i]) ? 1 : 0;
            if (mult != expected)
                fail("even-row decomposition: multiplicity of " + fer[i].to_string() + " is " +
                     std::to_string(mult) + ", expected " + std::to_string(expected));
        }
        if (m == 0) {
            if (!(chi.degree() == CyclotomicInt(r, 1))) fail("m = 0 module is not 1-dimensional");
        } else {
            // restriction one level down matches the induction from below
            ClassFunction restricted = restrict_character(chi);
            ClassFunction below(r, 2 * (m - 1));
            for (const SymmetricClassLabel& label : fixed_point_free_labels(r, m - 1))
                below += model_character(r, 2 * (m - 1), variant, label, limit);
            ClassFunction induced = induce_character(below, limit);
            if (!(restricted == induced))
                fail("restriction/induction characters differ at m = " + std::to_string(m));
        }
    } else {
        // per class: multiplicity 1 exactly on |mu_i| = 2 p_i with no odd columns
        for (const SymmetricClassLabel& label : labels) {
            ClassDecomposition dec = decompose_class(label, variant, limit);
            if (!dec.verified)
                fail("class " + label.to_string() + ": decomposition differs from the no-odd-column prediction");
        }
    }
    return report;
}

} // namespace wreath
