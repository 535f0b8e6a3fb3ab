#pragma once

#include "wreath/characters.hpp"
#include "wreath/classes.hpp"
#include "wreath/cyclotomic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wreath {

// Which representation acts on the span of {C_v : v in I(r,n)}:
//   inversion_signed — coefficient zeta^<g,v> * (-1)^inv_v(g)  (the model)
//   color_only       — coefficient zeta^<g,v>                  (auxiliary)
enum class ModelVariant { inversion_signed, color_only };

// The ordered basis {C_v : v in I(r,n)}, in enumeration order.
class InvolutionBasis {
public:
    InvolutionBasis(int r, int n, std::int64_t limit = kDefaultElementLimit);

    int r() const { return r_; }
    int n() const { return n_; }
    int dimension() const { return static_cast<int>(elements_.size()); }
    const std::vector<ColoredPermutation>& elements() const { return elements_; }
    int index_of(const ColoredPermutation& v) const;

private:
    int r_;
    int n_;
    std::vector<ColoredPermutation> elements_;
    std::vector<ColoredPermutation> sorted_;
    std::vector<int> sorted_index_;
};

const InvolutionBasis& involution_basis(int r, int n,
                                        std::int64_t limit = kDefaultElementLimit);

// Generalized permutation matrix: one entry per column (and per row), each a
// root of unity up to sign.
class ModelMatrix {
public:
    ModelMatrix(int r, std::vector<int> row_of_col, std::vector<CyclotomicInt> coeff_of_col);

    int r() const { return r_; }
    int dimension() const { return static_cast<int>(row_of_col_.size()); }
    int row(int col) const { return row_of_col_[col]; }
    const CyclotomicInt& coeff(int col) const { return coeff_of_col_[col]; }
    CyclotomicInt trace() const;

    bool operator==(const ModelMatrix& other) const = default;

private:
    int r_;
    std::vector<int> row_of_col_;
    std::vector<CyclotomicInt> coeff_of_col_;
};

ModelMatrix multiply(const ModelMatrix& a, const ModelMatrix& b);

CyclotomicInt model_coefficient(const ColoredPermutation& g, const ColoredPermutation& v,
                                ModelVariant variant);
ModelMatrix model_matrix(const InvolutionBasis& basis, const ColoredPermutation& g,
                         ModelVariant variant = ModelVariant::inversion_signed);

// Character of the action on M (or on the submodule M(c) when a restriction
// label is given), computed by the trace formula over fixed basis vectors.
// Verified constant on conjugacy classes by a full-group sweep while
// |G| <= verify_limit.
ClassFunction model_character(int r, int n, ModelVariant variant,
                              const std::optional<SymmetricClassLabel>& restriction = std::nullopt,
                              std::int64_t limit = kDefaultElementLimit,
                              std::int64_t verify_limit = 100'000);

struct ClassDecomposition {
    SymmetricClassLabel label;
    std::vector<std::pair<MultiPartition, int>> summands;  // nonzero multiplicities
    std::vector<MultiPartition> predicted;                 // shapes_of_class(label)
    bool verified = false;  // summands == predicted, all multiplicities 1
};

ClassDecomposition decompose_class(const SymmetricClassLabel& label, ModelVariant variant,
                                   std::int64_t limit = kDefaultElementLimit);

struct NoFixedPointReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// For the span of {C_v : all fix_i(v) = 0} inside G(r,2m):
//   color_only       — multiplicity-free sum over all-even-row multipartitions,
//                      plus the restriction/induction isomorphism one level down
//   inversion_signed — per class c_{0,p}, multiplicity-free sum over
//                      multipartitions with |mu_i| = 2 p_i and no odd columns
NoFixedPointReport no_fixed_point_module_check(int r, int m, ModelVariant variant,
                                               std::int64_t limit = kDefaultElementLimit);

} // namespace wreath
