#pragma once

#include "wreath/classes.hpp"
#include "wreath/cyclotomic.hpp"
#include "wreath/tableaux.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace wreath {

// A class function on G(r,n) with values in Z[zeta_r], stored on the full
// set of conjugacy classes in conj_classes(r,n) order.
class ClassFunction {
public:
    ClassFunction(int r, int n);  // zero function

    int r() const { return r_; }
    int n() const { return n_; }
    int class_count() const { return static_cast<int>(values_.size()); }

    const CyclotomicInt& at_index(int i) const { return values_[i]; }
    CyclotomicInt& at_index(int i) { return values_[i]; }
    const CyclotomicInt& at(const ConjClassLabel& label) const;
    const CyclotomicInt& at(const ColoredPermutation& g) const;

    CyclotomicInt degree() const;  // value at the identity class

    ClassFunction operator+(const ClassFunction& other) const;
    ClassFunction operator-(const ClassFunction& other) const;
    ClassFunction operator*(const ClassFunction& other) const;  // internal tensor, pointwise
    ClassFunction& operator+=(const ClassFunction& other);

    bool operator==(const ClassFunction& other) const = default;

private:
    int r_;
    int n_;
    std::vector<CyclotomicInt> values_;
};

// Character of the Specht module rho_lambda of S_n at a cycle type, by the
// Murnaghan-Nakayama recursion on beta-sets.
std::int64_t symmetric_character(const Partition& lambda, const Partition& type);

ClassFunction trivial_character(int r, int n);
// g |-> zeta_r^(power * z(g))
ClassFunction gamma_character(int r, int n, int power);
// g |-> (-1)^inv(|g|)
ClassFunction sign_character(int r, int n);

// Character of rho_mu, via the induced-character formula from the block
// subgroup G(r,n_0) x ... x G(r,n_{r-1}) evaluated classwise.
ClassFunction irreducible_character(int r, const MultiPartition& mu);
// every irreducible in multipartitions(r,n) order; cached per (r,n)
const std::vector<ClassFunction>& irreducible_characters(int r, int n);

// (1/|G|) sum over classes of |class| * a * conj(b); must be a rational integer
std::int64_t inner_product(const ClassFunction& a, const ClassFunction& b);

// along the embedding G(r,n-1) = {g : g(n) = n}
ClassFunction restrict_character(const ClassFunction& a);
// full-group averaging over G(r,n+1)
ClassFunction induce_character(const ClassFunction& a,
                               std::int64_t limit = kDefaultElementLimit);

// Induction from a block subgroup G(r,n_0) x ... x G(r,n_{k-1}) of the
// external tensor of the factors, evaluated by fusing class labels.
ClassFunction induce_blocks(const std::vector<ClassFunction>& factors);

// Induction of an arbitrary function on an explicitly listed subgroup,
// chi evaluated elementwise (the subgroup need not be a block product).
ClassFunction induce_from_subgroup(
    int r, int n, const std::vector<ColoredPermutation>& subgroup,
    const std::function<CyclotomicInt(const ColoredPermutation&)>& chi);

// box deletion / addition sets R^- and R^+
std::vector<MultiPartition> branch_down(const MultiPartition& mu);
std::vector<MultiPartition> branch_up(const MultiPartition& mu);

// all ways of adding added[i] boxes to component i, no two in a column
std::vector<MultiPartition> pieri_summands(const MultiPartition& base,
                                           const std::vector<int>& added);

// pointwise product with g |-> (-1)^inv(|g|)
ClassFunction sign_twist(const ClassFunction& a);

} // namespace wreath
