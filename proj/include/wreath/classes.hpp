#pragma once

#include "wreath/colored_permutation.hpp"
#include "wreath/tableaux.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wreath {

// Label of an S_n-conjugacy class of absolute involutions: fixed-point and
// pair counts per color, with sum f_i + 2 p_i = n.
struct SymmetricClassLabel {
    int r = 1;
    int n = 0;
    std::vector<int> fixed;   // f_0 .. f_{r-1}
    std::vector<int> paired;  // p_0 .. p_{r-1}

    bool operator==(const SymmetricClassLabel& other) const = default;
    auto operator<=>(const SymmetricClassLabel& other) const = default;

    std::string to_string() const;
};

void validate(const SymmetricClassLabel& label);

SymmetricClassLabel symmetric_class_of(const ColoredPermutation& v);
// deterministic order: pair counts odometer over m = sum p_i ascending,
// fixed counts odometer within
std::vector<SymmetricClassLabel> enumerate_symmetric_classes(int r, int n);
std::vector<ColoredPermutation> class_members(const SymmetricClassLabel& label,
                                              std::int64_t limit = kDefaultElementLimit);
// n! / (prod f_i! * prod 2^(p_i) p_i!)
std::int64_t class_size(const SymmetricClassLabel& label);

// pairs (1,2),(3,4),... colored by ascending color blocks, then fixed points
// by ascending color blocks
ColoredPermutation canonical_representative(const SymmetricClassLabel& label);

// all g with |g| v |g|^(-1) = v
std::vector<ColoredPermutation> absolute_stabilizer(const ColoredPermutation& v,
                                                    std::int64_t limit = kDefaultElementLimit);

// The stabilizer of canonical_representative({f = 0, p = pair_counts}) in
// closed form: |g| permutes the pairs {2i-1,2i} within each color block,
// optionally reversing each, and the colors of g are arbitrary. Equals
// absolute_stabilizer on that representative without enumerating G(r,n).
std::vector<ColoredPermutation> pair_block_stabilizer(int r, const std::vector<int>& pair_counts);

// {mu in Fer(r,n) : |mu_i| = f_i + 2 p_i and odd_columns(mu_i) = f_i}
std::vector<MultiPartition> shapes_of_class(const SymmetricClassLabel& label);

// Ordinary conjugacy class of G(r,n): per color s, the multiset of lengths of
// cycles of |g| whose total color is s.
struct ConjClassLabel {
    int r = 1;
    int n = 0;
    std::vector<Partition> cycles;  // slot s = lengths of cycles with color sum s

    bool operator==(const ConjClassLabel& other) const = default;
    auto operator<=>(const ConjClassLabel& other) const = default;

    std::string to_string() const;
};

ConjClassLabel conj_class_of(const ColoredPermutation& g);

struct ConjClass {
    ConjClassLabel label;
    std::int64_t size = 0;
    ColoredPermutation representative;
};

// All conjugacy classes of G(r,n) in the multipartitions(r,n) order, with
// closed-form sizes and canonical representatives.
class ConjClassTable {
public:
    ConjClassTable(int r, int n);

    int r() const { return r_; }
    int n() const { return n_; }
    std::int64_t group_order() const { return order_; }
    const std::vector<ConjClass>& classes() const { return classes_; }
    int index_of(const ConjClassLabel& label) const;
    int index_of(const ColoredPermutation& g) const { return index_of(conj_class_of(g)); }

private:
    int r_;
    int n_;
    std::int64_t order_;
    std::vector<ConjClass> classes_;
    std::vector<ConjClassLabel> sorted_labels_;
    std::vector<int> sorted_index_;
};

// shared cache; reference stays valid for the process lifetime
const ConjClassTable& conj_classes(int r, int n);

std::int64_t centralizer_order(const ConjClassLabel& label);
int total_color(const ConjClassLabel& label);       // z(g) mod r for g in the class
Partition cycle_type(const ConjClassLabel& label);  // cycle type of |g|, slots pooled
int permutation_sign(const ConjClassLabel& label);  // sign of |g|

} // namespace wreath
