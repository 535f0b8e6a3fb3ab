#pragma once

#include "wreath/colored_permutation.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wreath {

// Weakly decreasing sequence of positive parts; empty partition allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                                  // number of boxes
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& other) const = default;
    auto operator<=>(const Partition& other) const = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

// reverse-lexicographic: (n) first, (1^n) last
std::vector<Partition> partitions(int n);
Partition conjugate(const Partition& lambda);
Partition single_row(int k);  // iota_k; empty when k = 0
int odd_columns(const Partition& lambda);

// r-tuple of partitions with n total boxes, an element of Fer(r,n)
class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> components);

    int r() const { return static_cast<int>(components_.size()); }
    int size() const;
    const Partition& component(int i) const { return components_[i]; }
    const std::vector<Partition>& components() const { return components_; }

    bool operator==(const MultiPartition& other) const = default;
    auto operator<=>(const MultiPartition& other) const = default;

    std::string to_string() const;

private:
    std::vector<Partition> components_;
};

// Fer(r,n); deterministic order: component sizes chosen largest-first from the
// left, partitions reverse-lexicographic within each component
std::vector<MultiPartition> multipartitions(int r, int n);

// Rows strictly increase left to right, columns top to bottom; entries are
// distinct integers but not necessarily 1..n (a component of a multitableau
// only holds a subset).
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int entries() const;

    bool operator==(const Tableau& other) const = default;
    auto operator<=>(const Tableau& other) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

// r components whose entries together are exactly 1..n
class StandardMultiTableau {
public:
    StandardMultiTableau() = default;
    explicit StandardMultiTableau(std::vector<Tableau> components);

    int r() const { return static_cast<int>(components_.size()); }
    int size() const;
    const Tableau& component(int i) const { return components_[i]; }
    const std::vector<Tableau>& components() const { return components_; }
    MultiPartition shape() const;

    bool operator==(const StandardMultiTableau& other) const = default;
    auto operator<=>(const StandardMultiTableau& other) const = default;

private:
    std::vector<Tableau> components_;
};

std::vector<StandardMultiTableau> standard_multitableaux(const MultiPartition& mu);
// |ST_mu| by the hook length formula with a multinomial across components
std::int64_t count_standard(const MultiPartition& mu);

struct TwoLineArray {
    std::vector<int> top;     // strictly increasing
    std::vector<int> bottom;  // distinct
};

// classical Robinson-Schensted row insertion; P takes the bottom line,
// Q records the top line
std::pair<Tableau, Tableau> rs_classical(const TwoLineArray& array);
TwoLineArray rs_classical_inverse(const Tableau& p, const Tableau& q);

// Stanton-White correspondence: classical RS applied color by color
std::pair<StandardMultiTableau, StandardMultiTableau> rsk(const ColoredPermutation& g);
ColoredPermutation inverse_rsk(const StandardMultiTableau& p, const StandardMultiTableau& q,
                               int r);

// common shape of rsk(v); requires v to be an absolute involution
MultiPartition shape_of(const ColoredPermutation& v);

} // namespace wreath
