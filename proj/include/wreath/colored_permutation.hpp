#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wreath {

inline constexpr std::int64_t kDefaultElementLimit = 10'000'000;

// An element of the wreath product G(r,n): the permutation |g| together with
// a color z_i(g) in Z_r attached to each position i. Acts on symbols
// zeta_r^k * i by  zeta_r^k * i |-> zeta_r^(k + z_i(g)) * |g|(i).
// Values are immutable after construction; internals are 0-based, the
// window/cycle notation exposed to callers is 1-based.
class ColoredPermutation {
public:
    ColoredPermutation() = default;  // identity of G(1,0)
    ColoredPermutation(int r, std::vector<int> images, std::vector<int> colors);

    static ColoredPermutation identity(int r, int n);

    int r() const { return r_; }
    int n() const { return static_cast<int>(images_.size()); }

    // 1-based accessors: image(i) = |g|(i), color(i) = z_i(g)
    int image(int i) const { return images_[i - 1] + 1; }
    int color(int i) const { return colors_[i - 1]; }

    const std::vector<int>& images() const { return images_; }
    const std::vector<int>& colors() const { return colors_; }

    bool is_identity() const;

    bool operator==(const ColoredPermutation& other) const = default;
    auto operator<=>(const ColoredPermutation& other) const = default;

private:
    int r_ = 1;
    std::vector<int> images_;  // 0-based, images_[i] = |g|(i+1) - 1
    std::vector<int> colors_;  // colors_[i] = z_{i+1}(g) in [0, r)
};

struct WindowEntry {
    int value;  // in [1, n]
    int color;  // in [0, r)
};

ColoredPermutation parse_window(int r, const std::vector<WindowEntry>& window);
// Text forms: "[-3,2,-1]" (signs allowed for r = 2 only), "[(1,0),(2,2)]"
// (pairs, any r), bare positive integers mean color 0.
ColoredPermutation parse_window(int r, const std::string& text);
std::string window_string(const ColoredPermutation& g);

// composite of the colored-permutation maps, h applied first
ColoredPermutation multiply(const ColoredPermutation& g, const ColoredPermutation& h);
ColoredPermutation inverse(const ColoredPermutation& g);
ColoredPermutation absolute_value(const ColoredPermutation& g);   // |g|, colors 0
ColoredPermutation color_conjugate(const ColoredPermutation& g);  // entrywise complex conjugate
int color_sum(const ColoredPermutation& g);                       // z(g) mod r

// v |-> |g| v |g|^(-1)
ColoredPermutation absolute_conjugate(const ColoredPermutation& g, const ColoredPermutation& v);

// g * conj(g) = 1; for r in {1,2} this is g^2 = 1
bool is_absolute_involution(const ColoredPermutation& g);

// inversions of |sigma| as unordered pairs {i,j}, 1-based
std::set<std::pair<int, int>> inv_set(const ColoredPermutation& sigma);
// 2-cycles of |tau|; requires |tau| to be an involution
std::set<std::pair<int, int>> pair_set(const ColoredPermutation& tau);
// |Inv(|g|) ∩ Pair(|v|)|
int inv_v(const ColoredPermutation& g, const ColoredPermutation& v);
// sum of z_i(g) z_i(v) mod r
int pairing(const ColoredPermutation& g, const ColoredPermutation& v);

// fixed points j with v(j) = zeta^i j / pairs h<k with v(h) = zeta^i k, v(k) = zeta^i h;
// both require v to be an absolute involution
int fix_stat(const ColoredPermutation& v, int color);
int pair_stat(const ColoredPermutation& v, int color);

// r^n * n!; throws LimitError when the order exceeds limit
std::int64_t group_order(int r, int n, std::int64_t limit = kDefaultElementLimit);

// Deterministic enumeration: permutations in lexicographic order of the image
// sequence, colors in odometer order (last position fastest) within each.
void for_each_element(int r, int n, const std::function<void(const ColoredPermutation&)>& fn,
                      std::int64_t limit = kDefaultElementLimit);
std::vector<ColoredPermutation> enumerate_group(int r, int n,
                                                std::int64_t limit = kDefaultElementLimit);

void for_each_absolute_involution(int r, int n,
                                  const std::function<void(const ColoredPermutation&)>& fn,
                                  std::int64_t limit = kDefaultElementLimit);
std::vector<ColoredPermutation> enumerate_absolute_involutions(
    int r, int n, std::int64_t limit = kDefaultElementLimit);

} // namespace wreath
