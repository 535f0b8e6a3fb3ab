#include "wreath/colored_permutation.hpp"

#include "wreath/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace wreath {

ColoredPermutation::ColoredPermutation(int r, std::vector<int> images, std::vector<int> colors)
    : r_(r), images_(std::move(images)), colors_(std::move(colors)) {
    if (r_ < 1) throw std::invalid_argument("ColoredPermutation: r must be >= 1");
    if (images_.size() != colors_.size())
        throw std::invalid_argument("ColoredPermutation: length mismatch");
    int n = static_cast<int>(images_.size());
    std::vector<bool> seen(n, false);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("ColoredPermutation: images not a bijection");
        seen[v] = true;
    }
    for (int c : colors_)
        if (c < 0 || c >= r_)
            throw std::invalid_argument("ColoredPermutation: color out of range");
}

ColoredPermutation ColoredPermutation::identity(int r, int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    return ColoredPermutation(r, std::move(images), std::vector<int>(n, 0));
}

bool ColoredPermutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (images_[i] != i || colors_[i] != 0) return false;
    return true;
}

ColoredPermutation parse_window(int r, const std::vector<WindowEntry>& window) {
    int n = static_cast<int>(window.size());
    std::vector<int> images(n), colors(n);
    for (int i = 0; i < n; ++i) {
        if (window[i].value < 1 || window[i].value > n)
            throw std::invalid_argument("parse_window: value out of range");
        images[i] = window[i].value - 1;
        colors[i] = window[i].color;
    }
    return ColoredPermutation(r, std::move(images), std::move(colors));
}

namespace {

void skip_spaces(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

int parse_int(const std::string& s, std::size_t& pos) {
    skip_spaces(s, pos);
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw std::invalid_argument("parse_window: expected integer");
    return std::stoi(s.substr(start, pos - start));
}

} // namespace

ColoredPermutation parse_window(int r, const std::string& text) {
    std::size_t pos = 0;
    skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != '[')
        throw std::invalid_argument("parse_window: expected '['");
    ++pos;
    std::vector<WindowEntry> entries;
    skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            skip_spaces(text, pos);
            if (pos < text.size() && text[pos] == '(') {
                ++pos;
                int value = parse_int(text, pos);
                skip_spaces(text, pos);
                if (pos >= text.size() || text[pos] != ',')
                    throw std::invalid_argument("parse_window: expected ',' in pair");
                ++pos;
                int color = parse_int(text, pos);
                skip_spaces(text, pos);
                if (pos >= text.size() || text[pos] != ')')
                    throw std::invalid_argument("parse_window: expected ')'");
                ++pos;
                entries.push_back({value, color});
            } else {
                int value = parse_int(text, pos);
                if (value < 0) {
                    if (r != 2)
                        throw std::invalid_argument(
                            "parse_window: signed entries are only valid for r = 2");
                    entries.push_back({-value, 1});
                } else {
                    entries.push_back({value, 0});
                }
            }
            skip_spaces(text, pos);
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                break;
            }
            throw std::invalid_argument("parse_window: expected ',' or ']'");
        }
    }
    skip_spaces(text, pos);
    if (pos != text.size()) throw std::invalid_argument("parse_window: trailing characters");
    return parse_window(r, entries);
}

std::string window_string(const ColoredPermutation& g) {
    std::string out = "[";
    for (int i = 1; i <= g.n(); ++i) {
        if (i > 1) out += ",";
        if (g.r() <= 2) {
            if (g.color(i) == 1) out += "-";
            out += std::to_string(g.image(i));
        } else {
            out += "(" + std::to_string(g.image(i)) + "," + std::to_string(g.color(i)) + ")";
        }
    }
    return out + "]";
}

ColoredPermutation multiply(const ColoredPermutation& g, const ColoredPermutation& h) {
    if (g.r() != h.r() || g.n() != h.n())
        throw std::invalid_argument("multiply: mismatched r or n");
    int n = g.n(), r = g.r();
    std::vector<int> images(n), colors(n);
    for (int i = 0; i < n; ++i) {
        int mid = h.images()[i];
        images[i] = g.images()[mid];
        colors[i] = (h.colors()[i] + g.colors()[mid]) % r;
    }
    return ColoredPermutation(r, std::move(images), std::move(colors));
}

ColoredPermutation inverse(const ColoredPermutation& g) {
    int n = g.n(), r = g.r();
    std::vector<int> images(n), colors(n);
    for (int i = 0; i < n; ++i) {
        int j = g.images()[i];
        images[j] = i;
        colors[j] = (r - g.colors()[i]) % r;
    }
    return ColoredPermutation(r, std::move(images), std::move(colors));
}

ColoredPermutation absolute_value(const ColoredPermutation& g) {
    return ColoredPermutation(g.r(), g.images(), std::vector<int>(g.n(), 0));
}

ColoredPermutation color_conjugate(const ColoredPermutation& g) {
    int r = g.r();
    std::vector<int> colors(g.n());
    for (int i = 0; i < g.n(); ++i) colors[i] = (r - g.colors()[i]) % r;
    return ColoredPermutation(r, g.images(), std::move(colors));
}

int color_sum(const ColoredPermutation& g) {
    int s = 0;
    for (int c : g.colors()) s = (s + c) % g.r();
    return s;
}

ColoredPermutation absolute_conjugate(const ColoredPermutation& g, const ColoredPermutation& v) {
    if (g.r() != v.r() || g.n() != v.n())
        throw std::invalid_argument("absolute_conjugate: mismatched r or n");
    int n = g.n();
    std::vector<int> images(n), colors(n);
    for (int j = 0; j < n; ++j) {
        images[g.images()[j]] = g.images()[v.images()[j]];
        colors[g.images()[j]] = v.colors()[j];
    }
    return ColoredPermutation(g.r(), std::move(images), std::move(colors));
}

bool is_absolute_involution(const ColoredPermutation& g) {
    // g * conj(g) = 1 unfolds to: |g| an involution and colors constant on
    // its 2-cycles
    for (int i = 0; i < g.n(); ++i) {
        int j = g.images()[i];
        if (g.images()[j] != i) return false;
        if (g.colors()[j] != g.colors()[i]) return false;
    }
    return true;
}

std::set<std::pair<int, int>> inv_set(const ColoredPermutation& sigma) {
    std::set<std::pair<int, int>> out;
    for (int i = 0; i < sigma.n(); ++i)
        for (int j = i + 1; j < sigma.n(); ++j)
            if (sigma.images()[i] > sigma.images()[j]) out.insert({i + 1, j + 1});
    return out;
}

std::set<std::pair<int, int>> pair_set(const ColoredPermutation& tau) {
    std::set<std::pair<int, int>> out;
    for (int i = 0; i < tau.n(); ++i) {
        int j = tau.images()[i];
        if (tau.images()[j] != i)
            throw std::invalid_argument("pair_set: |tau| is not an involution");
        if (i < j) out.insert({i + 1, j + 1});
    }
    return out;
}

int inv_v(const ColoredPermutation& g, const ColoredPermutation& v) {
    if (g.r() != v.r() || g.n() != v.n()) throw std::invalid_argument("inv_v: mismatched r or n");
    int count = 0;
    for (int i = 0; i < v.n(); ++i) {
        int j = v.images()[i];
        if (v.images()[j] != i) throw std::invalid_argument("inv_v: |v| is not an involution");
        if (i < j && g.images()[i] > g.images()[j]) ++count;
    }
    return count;
}

int pairing(const ColoredPermutation& g, const ColoredPermutation& v) {
    if (g.r() != v.r() || g.n() != v.n())
        throw std::invalid_argument("pairing: mismatched r or n");
    int s = 0;
    for (int i = 0; i < g.n(); ++i) s = (s + g.colors()[i] * v.colors()[i]) % g.r();
    return s;
}

int fix_stat(const ColoredPermutation& v, int color) {
    if (!is_absolute_involution(v))
        throw std::invalid_argument("fix_stat: not an absolute involution");
    if (color < 0 || color >= v.r()) throw std::invalid_argument("fix_stat: color out of range");
    int count = 0;
    for (int i = 0; i < v.n(); ++i)
        if (v.images()[i] == i && v.colors()[i] == color) ++count;
    return count;
}

int pair_stat(const ColoredPermutation& v, int color) {
    if (!is_absolute_involution(v))
        throw std::invalid_argument("pair_stat: not an absolute involution");
    if (color < 0 || color >= v.r()) throw std::invalid_argument("pair_stat: color out of range");
    int count = 0;
    for (int i = 0; i < v.n(); ++i) {
        int j = v.images()[i];
        if (i < j && v.colors()[i] == color) ++count;
    }
    return count;
}

std::int64_t group_order(int r, int n, std::int64_t limit) {
    std::int64_t order = 1;
    for (int i = 0; i < n; ++i) {
        order *= r;
        if (order > limit) throw LimitError("group_order: r^n * n! exceeds limit");
        order *= (i + 1);
        if (order > limit) throw LimitError("group_order: r^n * n! exceeds limit");
    }
    return order;
}

void for_each_element(int r, int n, const std::function<void(const ColoredPermutation&)>& fn,
                      std::int64_t limit) {
    group_order(r, n, limit);
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    do {
        std::vector<int> colors(n, 0);
        while (true) {
            fn(ColoredPermutation(r, images, colors));
            int pos = n - 1;
            while (pos >= 0 && colors[pos] == r - 1) colors[pos--] = 0;
            if (pos < 0) break;
            ++colors[pos];
        }
    } while (std::next_permutation(images.begin(), images.end()));
}

std::vector<ColoredPermutation> enumerate_group(int r, int n, std::int64_t limit) {
    std::vector<ColoredPermutation> out;
    out.reserve(static_cast<std::size_t>(group_order(r, n, limit)));
    for_each_element(r, n, [&](const ColoredPermutation& g) { out.push_back(g); }, limit);
    return out;
}

void for_each_absolute_involution(int r, int n,
                                  const std::function<void(const ColoredPermutation&)>& fn,
                                  std::int64_t limit) {
    for_each_element(
        r, n,
        [&](const ColoredPermutation& g) {
            if (is_absolute_involution(g)) fn(g);
        },
        limit);
}

std::vector<ColoredPermutation> enumerate_absolute_involutions(int r, int n, std::int64_t limit) {
    std::vector<ColoredPermutation> out;
    for_each_absolute_involution(r, n, [&](const ColoredPermutation& g) { out.push_back(g); },
                                 limit);
    return out;
}

} // namespace wreath
