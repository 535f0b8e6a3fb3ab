#include "wreath/tableaux.hpp"

#include "wreath/bigint.hpp"
#include "wreath/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wreath {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            current.push_back(k);
            self(self, remaining - k, k);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> parts;
    int cols = lambda.empty() ? 0 : lambda.parts()[0];
    for (int j = 0; j < cols; ++j) {
        int h = 0;
        for (int p : lambda.parts())
            if (p > j) ++h;
        parts.push_back(h);
    }
    return Partition(std::move(parts));
}

Partition single_row(int k) {
    if (k < 0) throw std::invalid_argument("single_row: negative size");
    if (k == 0) return Partition();
    return Partition({k});
}

int odd_columns(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    int count = 0;
    for (int h : conj.parts())
        if (h % 2 == 1) ++count;
    return count;
}

MultiPartition::MultiPartition(std::vector<Partition> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("MultiPartition: needs >= 1 component");
}

int MultiPartition::size() const {
    int s = 0;
    for (const Partition& p : components_) s += p.size();
    return s;
}

std::string MultiPartition::to_string() const {
    std::string out = "(";
    for (int i = 0; i < r(); ++i) {
        if (i > 0) out += ",";
        out += components_[i].to_string();
    }
    return out + ")";
}

std::vector<MultiPartition> multipartitions(int r, int n) {
    if (r < 1) throw std::invalid_argument("multipartitions: r must be >= 1");
    std::vector<MultiPartition> out;
    std::vector<Partition> current;
    auto rec = [&](auto&& self, int component, int remaining) -> void {
        if (component == r - 1) {
            for (const Partition& p : partitions(remaining)) {
                current.push_back(p);
                out.emplace_back(current);
                current.pop_back();
            }
            return;
        }
        for (int s = remaining; s >= 0; --s) {
            for (const Partition& p : partitions(s)) {
                current.push_back(p);
                self(self, component + 1, remaining - s);
                current.pop_back();
            }
        }
    };
    rec(rec, 0, n);
    return out;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) throw std::invalid_argument("Tableau: empty row");
        if (i > 0 && rows_[i].size() > rows_[i - 1].size())
            throw std::invalid_argument("Tableau: row lengths must weakly decrease");
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j > 0 && rows_[i][j] <= rows_[i][j - 1])
                throw std::invalid_argument("Tableau: rows must increase");
            if (i > 0 && rows_[i][j] <= rows_[i - 1][j])
                throw std::invalid_argument("Tableau: columns must increase");
        }
    }
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int Tableau::entries() const {
    int s = 0;
    for (const auto& row : rows_) s += static_cast<int>(row.size());
    return s;
}

StandardMultiTableau::StandardMultiTableau(std::vector<Tableau> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw std::invalid_argument("StandardMultiTableau: needs >= 1 component");
    std::set<int> seen;
    int total = 0;
    for (const Tableau& t : components_)
        for (const auto& row : t.rows())
            for (int e : row) {
                seen.insert(e);
                ++total;
            }
    if (static_cast<int>(seen.size()) != total || (total > 0 && (*seen.begin() != 1 || *seen.rbegin() != total)))
        throw std::invalid_argument("StandardMultiTableau: entries must be exactly 1..n");
}

int StandardMultiTableau::size() const {
    int s = 0;
    for (const Tableau& t : components_) s += t.entries();
    return s;
}

MultiPartition StandardMultiTableau::shape() const {
    std::vector<Partition> shapes;
    for (const Tableau& t : components_) shapes.push_back(t.shape());
    return MultiPartition(std::move(shapes));
}

std::vector<StandardMultiTableau> standard_multitableaux(const MultiPartition& mu) {
    int n = mu.size();
    int r = mu.r();
    // cells[c][i][j] filled by placing n, n-1, ..., 1 at removable corners
    std::vector<std::vector<std::vector<int>>> cells(r);
    std::vector<std::vector<int>> filled(r);  // occupied boxes per row, per component
    for (int c = 0; c < r; ++c) {
        const auto& parts = mu.component(c).parts();
        cells[c].resize(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i) cells[c][i].resize(parts[i], 0);
        filled[c].assign(parts.size(), 0);
        for (std::size_t i = 0; i < parts.size(); ++i) filled[c][i] = parts[i];
    }
    std::vector<StandardMultiTableau> out;
    auto rec = [&](auto&& self, int value) -> void {
        if (value == 0) {
            std::vector<Tableau> comps;
            for (int c = 0; c < r; ++c) {
                std::vector<std::vector<int>> rows;
                for (const auto& row : cells[c])
                    if (!row.empty()) rows.push_back(row);
                comps.emplace_back(std::move(rows));
            }
            out.emplace_back(std::move(comps));
            return;
        }
        for (int c = 0; c < r; ++c) {
            for (std::size_t i = 0; i < filled[c].size(); ++i) {
                if (filled[c][i] == 0) continue;
                if (i + 1 < filled[c].size() && filled[c][i + 1] >= filled[c][i]) continue;
                int col = filled[c][i] - 1;
                cells[c][i][col] = value;
                --filled[c][i];
                self(self, value - 1);
                ++filled[c][i];
            }
        }
    };
    rec(rec, n);
    return out;
}

namespace {

std::int64_t hook_count(const Partition& lambda) {
    int n = lambda.size();
    if (n > 20) throw LimitError("count_standard: partition too large for exact int64 result");
    Partition conj = conjugate(lambda);
    std::int64_t hooks = 1;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j)
            hooks *= lambda.parts()[i] - j + conj.parts()[j] - i - 1;
    return factorial(n).divide_exact(hooks).to_int64();
}

} // namespace

std::int64_t count_standard(const MultiPartition& mu) {
    int n = mu.size();
    if (n > 20) throw LimitError("count_standard: size too large for exact int64 result");
    BigInt result = factorial(n);
    for (const Partition& comp : mu.components()) {
        std::int64_t size_fact = 1;
        for (int k = 2; k <= comp.size(); ++k) size_fact *= k;
        result = result.divide_exact(size_fact);
        result *= BigInt(hook_count(comp));
    }
    return result.to_int64();
}

std::pair<Tableau, Tableau> rs_classical(const TwoLineArray& array) {
    if (array.top.size() != array.bottom.size())
        throw std::invalid_argument("rs_classical: line lengths differ");
    for (std::size_t k = 1; k < array.top.size(); ++k)
        if (array.top[k] <= array.top[k - 1])
            throw std::invalid_argument("rs_classical: top line must strictly increase");
    std::set<int> distinct(array.bottom.begin(), array.bottom.end());
    if (distinct.size() != array.bottom.size())
        throw std::invalid_argument("rs_classical: bottom line must be distinct");

    std::vector<std::vector<int>> p, q;
    for (std::size_t k = 0; k < array.bottom.size(); ++k) {
        int x = array.bottom[k];
        std::size_t row = 0;
        while (true) {
            if (row == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
            if (it == p[row].end()) {
                p[row].push_back(x);
                q[row].push_back(array.top[k]);
                break;
            }
            std::swap(x, *it);
            ++row;
        }
    }
    return {Tableau(std::move(p)), Tableau(std::move(q))};
}

TwoLineArray rs_classical_inverse(const Tableau& p, const Tableau& q) {
    if (p.shape() != q.shape()) throw std::invalid_argument("rs_classical_inverse: shape mismatch");
    std::vector<std::vector<int>> pv = p.rows();
    // locate recording entries largest first
    std::vector<std::pair<int, std::pair<int, int>>> order;  // (entry, (row, col))
    for (std::size_t i = 0; i < q.rows().size(); ++i)
        for (std::size_t j = 0; j < q.rows()[i].size(); ++j)
            order.push_back({q.rows()[i][j], {static_cast<int>(i), static_cast<int>(j)}});
    std::sort(order.begin(), order.end());
    TwoLineArray out;
    out.top.resize(order.size());
    out.bottom.resize(order.size());
    for (std::size_t k = order.size(); k-- > 0;) {
        auto [entry, cell] = order[k];
        auto [row, col] = cell;
        if (col != static_cast<int>(pv[row].size()) - 1)
            throw std::invalid_argument("rs_classical_inverse: recording entry not at a corner");
        int x = pv[row].back();
        pv[row].pop_back();
        for (int r2 = row - 1; r2 >= 0; --r2) {
            auto it = std::lower_bound(pv[r2].begin(), pv[r2].end(), x);
            if (it == pv[r2].begin())
                throw std::invalid_argument("rs_classical_inverse: malformed tableau pair");
            --it;  // rightmost entry < x
            std::swap(*it, x);
        }
        out.top[k] = entry;
        out.bottom[k] = x;
    }
    return out;
}

std::pair<StandardMultiTableau, StandardMultiTableau> rsk(const ColoredPermutation& g) {
    std::vector<Tableau> ps, qs;
    for (int color = 0; color < g.r(); ++color) {
        TwoLineArray array;
        for (int i = 1; i <= g.n(); ++i) {
            if (g.color(i) == color) {
                array.top.push_back(i);
                array.bottom.push_back(g.image(i));
            }
        }
        auto [p, q] = rs_classical(array);
        ps.push_back(std::move(p));
        qs.push_back(std::move(q));
    }
    return {StandardMultiTableau(std::move(ps)), StandardMultiTableau(std::move(qs))};
}

ColoredPermutation inverse_rsk(const StandardMultiTableau& p, const StandardMultiTableau& q,
                               int r) {
    if (p.r() != r || q.r() != r) throw std::invalid_argument("inverse_rsk: component count");
    if (p.shape() != q.shape()) throw std::invalid_argument("inverse_rsk: shape mismatch");
    int n = p.size();
    std::vector<int> images(n, -1), colors(n, -1);
    for (int color = 0; color < r; ++color) {
        TwoLineArray array = rs_classical_inverse(p.component(color), q.component(color));
        for (std::size_t k = 0; k < array.top.size(); ++k) {
            images[array.top[k] - 1] = array.bottom[k] - 1;
            colors[array.top[k] - 1] = color;
        }
    }
    return ColoredPermutation(r, std::move(images), std::move(colors));
}

MultiPartition shape_of(const ColoredPermutation& v) {
    if (!is_absolute_involution(v))
        throw std::invalid_argument("shape_of: not an absolute involution");
    return rsk(v).first.shape();
}

} // namespace wreath
