#include "wreath/classes.hpp"

#include "wreath/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace wreath {

std::string SymmetricClassLabel::to_string() const {
    std::string out = "f=";
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(fixed[i]);
    }
    out += ";p=";
    for (std::size_t i = 0; i < paired.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(paired[i]);
    }
    return out;
}

void validate(const SymmetricClassLabel& label) {
    if (label.r < 1) throw std::invalid_argument("SymmetricClassLabel: r must be >= 1");
    if (label.fixed.size() != static_cast<std::size_t>(label.r) ||
        label.paired.size() != static_cast<std::size_t>(label.r))
        throw std::invalid_argument("SymmetricClassLabel: vectors must have length r");
    int total = 0;
    for (int f : label.fixed) {
        if (f < 0) throw std::invalid_argument("SymmetricClassLabel: negative entry");
        total += f;
    }
    for (int p : label.paired) {
        if (p < 0) throw std::invalid_argument("SymmetricClassLabel: negative entry");
        total += 2 * p;
    }
    if (total != label.n)
        throw std::invalid_argument("SymmetricClassLabel: sum f_i + 2 p_i != n");
}

SymmetricClassLabel symmetric_class_of(const ColoredPermutation& v) {
    if (!is_absolute_involution(v))
        throw std::invalid_argument("symmetric_class_of: not an absolute involution");
    SymmetricClassLabel label;
    label.r = v.r();
    label.n = v.n();
    label.fixed.assign(v.r(), 0);
    label.paired.assign(v.r(), 0);
    for (int i = 0; i < v.n(); ++i) {
        int j = v.images()[i];
        if (j == i)
            ++label.fixed[v.colors()[i]];
        else if (i < j)
            ++label.paired[v.colors()[i]];
    }
    return label;
}

std::vector<SymmetricClassLabel> enumerate_symmetric_classes(int r, int n) {
    std::vector<SymmetricClassLabel> out;
    std::vector<int> paired(r, 0), fixed(r, 0);
    auto rec_fixed = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == r - 1) {
            fixed[slot] = remaining;
            SymmetricClassLabel label{r, n, fixed, paired};
            out.push_back(std::move(label));
            return;
        }
        for (int f = remaining; f >= 0; --f) {
            fixed[slot] = f;
            self(self, slot + 1, remaining - f);
        }
    };
    auto rec_paired = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == r - 1) {
            paired[slot] = remaining;
            rec_fixed(rec_fixed, 0, n - 2 * std::accumulate(paired.begin(), paired.end(), 0));
            return;
        }
        for (int p = remaining; p >= 0; --p) {
            paired[slot] = p;
            self(self, slot + 1, remaining - p);
        }
    };
    for (int m = 0; 2 * m <= n; ++m) rec_paired(rec_paired, 0, m);
    return out;
}

std::vector<ColoredPermutation> class_members(const SymmetricClassLabel& label,
                                              std::int64_t limit) {
    validate(label);
    std::vector<ColoredPermutation> out;
    for_each_absolute_involution(
        label.r, label.n,
        [&](const ColoredPermutation& v) {
            if (symmetric_class_of(v) == label) out.push_back(v);
        },
        limit);
    return out;
}

std::int64_t class_size(const SymmetricClassLabel& label) {
    validate(label);
    std::int64_t denom = 1;
    for (int f : label.fixed)
        for (int k = 2; k <= f; ++k) denom *= k;
    for (int p : label.paired) {
        for (int k = 2; k <= p; ++k) denom *= k;
        for (int k = 0; k < p; ++k) denom *= 2;
    }
    std::int64_t numer = 1;
    for (int k = 2; k <= label.n; ++k) numer *= k;
    return numer / denom;
}

ColoredPermutation canonical_representative(const SymmetricClassLabel& label) {
    validate(label);
    std::vector<int> images(label.n), colors(label.n);
    int pos = 0;
    for (int s = 0; s < label.r; ++s) {
        for (int p = 0; p < label.paired[s]; ++p) {
            images[pos] = pos + 1;
            images[pos + 1] = pos;
            colors[pos] = s;
            colors[pos + 1] = s;
            pos += 2;
        }
    }
    for (int s = 0; s < label.r; ++s) {
        for (int f = 0; f < label.fixed[s]; ++f) {
            images[pos] = pos;
            colors[pos] = s;
            ++pos;
        }
    }
    return ColoredPermutation(label.r, std::move(images), std::move(colors));
}

std::vector<ColoredPermutation> absolute_stabilizer(const ColoredPermutation& v,
                                                    std::int64_t limit) {
    std::vector<ColoredPermutation> out;
    for_each_element(
        v.r(), v.n(),
        [&](const ColoredPermutation& g) {
            if (absolute_conjugate(g, v) == v) out.push_back(g);
        },
        limit);
    return out;
}

std::vector<ColoredPermutation> pair_block_stabilizer(int r, const std::vector<int>& pair_counts) {
    int m = std::accumulate(pair_counts.begin(), pair_counts.end(), 0);
    int n = 2 * m;
    std::vector<int> block_start;
    int acc = 0;
    for (int q : pair_counts) {
        if (q < 0) throw std::invalid_argument("pair_block_stabilizer: negative count");
        block_start.push_back(acc);
        acc += q;
    }

    std::vector<ColoredPermutation> out;
    std::vector<int> pair_target(m);
    auto emit_block = [&](auto&& self, std::size_t block) -> void {
        if (block == pair_counts.size()) {
            for (int flips = 0; flips < (1 << m); ++flips) {
                std::vector<int> images(n);
                for (int i = 0; i < m; ++i) {
                    int lo = 2 * pair_target[i], hi = lo + 1;
                    if (flips & (1 << i)) std::swap(lo, hi);
                    images[2 * i] = lo;
                    images[2 * i + 1] = hi;
                }
                std::vector<int> colors(n, 0);
                while (true) {
                    out.emplace_back(r, images, colors);
                    int pos = n - 1;
                    while (pos >= 0 && colors[pos] == r - 1) colors[pos--] = 0;
                    if (pos < 0) break;
                    ++colors[pos];
                }
            }
            return;
        }
        std::vector<int> targets(pair_counts[block]);
        std::iota(targets.begin(), targets.end(), block_start[block]);
        do {
            for (int i = 0; i < pair_counts[block]; ++i)
                pair_target[block_start[block] + i] = targets[i];
            self(self, block + 1);
        } while (std::next_permutation(targets.begin(), targets.end()));
    };
    emit_block(emit_block, 0);
    return out;
}

std::vector<MultiPartition> shapes_of_class(const SymmetricClassLabel& label) {
    validate(label);
    std::vector<MultiPartition> out;
    for (const MultiPartition& mu : multipartitions(label.r, label.n)) {
        bool match = true;
        for (int i = 0; i < label.r && match; ++i) {
            const Partition& comp = mu.component(i);
            if (comp.size() != label.fixed[i] + 2 * label.paired[i] ||
                odd_columns(comp) != label.fixed[i])
                match = false;
        }
        if (match) out.push_back(mu);
    }
    return out;
}

std::string ConjClassLabel::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int s = 0; s < r; ++s) {
        for (int len : cycles[s].parts()) {
            if (!first) out += ",";
            first = false;
            out += "(" + std::to_string(len) + "," + std::to_string(s) + ")";
        }
    }
    return out + "}";
}

ConjClassLabel conj_class_of(const ColoredPermutation& g) {
    ConjClassLabel label;
    label.r = g.r();
    label.n = g.n();
    std::vector<std::vector<int>> lengths(g.r());
    std::vector<bool> seen(g.n(), false);
    for (int i = 0; i < g.n(); ++i) {
        if (seen[i]) continue;
        int len = 0, color = 0, j = i;
        do {
            seen[j] = true;
            ++len;
            color = (color + g.colors()[j]) % g.r();
            j = g.images()[j];
        } while (j != i);
        lengths[color].push_back(len);
    }
    for (int s = 0; s < g.r(); ++s) {
        std::sort(lengths[s].rbegin(), lengths[s].rend());
        label.cycles.emplace_back(std::move(lengths[s]));
    }
    return label;
}

std::int64_t centralizer_order(const ConjClassLabel& label) {
    std::int64_t order = 1;
    for (int s = 0; s < label.r; ++s) {
        const auto& parts = label.cycles[s].parts();
        std::size_t i = 0;
        while (i < parts.size()) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            std::int64_t mult = static_cast<std::int64_t>(j - i);
            for (std::int64_t k = 2; k <= mult; ++k) order *= k;
            for (std::int64_t k = 0; k < mult; ++k)
                order *= static_cast<std::int64_t>(parts[i]) * label.r;
            i = j;
        }
    }
    return order;
}

int total_color(const ConjClassLabel& label) {
    int z = 0;
    for (int s = 0; s < label.r; ++s) z = (z + s * label.cycles[s].rows()) % label.r;
    return z;
}

Partition cycle_type(const ConjClassLabel& label) {
    std::vector<int> parts;
    for (const Partition& slot : label.cycles)
        parts.insert(parts.end(), slot.parts().begin(), slot.parts().end());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

int permutation_sign(const ConjClassLabel& label) {
    int cycles = 0;
    for (const Partition& slot : label.cycles) cycles += slot.rows();
    return (label.n - cycles) % 2 == 0 ? 1 : -1;
}

ConjClassTable::ConjClassTable(int r, int n) : r_(r), n_(n) {
    // the table itself never enumerates the group, so the budget here only
    // protects the int64 size arithmetic
    order_ = wreath::group_order(r, n, 1'000'000'000'000'000LL);
    for (const MultiPartition& mu : multipartitions(r, n)) {
        ConjClass entry;
        entry.label.r = r;
        entry.label.n = n;
        entry.label.cycles = mu.components();
        entry.size = order_ / centralizer_order(entry.label);

        std::vector<int> images(n), colors(n, 0);
        int pos = 0;
        for (int s = 0; s < r; ++s) {
            for (int len : entry.label.cycles[s].parts()) {
                for (int k = 0; k < len - 1; ++k) images[pos + k] = pos + k + 1;
                images[pos + len - 1] = pos;
                colors[pos] = s;
                pos += len;
            }
        }
        entry.representative = ColoredPermutation(r, std::move(images), std::move(colors));
        classes_.push_back(std::move(entry));
    }
    std::vector<int> perm(classes_.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return classes_[a].label < classes_[b].label; });
    for (int idx : perm) {
        sorted_labels_.push_back(classes_[idx].label);
        sorted_index_.push_back(idx);
    }
}

int ConjClassTable::index_of(const ConjClassLabel& label) const {
    auto it = std::lower_bound(sorted_labels_.begin(), sorted_labels_.end(), label);
    if (it == sorted_labels_.end() || !(*it == label))
        throw std::invalid_argument("ConjClassTable: unknown class label");
    return sorted_index_[static_cast<std::size_t>(it - sorted_labels_.begin())];
}

const ConjClassTable& conj_classes(int r, int n) {
    static std::map<std::pair<int, int>, ConjClassTable> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(r, n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, ConjClassTable(r, n)).first;
    return it->second;
}

} // namespace wreath
