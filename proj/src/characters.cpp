#include "wreath/characters.hpp"

#include "wreath/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wreath {

ClassFunction::ClassFunction(int r, int n)
    : r_(r), n_(n),
      values_(conj_classes(r, n).classes().size(), CyclotomicInt(r)) {}

const CyclotomicInt& ClassFunction::at(const ConjClassLabel& label) const {
    return values_[conj_classes(r_, n_).index_of(label)];
}

const CyclotomicInt& ClassFunction::at(const ColoredPermutation& g) const {
    return at(conj_class_of(g));
}

CyclotomicInt ClassFunction::degree() const {
    ConjClassLabel identity;
    identity.r = r_;
    identity.n = n_;
    identity.cycles.assign(r_, Partition());
    if (n_ > 0) identity.cycles[0] = Partition(std::vector<int>(n_, 1));
    return at(identity);
}

ClassFunction ClassFunction::operator+(const ClassFunction& other) const {
    if (r_ != other.r_ || n_ != other.n_)
        throw std::invalid_argument("ClassFunction: mismatched groups");
    ClassFunction out(r_, n_);
    for (std::size_t i = 0; i < values_.size(); ++i)
        out.values_[i] = values_[i] + other.values_[i];
    return out;
}

ClassFunction ClassFunction::operator-(const ClassFunction& other) const {
    if (r_ != other.r_ || n_ != other.n_)
        throw std::invalid_argument("ClassFunction: mismatched groups");
    ClassFunction out(r_, n_);
    for (std::size_t i = 0; i < values_.size(); ++i)
        out.values_[i] = values_[i] - other.values_[i];
    return out;
}

ClassFunction ClassFunction::operator*(const ClassFunction& other) const {
    if (r_ != other.r_ || n_ != other.n_)
        throw std::invalid_argument("ClassFunction: mismatched groups");
    ClassFunction out(r_, n_);
    for (std::size_t i = 0; i < values_.size(); ++i)
        out.values_[i] = values_[i] * other.values_[i];
    return out;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
    if (r_ != other.r_ || n_ != other.n_)
        throw std::invalid_argument("ClassFunction: mismatched groups");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

namespace {

std::vector<int> beta_set(const std::vector<int>& parts) {
    int m = static_cast<int>(parts.size());
    std::vector<int> beta(parts.size());
    for (int i = 0; i < m; ++i) beta[i] = parts[i] + (m - 1 - i);
    return beta;  // strictly decreasing
}

std::vector<int> partition_from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    int m = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < m; ++i) {
        int part = beta[i] - (m - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return parts;
}

std::int64_t murnaghan_nakayama(const std::vector<int>& parts, const std::vector<int>& type,
                                std::size_t depth) {
    if (depth == 0) return 1;
    int k = type[depth - 1];
    std::vector<int> beta = beta_set(parts);
    std::int64_t total = 0;
    for (std::size_t b = 0; b < beta.size(); ++b) {
        int target = beta[b] - k;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (std::size_t a = 0; a < beta.size(); ++a) {
            if (beta[a] == target) occupied = true;
            if (beta[a] > target && beta[a] < beta[b]) ++height;
        }
        if (occupied) continue;
        std::vector<int> next = beta;
        next[b] = target;
        std::int64_t sub = murnaghan_nakayama(partition_from_beta(std::move(next)), type, depth - 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    return total;
}

} // namespace

std::int64_t symmetric_character(const Partition& lambda, const Partition& type) {
    if (lambda.size() != type.size())
        throw std::invalid_argument("symmetric_character: size mismatch");
    return murnaghan_nakayama(lambda.parts(), type.parts(), type.parts().size());
}

ClassFunction trivial_character(int r, int n) {
    ClassFunction out(r, n);
    for (int i = 0; i < out.class_count(); ++i) out.at_index(i) = CyclotomicInt(r, 1);
    return out;
}

ClassFunction gamma_character(int r, int n, int power) {
    if (power < 0 || power >= r) throw std::invalid_argument("gamma_character: power range");
    ClassFunction out(r, n);
    const ConjClassTable& table = conj_classes(r, n);
    for (int i = 0; i < out.class_count(); ++i) {
        int z = total_color(table.classes()[i].label);
        out.at_index(i) = CyclotomicInt::root_power(r, static_cast<std::int64_t>(power) * z);
    }
    return out;
}

ClassFunction sign_character(int r, int n) {
    ClassFunction out(r, n);
    const ConjClassTable& table = conj_classes(r, n);
    for (int i = 0; i < out.class_count(); ++i)
        out.at_index(i) = CyclotomicInt(r, permutation_sign(table.classes()[i].label));
    return out;
}

ClassFunction induce_blocks(const std::vector<ClassFunction>& factors) {
    if (factors.empty()) throw std::invalid_argument("induce_blocks: no factors");
    int r = factors[0].r();
    int total = 0;
    std::int64_t subgroup_order = 1;
    for (const ClassFunction& f : factors) {
        if (f.r() != r) throw std::invalid_argument("induce_blocks: mixed r");
        total += f.n();
        subgroup_order *= group_order(r, f.n(), 1'000'000'000'000'000LL);
    }
    const ConjClassTable& big = conj_classes(r, total);
    std::vector<CyclotomicInt> acc(big.classes().size(), CyclotomicInt(r));

    std::vector<std::vector<int>> fused(r);
    auto rec = [&](auto&& self, std::size_t factor, std::int64_t weight,
                   const CyclotomicInt& value) -> void {
        if (factor == factors.size()) {
            ConjClassLabel label;
            label.r = r;
            label.n = total;
            for (int s = 0; s < r; ++s) {
                std::vector<int> parts = fused[s];
                std::sort(parts.rbegin(), parts.rend());
                label.cycles.emplace_back(std::move(parts));
            }
            acc[big.index_of(label)] += value.scaled(weight);
            return;
        }
        const ConjClassTable& table = conj_classes(r, factors[factor].n());
        for (std::size_t i = 0; i < table.classes().size(); ++i) {
            const CyclotomicInt& fv = factors[factor].at_index(static_cast<int>(i));
            if (fv.is_zero()) continue;
            const ConjClassLabel& label = table.classes()[i].label;
            for (int s = 0; s < r; ++s)
                fused[s].insert(fused[s].end(), label.cycles[s].parts().begin(),
                                label.cycles[s].parts().end());
            self(self, factor + 1, weight * table.classes()[i].size, value * fv);
            for (int s = 0; s < r; ++s)
                fused[s].resize(fused[s].size() - label.cycles[s].parts().size());
        }
    };
    rec(rec, 0, 1, CyclotomicInt(r, 1));

    ClassFunction out(r, total);
    for (std::size_t d = 0; d < acc.size(); ++d) {
        std::int64_t centralizer = big.group_order() / big.classes()[d].size;
        out.at_index(static_cast<int>(d)) = acc[d].scaled(centralizer).divide_exact(subgroup_order);
    }
    return out;
}

ClassFunction irreducible_character(int r, const MultiPartition& mu) {
    if (mu.r() != r) throw std::invalid_argument("irreducible_character: component count");
    std::vector<ClassFunction> factors;
    for (int i = 0; i < r; ++i) {
        int ni = mu.component(i).size();
        ClassFunction factor(r, ni);
        const ConjClassTable& table = conj_classes(r, ni);
        for (std::size_t c = 0; c < table.classes().size(); ++c) {
            const ConjClassLabel& label = table.classes()[c].label;
            std::int64_t chi = symmetric_character(mu.component(i), cycle_type(label));
            if (chi == 0) continue;
            factor.at_index(static_cast<int>(c)) =
                CyclotomicInt::root_power(r, static_cast<std::int64_t>(i) * total_color(label))
                    .scaled(chi);
        }
        factors.push_back(std::move(factor));
    }
    return induce_blocks(factors);
}

const std::vector<ClassFunction>& irreducible_characters(int r, int n) {
    static std::map<std::pair<int, int>, std::vector<ClassFunction>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(r, n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<ClassFunction> table;
        for (const MultiPartition& mu : multipartitions(r, n))
            table.push_back(irreducible_character(r, mu));
        it = cache.emplace(key, std::move(table)).first;
    }
    return it->second;
}

std::int64_t inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.r() != b.r() || a.n() != b.n())
        throw std::invalid_argument("inner_product: mismatched groups");
    const ConjClassTable& table = conj_classes(a.r(), a.n());
    CyclotomicInt total(a.r());
    for (int i = 0; i < a.class_count(); ++i) {
        CyclotomicInt term = a.at_index(i) * b.at_index(i).conjugate();
        total += term.scaled(table.classes()[i].size);
    }
    return total.divide_exact(table.group_order()).as_integer().to_int64();
}

namespace {

ConjClassLabel embed_label(const ConjClassLabel& label) {
    ConjClassLabel out = label;
    out.n += 1;
    std::vector<int> parts = out.cycles[0].parts();
    parts.push_back(1);
    out.cycles[0] = Partition(std::move(parts));
    return out;
}

} // namespace

ClassFunction restrict_character(const ClassFunction& a) {
    if (a.n() == 0) throw std::invalid_argument("restrict_character: nothing to restrict");
    ClassFunction out(a.r(), a.n() - 1);
    const ConjClassTable& small = conj_classes(a.r(), a.n() - 1);
    for (std::size_t i = 0; i < small.classes().size(); ++i)
        out.at_index(static_cast<int>(i)) = a.at(embed_label(small.classes()[i].label));
    return out;
}

ClassFunction induce_character(const ClassFunction& a, std::int64_t limit) {
    int r = a.r(), n = a.n();
    group_order(r, n + 1, limit);
    const ConjClassTable& small = conj_classes(r, n);
    const ConjClassTable& big = conj_classes(r, n + 1);
    ClassFunction out(r, n + 1);
    // the embedded copy of G(r,n) meets a class of G(r,n+1) in at most one
    // class of G(r,n), so the averaging formula collapses classwise
    for (std::size_t i = 0; i < small.classes().size(); ++i) {
        const ConjClass& cls = small.classes()[i];
        int d = big.index_of(embed_label(cls.label));
        std::int64_t centralizer = big.group_order() / big.classes()[d].size;
        out.at_index(d) = a.at_index(static_cast<int>(i))
                              .scaled(cls.size * centralizer)
                              .divide_exact(small.group_order());
    }
    return out;
}

ClassFunction induce_from_subgroup(
    int r, int n, const std::vector<ColoredPermutation>& subgroup,
    const std::function<CyclotomicInt(const ColoredPermutation&)>& chi) {
    if (subgroup.empty()) throw std::invalid_argument("induce_from_subgroup: empty subgroup");
    const ConjClassTable& big = conj_classes(r, n);
    std::vector<CyclotomicInt> acc(big.classes().size(), CyclotomicInt(r));
    for (const ColoredPermutation& y : subgroup) acc[big.index_of(y)] += chi(y);
    ClassFunction out(r, n);
    for (std::size_t d = 0; d < acc.size(); ++d) {
        std::int64_t centralizer = big.group_order() / big.classes()[d].size;
        out.at_index(static_cast<int>(d)) =
            acc[d].scaled(centralizer).divide_exact(static_cast<std::int64_t>(subgroup.size()));
    }
    return out;
}

std::vector<MultiPartition> branch_down(const MultiPartition& mu) {
    std::vector<MultiPartition> out;
    for (int c = 0; c < mu.r(); ++c) {
        const std::vector<int>& parts = mu.component(c).parts();
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j + 1 < parts.size() && parts[j] == parts[j + 1]) continue;
            std::vector<int> next = parts;
            if (--next[j] == 0) next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
            std::vector<Partition> comps = mu.components();
            comps[c] = Partition(std::move(next));
            out.emplace_back(std::move(comps));
        }
    }
    return out;
}

std::vector<MultiPartition> branch_up(const MultiPartition& mu) {
    std::vector<MultiPartition> out;
    for (int c = 0; c < mu.r(); ++c) {
        const std::vector<int>& parts = mu.component(c).parts();
        for (std::size_t j = 0; j <= parts.size(); ++j) {
            if (j > 0 && j < parts.size() && parts[j] == parts[j - 1]) continue;
            std::vector<int> next = parts;
            if (j == parts.size())
                next.push_back(1);
            else
                ++next[j];
            std::vector<Partition> comps = mu.components();
            comps[c] = Partition(std::move(next));
            out.emplace_back(std::move(comps));
        }
    }
    return out;
}

namespace {

// horizontal-strip additions of `count` boxes to lambda
std::vector<Partition> strip_additions(const Partition& lambda, int count) {
    const std::vector<int>& parts = lambda.parts();
    int rows = lambda.rows();
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int j, int remaining) -> void {
        if (j == rows + 1) {
            if (remaining == 0) {
                std::vector<int> final = current;
                while (!final.empty() && final.back() == 0) final.pop_back();
                out.emplace_back(std::move(final));
            }
            return;
        }
        int lower = j < rows ? parts[j] : 0;
        int upper = j == 0 ? lower + remaining : std::min(parts[j - 1], lower + remaining);
        for (int v = lower; v <= upper; ++v) {
            current.push_back(v);
            self(self, j + 1, remaining - (v - lower));
            current.pop_back();
        }
    };
    rec(rec, 0, count);
    return out;
}

} // namespace

std::vector<MultiPartition> pieri_summands(const MultiPartition& base,
                                           const std::vector<int>& added) {
    if (added.size() != static_cast<std::size_t>(base.r()))
        throw std::invalid_argument("pieri_summands: added counts must match components");
    for (int a : added)
        if (a < 0) throw std::invalid_argument("pieri_summands: negative count");
    std::vector<MultiPartition> out;
    std::vector<Partition> current;
    auto rec = [&](auto&& self, int c) -> void {
        if (c == base.r()) {
            out.emplace_back(current);
            return;
        }
        for (const Partition& p : strip_additions(base.component(c), added[c])) {
            current.push_back(p);
            self(self, c + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

ClassFunction sign_twist(const ClassFunction& a) {
    ClassFunction out(a.r(), a.n());
    const ConjClassTable& table = conj_classes(a.r(), a.n());
    for (int i = 0; i < a.class_count(); ++i) {
        out.at_index(i) = permutation_sign(table.classes()[i].label) == 1 ? a.at_index(i)
                                                                          : -a.at_index(i);
    }
    return out;
}

} // namespace wreath
