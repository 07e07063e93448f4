#include "critdeg/theorems.hpp"

#include <map>
#include <stdexcept>

namespace critdeg {

namespace {

using Mask = unsigned int;

std::vector<int> mask_to_subset(Mask mask) {
    std::vector<int> subset;
    for (int i = 0; mask >> i; ++i)
        if (mask & (1u << i)) subset.push_back(i);
    return subset;
}

// Per-family cache of subfamily sums: dimensions from ranks (cheap), hulls
// built incrementally from a cached sub-sum when l* is actually needed.
class SubsetSums {
public:
    explicit SubsetSums(const PolytopeFamily& f) : f_(f) {}

    int dim(Mask mask) {
        auto it = dims_.find(mask);
        if (it != dims_.end()) return it->second;
        const int d = subset_dim(f_, mask_to_subset(mask));
        dims_.emplace(mask, d);
        return d;
    }

    const LatticePolytope& sum(Mask mask) {
        auto it = sums_.find(mask);
        if (it != sums_.end()) return it->second;
        LatticePolytope result = [&] {
            if (mask == 0) return LatticePolytope::origin(f_.n());
            const int top = 31 - __builtin_clz(mask);
            const Mask rest = mask & ~(1u << top);
            if (rest == 0) return f_.member(top);
            return minkowski_sum(sum(rest), f_.member(top));
        }();
        return sums_.emplace(mask, std::move(result)).first->second;
    }

    long long lstar_of(Mask mask) { return sum(mask).lstar(); }

    int n() const { return f_.n(); }

private:
    const PolytopeFamily& f_;
    std::map<Mask, int> dims_;
    std::map<Mask, LatticePolytope> sums_;
};

void require_essential(const PolytopeFamily& f, const char* op) {
    if (!is_essential(f).essential)
        throw std::invalid_argument(std::string(op) + " requires an essential family");
}

int popcount(Mask m) { return __builtin_popcount(m); }

}  // namespace

CodimBounds codim_bounds(const PolytopeFamily& f) {
    require_essential(f, "codim_bounds");
    const int n = f.n();
    SubsetSums cache(f);
    CodimBounds b;
    b.lower = 1;
    b.upper = 1;
    if (n >= 2)
        for (int i = 0; i <= n; ++i)
            if (f.member(i).dim() == 1) b.lower += f.member(i).lstar();
    for (int k = 1; k <= n - 1; ++k)
        for (const auto& subset : subsets_of_size(n + 1, k)) {
            Mask mask = 0;
            for (int i : subset) mask |= (1u << i);
            if (cache.dim(mask) == k) b.upper += cache.lstar_of(mask);
        }
    return b;
}

AbcResult abc_check(const PolytopeFamily& f) {
    require_essential(f, "abc_check");
    const int n = f.n();
    SubsetSums cache(f);
    AbcResult result;
    for (int size = 1; size <= n - 2; ++size) {
        for (const auto& subset : subsets_of_size(n + 1, size)) {
            Mask mask = 0;
            for (int i : subset) mask |= (1u << i);
            if (cache.dim(mask) != size + 1) continue;                    // (a)
            if (cache.lstar_of(mask) == 0) continue;                      // (b)
            bool c_holds = true;                                          // (c)
            for (Mask other = 1; other < (1u << (n + 1)) && c_holds; ++other) {
                if (other & mask) continue;
                const int total = size + popcount(other);
                if (total >= n) continue;
                if (cache.dim(mask | other) <= total) c_holds = false;
            }
            if (!c_holds) result.violators.push_back(subset);
        }
    }
    result.applicable = result.violators.empty();
    return result;
}

std::optional<long long> codim_formula(const PolytopeFamily& f) {
    if (!abc_check(f).applicable) return std::nullopt;
    return codim_bounds(f).upper;
}

std::optional<std::pair<BignefTag, long long>> bignef_case(const PolytopeFamily& f) {
    const int n = f.n();
    bool all_full = true;
    for (int i = 0; i <= n; ++i) all_full &= (f.member(i).dim() == n);
    if (all_full) return std::make_pair(BignefTag::FullDim, 1LL);
    if (n == 2 && is_essential(f).essential) {
        long long value = 1;
        for (int i = 0; i <= n; ++i)
            if (f.member(i).dim() == 1) value += f.member(i).lstar();
        return std::make_pair(BignefTag::Surface, value);
    }
    return std::nullopt;
}

std::vector<std::vector<long long>> e1_table(const PolytopeFamily& f) {
    require_essential(f, "e1_table");
    const int n = f.n();
    SubsetSums cache(f);
    std::vector<std::vector<long long>> table(static_cast<std::size_t>(n) + 2,
                                              std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
    for (Mask mask = 0; mask < (1u << (n + 1)); ++mask) {
        const int p = popcount(mask);
        const int d = cache.dim(mask);
        const int q = n - d;
        if (q < 0 || q > n) continue;
        long long& cell = table[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        // l* is only needed when the subset sum has the right dimension; the
        // empty subset is the origin with l* = 1.
        cell += cache.lstar_of(mask);
    }
    return table;
}

RestrictDelta restrictdelta_check(const PolytopeFamily& f) {
    const int n = f.n();
    if (n < 3) return RestrictDelta::NotApplicable;
    for (int i = 0; i <= n; ++i) {
        const int d = f.member(i).dim();
        if (d != 1 && d != n - 1 && d != n) return RestrictDelta::Violated;
    }
    return RestrictDelta::Ok;
}

std::optional<long long> genfor_formula(const PolytopeFamily& f) {
    const int n = f.n();
    if (n < 3) return std::nullopt;
    if (!is_essential(f).essential) return std::nullopt;
    if (restrictdelta_check(f) != RestrictDelta::Ok) return std::nullopt;

    SubsetSums cache(f);
    long long total = 1;
    for (Mask mask = 1; mask < (1u << (n + 1)); ++mask) {
        const int size = popcount(mask);
        if (size >= n) continue;
        if (cache.dim(mask) != size) continue;
        long long inner = 0;
        // inclusion-exclusion over all subsets of mask, the empty one included
        for (Mask sub = mask;; sub = (sub - 1) & mask) {
            const int sign = ((size - popcount(sub)) % 2 == 0) ? 1 : -1;
            if (cache.dim(sub) == size) inner += sign * cache.lstar_of(sub);
            if (sub == 0) break;
        }
        total += inner;
    }
    return total;
}

}  // namespace critdeg
