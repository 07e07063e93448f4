#include "critdeg/random_family.hpp"

#include <stdexcept>

#include "critdeg/rng.hpp"

namespace critdeg {

namespace {

IntVec random_point(SplitMix64& rng, int n, Int max_coord) {
    IntVec p(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
        p[static_cast<std::size_t>(c)] = static_cast<Int>(rng.below(static_cast<std::uint64_t>(max_coord) + 1));
    return p;
}

LatticePolytope random_member(SplitMix64& rng, int n, Int max_coord,
                              const RandomFamilyOptions& options) {
    int count = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * n - 1)));
    int flat_axis = -1;
    if (options.bias_low_dim) {
        const std::uint64_t kind = rng.below(4);
        if (kind == 0) count = 2;  // propose a segment
        else if (kind == 1 && n >= 2)
            flat_axis = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    }
    std::vector<IntVec> pts;
    Int flat_value = flat_axis >= 0 ? static_cast<Int>(rng.below(static_cast<std::uint64_t>(max_coord) + 1)) : 0;
    for (int i = 0; i < count; ++i) {
        IntVec p = random_point(rng, n, max_coord);
        if (flat_axis >= 0) p[static_cast<std::size_t>(flat_axis)] = flat_value;
        pts.push_back(std::move(p));
    }
    return LatticePolytope::hull(n, std::move(pts));
}

}  // namespace

PolytopeFamily random_family(int n, Int max_coord, std::uint64_t seed,
                             const RandomFamilyOptions& options) {
    if (n < 1 || n > 4) throw std::invalid_argument("random_family: n must be in [1,4]");
    if (max_coord < 1) throw std::invalid_argument("random_family: max_coord must be >= 1");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        std::vector<LatticePolytope> members;
        for (int i = 0; i <= n; ++i) members.push_back(random_member(rng, n, max_coord, options));

        bool ok = true;
        if (options.require_full_dim)
            for (const auto& m : members) ok &= (m.dim() == n);
        if (ok && options.require_segment) {
            bool has_segment = false;
            for (const auto& m : members) has_segment |= (m.dim() == 1);
            ok = has_segment;
        }
        if (!ok) continue;

        PolytopeFamily family(n, std::move(members));
        if (is_essential(family).essential) return family;
    }
    throw std::runtime_error("random_family: attempt budget exhausted");
}

}  // namespace critdeg
