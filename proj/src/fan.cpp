#include "critdeg/fan.hpp"

#include <algorithm>
#include <stdexcept>

namespace critdeg {

namespace {

// A complete fan's rays positively span R^n: the cone {u : <n_j, u> >= 0}
// intersected with the unit box must collapse to the origin.
bool rays_positively_span(const std::vector<IntVec>& rays, int n) {
    std::vector<IntVec> normals = rays;
    std::vector<Int> rhs(rays.size(), 0);
    for (int i = 0; i < n; ++i) {
        IntVec e(static_cast<std::size_t>(n), 0), me(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        me[static_cast<std::size_t>(i)] = -1;
        normals.push_back(e);
        normals.push_back(me);
        rhs.push_back(-1);
        rhs.push_back(-1);
    }
    for (const auto& v : vertices_of_hrep(normals, rhs))
        if (!is_zero_vec(v.num)) return false;
    return true;
}

}  // namespace

NormalFan normal_fan(const LatticePolytope& delta) {
    if (delta.dim() != delta.ambient_dim())
        throw std::invalid_argument("normal_fan requires a full-dimensional polytope");
    NormalFan fan;
    fan.n = delta.ambient_dim();

    // Full-dimensional polytopes use the identity chart, so chart facets are
    // ambient facets; the facet list is already sorted by normal.
    std::vector<Int> rhs;
    for (const auto& f : delta.chart_facets()) {
        fan.rays.push_back(f.normal);
        rhs.push_back(f.rhs);
    }

    for (const auto& v : delta.vertices()) {
        std::vector<int> cone;
        for (std::size_t j = 0; j < fan.rays.size(); ++j)
            if (dot_wide(fan.rays[j], v) == Wide(rhs[j])) cone.push_back(static_cast<int>(j));
        fan.max_cones.push_back(std::move(cone));
    }

    std::vector<char> used(fan.rays.size(), 0);
    for (const auto& cone : fan.max_cones)
        for (int j : cone) used[static_cast<std::size_t>(j)] = 1;
    for (char u : used)
        if (!u) throw std::logic_error("normal fan ray not incident to any maximal cone");
    if (!rays_positively_span(fan.rays, fan.n))
        throw std::logic_error("normal fan is not complete");
    return fan;
}

IntVec divisor_coeffs(const LatticePolytope& p, const NormalFan& fan) {
    if (p.ambient_dim() != fan.n)
        throw std::invalid_argument("divisor_coeffs: dimension mismatch");
    IntVec a(fan.rays.size());
    std::vector<Int> rhs(fan.rays.size());
    for (std::size_t j = 0; j < fan.rays.size(); ++j) {
        a[j] = checked_int(-p.support_min(fan.rays[j]), "divisor coefficient");
        rhs[j] = -a[j];
    }
    // {m : <m, n_j> >= -a_j} must reconstruct P; otherwise the fan does not
    // refine the normal fan of P.
    std::vector<IntVec> reconstructed;
    for (const auto& v : vertices_of_hrep(fan.rays, rhs)) {
        if (v.den != 1)
            throw std::invalid_argument("fan does not refine the normal fan of the polytope");
        reconstructed.push_back(v.num);
    }
    std::sort(reconstructed.begin(), reconstructed.end());
    if (reconstructed != p.vertices())
        throw std::invalid_argument("fan does not refine the normal fan of the polytope");
    return a;
}

bool is_cartier_nef(const LatticePolytope& p, const NormalFan& fan) {
    if (p.ambient_dim() != fan.n)
        throw std::invalid_argument("is_cartier_nef: dimension mismatch");
    std::vector<Wide> support(fan.rays.size());
    for (std::size_t j = 0; j < fan.rays.size(); ++j) support[j] = p.support_min(fan.rays[j]);
    for (const auto& cone : fan.max_cones) {
        bool found = false;
        for (const auto& v : p.vertices()) {
            bool tight = true;
            for (int j : cone)
                if (dot_wide(fan.rays[static_cast<std::size_t>(j)], v) != support[static_cast<std::size_t>(j)]) {
                    tight = false;
                    break;
                }
            if (tight) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace critdeg
