#include "critdeg/grading.hpp"

#include <stdexcept>

namespace critdeg {

DivisorClass make_class(const NormalFan& fan, IntVec coeffs) {
    if (coeffs.size() != fan.rays.size())
        throw std::invalid_argument("divisor class coefficient count must match ray count");
    return {&fan, std::move(coeffs)};
}

bool class_equal(const DivisorClass& a, const DivisorClass& b) {
    if (a.fan != b.fan) throw std::invalid_argument("class_equal: classes on different fans");
    const auto& fan = *a.fan;
    IntMat rays(static_cast<int>(fan.rays.size()), fan.n);
    for (int j = 0; j < rays.rows; ++j)
        for (int i = 0; i < fan.n; ++i) rays.at(j, i) = fan.rays[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return solve_integer(rays, vec_sub(a.coeffs, b.coeffs)).has_value();
}

DivisorClass beta0(const NormalFan& fan) {
    return {&fan, IntVec(fan.rays.size(), 1)};
}

DivisorClass critical_degree(const PolytopeFamily& f, const NormalFan& fan) {
    IntVec rho(fan.rays.size(), -1);
    for (int i = 0; i <= f.n(); ++i) {
        const IntVec a = divisor_coeffs(f.member(i), fan);
        for (std::size_t j = 0; j < rho.size(); ++j)
            rho[j] = checked_int(Wide(rho[j]) + Wide(a[j]), "critical degree");
    }
    return {&fan, std::move(rho)};
}

IntVec GradedBasis::exponent_vector(const IntVec& point) const {
    const auto& fan = *cls.fan;
    IntVec e(fan.rays.size());
    for (std::size_t j = 0; j < fan.rays.size(); ++j) {
        e[j] = checked_int(dot_wide(fan.rays[j], point) + Wide(cls.coeffs[j]), "monomial exponent");
        if (e[j] < 0) throw std::logic_error("negative monomial exponent");
    }
    return e;
}

GradedBasis graded_basis(const DivisorClass& c) {
    if (c.fan == nullptr) throw std::invalid_argument("graded_basis: class without fan");
    // The fan is complete (validated at construction), so the representative
    // polyhedron is bounded and its lattice points form the monomial basis.
    std::vector<Int> rhs(c.coeffs.size());
    for (std::size_t j = 0; j < rhs.size(); ++j) rhs[j] = -c.coeffs[j];
    GradedBasis basis;
    basis.cls = c;
    basis.points = lattice_points_of_hrep(c.fan->rays, rhs);
    return basis;
}

CohomologyDims cohomology_dims(const LatticePolytope& p, const NormalFan& fan) {
    if (!is_cartier_nef(p, fan))
        throw std::invalid_argument("cohomology_dims requires a Cartier nef polytope/fan pair");
    const int n = fan.n;
    CohomologyDims dims;
    dims.h_minus.assign(static_cast<std::size_t>(n) + 1, 0);
    dims.h_plus_k.assign(static_cast<std::size_t>(n) + 1, 0);
    const long long interior = p.lstar();
    dims.h_minus[static_cast<std::size_t>(p.dim())] = interior;
    dims.h_plus_k[static_cast<std::size_t>(n - p.dim())] = interior;
    return dims;
}

}  // namespace critdeg
