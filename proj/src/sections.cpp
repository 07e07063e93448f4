#include "critdeg/sections.hpp"

#include <stdexcept>

#include "critdeg/rng.hpp"

namespace critdeg {

std::vector<SparseSection> generic_sections(const PolytopeFamily& f, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<SparseSection> out;
    for (int i = 0; i <= f.n(); ++i) {
        SparseSection s;
        s.polytope_index = i;
        for (const auto& m : f.member(i).lattice_points()) {
            const std::uint64_t raw = rng.next();
            s.coeffs.emplace_back(m, mpz_class(static_cast<unsigned long>(1 + (raw & 0xFFFFFULL))));
        }
        out.push_back(std::move(s));
    }
    return out;
}

HomogeneousForm homogenize(const SparseSection& f, const NormalFan& fan,
                           const PolytopeFamily& family) {
    if (f.polytope_index < 0 || f.polytope_index > family.n())
        throw std::invalid_argument("homogenize: polytope index out of range");
    const LatticePolytope& support = family.member(f.polytope_index);
    if (f.coeffs.empty()) throw std::invalid_argument("homogenize: section is identically zero");

    const IntVec a = divisor_coeffs(support, fan);
    HomogeneousForm form;
    form.degree = make_class(fan, a);
    bool any_nonzero = false;
    for (const auto& [m, c] : f.coeffs) {
        if (!support.contains(m))
            throw std::invalid_argument("homogenize: support point outside its polytope");
        if (sgn(c) == 0) continue;
        any_nonzero = true;
        IntVec e(fan.rays.size());
        for (std::size_t j = 0; j < fan.rays.size(); ++j) {
            e[j] = checked_int(dot_wide(fan.rays[j], m) + Wide(a[j]), "homogenize exponent");
            if (e[j] < 0) throw std::logic_error("homogenize: negative exponent");
        }
        form.monomials.emplace_back(std::move(e), c);
    }
    if (!any_nonzero) throw std::invalid_argument("homogenize: section is identically zero");
    return form;
}

}  // namespace critdeg
