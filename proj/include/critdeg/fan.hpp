#pragma once

#include <vector>

#include "critdeg/polytope.hpp"

namespace critdeg {

// Normal fan of a full-dimensional lattice polytope: primitive inner facet
// normals as rays (lexicographically sorted) and one maximal cone per vertex,
// recorded as the sorted indices of the rays active there.
struct NormalFan {
    int n = 0;
    std::vector<IntVec> rays;
    std::vector<std::vector<int>> max_cones;
};

NormalFan normal_fan(const LatticePolytope& delta);

// Support coefficients a_j = -min_{m in P} <m, n_j>.  Throws when the
// inequality system {<m, n_j> >= -a_j} does not reconstruct P, i.e. when the
// fan fails to refine the normal fan of P.
IntVec divisor_coeffs(const LatticePolytope& p, const NormalFan& fan);

// True iff the support function of P is integral-linear on every maximal
// cone: each cone admits a vertex of P tight on all of its rays.
bool is_cartier_nef(const LatticePolytope& p, const NormalFan& fan);

}  // namespace critdeg
