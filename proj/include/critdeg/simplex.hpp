#pragma once

#include <gmpxx.h>

#include <vector>

#include "critdeg/ints.hpp"

namespace critdeg {

// Exact rational LP in standard form: maximize c.v subject to A v = b, v >= 0.
// Two-phase tableau simplex with Bland's rule, so it always terminates.
struct LpResult {
    bool feasible = false;
    mpq_class objective;          // valid when feasible
    std::vector<mpq_class> solution;
};

LpResult simplex_solve(const std::vector<std::vector<mpq_class>>& a,
                       const std::vector<mpq_class>& b,
                       const std::vector<mpq_class>& c);

// Membership of x in conv(points), decided exactly.
bool point_in_hull(const IntVec& x, const std::vector<IntVec>& points);

// Membership of x in the relative interior of conv(points): feasibility of a
// convex combination with all weights strictly positive.
bool point_in_relative_interior(const IntVec& x, const std::vector<IntVec>& points);

}  // namespace critdeg
