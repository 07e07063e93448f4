#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "critdeg/family.hpp"

namespace critdeg {

// Lower/upper bounds for dim (S/I)_rho of an essential family:
//   lower = 1 + sum of l* over the segment members,
//   upper = 1 + sum over k < n of l*(Delta_J) with dim(Delta_J) = |J| = k.
// For n = 1 both collapse to 1 (the displayed lower-bound sum is an n >= 2
// statement; the two-form Koszul slice is always exact in the critical degree).
struct CodimBounds {
    long long lower = 0;
    long long upper = 0;
};

CodimBounds codim_bounds(const PolytopeFamily& f);

// Exactness conditions: for every J with 1 <= |J| <= n-2 one of
//   (a) dim(Delta_J) != |J| + 1,
//   (b) dim(Delta_J) = |J| + 1 with no interior lattice points,
//   (c) dim(Delta_J) = |J| + 1 and dim(Delta_{J u I}) > |J| + |I| for every
//       nonempty disjoint I with |J| + |I| < n.
// violators lists every J failing all three, by increasing size then lex.
struct AbcResult {
    bool applicable = false;
    std::vector<std::vector<int>> violators;
};

AbcResult abc_check(const PolytopeFamily& f);

// The exact codimension formula when abc_check passes (equals the upper bound).
std::optional<long long> codim_formula(const PolytopeFamily& f);

enum class BignefTag { FullDim, Surface };

// Big-and-nef specializations: all members full-dimensional gives 1; an
// essential surface family gives 1 + sum of l* over segment members.
std::optional<std::pair<BignefTag, long long>> bignef_case(const PolytopeFamily& f);

// dim E_1^{p,q} for 0 <= p <= n+1, 0 <= q <= n, indexed [p][q]:
//   sum over |J| = p with dim(Delta_J) = n - q of l*(Delta_J),
// with the empty subset contributing the origin (so [0][n] = 1 and
// [n+1][0] = dim S_rho).
std::vector<std::vector<long long>> e1_table(const PolytopeFamily& f);

enum class RestrictDelta { NotApplicable, Ok, Violated };

// Hypothesis dim(Delta_i) in {1, n-1, n} for every member; requires n >= 3.
RestrictDelta restrictdelta_check(const PolytopeFamily& f);

// Inclusion-exclusion formula
//   1 + sum_{dim(Delta_J) = |J| < n} sum_{K subset of J} (-1)^{|J|-|K|}
//         l*_{|J|}(Delta_K),
// valid for essential families with n >= 3 satisfying restrictdelta; absent
// when the preconditions fail.
std::optional<long long> genfor_formula(const PolytopeFamily& f);

}  // namespace critdeg
