#pragma once

#include <vector>

#include "critdeg/family.hpp"
#include "critdeg/fan.hpp"

namespace critdeg {

// Divisor class in A_{n-1}(X) = Z^rays / image(M), stored as an explicit
// coefficient representative; equality goes through an integer linear solve,
// which sidesteps torsion bookkeeping entirely.
struct DivisorClass {
    const NormalFan* fan = nullptr;
    IntVec coeffs;
};

DivisorClass make_class(const NormalFan& fan, IntVec coeffs);
bool class_equal(const DivisorClass& a, const DivisorClass& b);

// Sum of the variable degrees: representative (1,...,1), the anticanonical class.
DivisorClass beta0(const NormalFan& fan);

// rho = sum of the member degrees minus beta0.
DivisorClass critical_degree(const PolytopeFamily& f, const NormalFan& fan);

// Monomial basis of the graded piece S_c: lattice points m of the
// representative polytope {m : <m, n_j> >= -c_j}; the monomial exponents are
// (<m, n_j> + c_j)_j.
struct GradedBasis {
    DivisorClass cls;
    std::vector<IntVec> points;  // lex sorted

    IntVec exponent_vector(const IntVec& point) const;
};

GradedBasis graded_basis(const DivisorClass& c);

// Batyrev-Borisov dimensions: h_minus[i] = dim H^i(X, O(-D)) and
// h_plus_k[i] = dim H^i(X, O(D+K)) for the nef divisor D of P.
struct CohomologyDims {
    std::vector<long long> h_minus;
    std::vector<long long> h_plus_k;
};

CohomologyDims cohomology_dims(const LatticePolytope& p, const NormalFan& fan);

}  // namespace critdeg
