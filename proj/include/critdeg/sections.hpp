#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "critdeg/grading.hpp"

namespace critdeg {

// Polynomial section supported on the lattice points of one family member:
// a Laurent-monomial coefficient per support point.
struct SparseSection {
    int polytope_index = 0;
    std::vector<std::pair<IntVec, mpz_class>> coeffs;  // sorted by point, values nonzero
};

// One section per family member, every lattice point of member i carrying a
// uniform coefficient in [1, 2^20].  Deterministic in the seed.
std::vector<SparseSection> generic_sections(const PolytopeFamily& f, std::uint64_t seed);

// The section written in Cox coordinates: exponent vector <m, n_j> + a_ij per
// support point m, all of degree class a_i.
struct HomogeneousForm {
    DivisorClass degree;
    std::vector<std::pair<IntVec, mpz_class>> monomials;  // exponent vector, coefficient
};

HomogeneousForm homogenize(const SparseSection& f, const NormalFan& fan,
                           const PolytopeFamily& family);

}  // namespace critdeg
