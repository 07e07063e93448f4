#pragma once

#include <optional>
#include <vector>

#include "critdeg/ints.hpp"

namespace critdeg {

// Dense integer matrix, row-major. Sizes stay small (at most a few hundred
// rows of vertex differences, at most 6 columns), so everything here uses
// straightforward exact elimination.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    Int at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static IntMat from_rows(const std::vector<IntVec>& rows_in);
    IntVec row(int i) const;
};

// Rank over Q by fraction-free elimination in 128-bit arithmetic.
// Intermediate entries are minors of the input, so inputs must respect
// coordinate_limit-scale magnitudes.
int rank_int(const IntMat& m);

// Basis of the integer kernel {x in Z^cols : A x = 0}, found by unimodular
// column reduction. Basis vectors are primitive and lexicographically sorted.
std::vector<IntVec> integer_kernel(const IntMat& a);

// One integer solution of A x = b, or nullopt when none exists (covers both
// inconsistency over Q and non-integrality).
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b);

// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive_vector(IntVec v);

}  // namespace critdeg
