#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "critdeg/sections.hpp"

namespace critdeg {

// Dense matrix over Z with arbitrary-precision entries.
struct BigMat {
    int rows = 0;
    int cols = 0;
    std::vector<mpz_class> a;

    BigMat() = default;
    BigMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    mpz_class& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const mpz_class& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// Degree-rho slice of the last Koszul map  ⊕_k S_{rho - a_k} -> S_rho,
// (g_k) -> sum g_k f_k.  Rows are indexed by the monomial basis of S_rho in
// lexicographic point order, columns by (k, source monomial); multiplying by
// f_k translates source points by the support points of f_k.
struct KoszulSlice {
    GradedBasis target;                // basis of S_rho
    std::vector<GradedBasis> sources;  // basis of S_{rho - a_k} per k
    BigMat matrix;
};

KoszulSlice koszul_slice(const PolytopeFamily& f, const NormalFan& fan,
                         const std::vector<SparseSection>& sections);

// Rank over Q by fraction-free elimination with row-content stripping; the
// stripped entries divide minors of the input, so growth stays polynomial.
int exact_rank(const BigMat& m);

// Rank of the reduction mod p (a lower bound for the rational rank).
int rank_mod_prime(const BigMat& m, std::uint64_t p);

// Deterministic sequence of distinct primes in (2^30, 2^31).
std::vector<std::uint64_t> random_primes(int count, std::uint64_t seed);

// dim (S/I)_rho for the given coefficients: dim S_rho minus the rank of the
// Koszul slice.  Exact for any sections, theorem hypotheses or not.
long long codim_oracle(const PolytopeFamily& f, const NormalFan& fan,
                       const std::vector<SparseSection>& sections);

}  // namespace critdeg
