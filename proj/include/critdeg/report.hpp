#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "critdeg/koszul.hpp"
#include "critdeg/theorems.hpp"

namespace critdeg {

enum class Verdict {
    NotEssential,   // no claims to evaluate
    NoOracle,       // formulas computed, oracle not requested
    Agree,          // oracle matches every applicable formula and the bounds
    WithinBounds,   // no exact formula applies; oracle inside [lower, upper]
    Disagree,       // oracle inside the bounds but off an applicable formula
    Indeterminate,  // sandwich violated after exhausting the reseed budget
};

std::string verdict_name(Verdict v);

struct OracleOptions {
    bool enabled = false;
    bool generic = true;  // draw generic sections; otherwise use explicit ones
    std::uint64_t seed = 0;
    std::vector<SparseSection> explicit_sections;
    int max_reseeds = 3;
};

struct CodimReport {
    int n = 0;
    EssentialCertificate essential;

    // present when the family is essential
    std::optional<CodimBounds> bounds;
    std::optional<AbcResult> abc;
    std::optional<long long> formula_value;
    std::optional<std::pair<BignefTag, long long>> bignef;
    RestrictDelta restrictdelta = RestrictDelta::NotApplicable;
    std::optional<long long> genfor_value;
    std::optional<std::vector<std::vector<long long>>> e1;
    std::optional<long long> dim_s_rho;
    std::optional<IntVec> rho_coeffs;

    // oracle results
    std::optional<long long> oracle_value;
    std::optional<std::uint64_t> oracle_seed_requested;
    std::optional<std::uint64_t> oracle_seed_used;
    int reseeds_used = 0;

    Verdict verdict = Verdict::NoOracle;
};

// Runs the full analysis pipeline: essential certificate, bounds, exactness
// conditions, formulas, E1 table, and optionally the Koszul-slice oracle with
// the reseed-on-nongeneric policy.
CodimReport analyze_family(const PolytopeFamily& f, const OracleOptions& oracle = {});

// Deterministic seed chain for reseeding after a non-generic draw.
std::uint64_t next_reseed(std::uint64_t seed);

}  // namespace critdeg
