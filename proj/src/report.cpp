#include "critdeg/report.hpp"

#include <stdexcept>

#include "critdeg/rng.hpp"

namespace critdeg {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::NotEssential: return "not-essential";
        case Verdict::NoOracle: return "no-oracle";
        case Verdict::Agree: return "agree";
        case Verdict::WithinBounds: return "within-bounds";
        case Verdict::Disagree: return "disagree";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

std::uint64_t next_reseed(std::uint64_t seed) {
    SplitMix64 rng(seed);
    return rng.next();
}

CodimReport analyze_family(const PolytopeFamily& f, const OracleOptions& oracle) {
    CodimReport report;
    report.n = f.n();
    report.essential = is_essential(f);
    if (!report.essential.essential) {
        report.verdict = Verdict::NotEssential;
        return report;
    }

    report.bounds = codim_bounds(f);
    report.abc = abc_check(f);
    report.formula_value = codim_formula(f);
    report.bignef = bignef_case(f);
    report.restrictdelta = restrictdelta_check(f);
    report.genfor_value = genfor_formula(f);
    report.e1 = e1_table(f);

    std::vector<int> all;
    for (int i = 0; i <= f.n(); ++i) all.push_back(i);
    const LatticePolytope delta = subfamily_sum(f, all);
    const NormalFan fan = normal_fan(delta);
    const DivisorClass rho = critical_degree(f, fan);
    report.rho_coeffs = rho.coeffs;
    report.dim_s_rho = static_cast<long long>(graded_basis(rho).points.size());

    if (!oracle.enabled) {
        report.verdict = Verdict::NoOracle;
        return report;
    }

    const auto acceptable = [&](long long value) {
        if (value < report.bounds->lower || value > report.bounds->upper) return false;
        if (report.formula_value && value != *report.formula_value) return false;
        if (report.genfor_value && value != *report.genfor_value) return false;
        return true;
    };

    long long value = 0;
    if (!oracle.generic) {
        value = codim_oracle(f, fan, oracle.explicit_sections);
        report.oracle_value = value;
    } else {
        report.oracle_seed_requested = oracle.seed;
        std::uint64_t seed = oracle.seed;
        for (int attempt = 0;; ++attempt) {
            value = codim_oracle(f, fan, generic_sections(f, seed));
            report.oracle_seed_used = seed;
            report.reseeds_used = attempt;
            if (acceptable(value) || attempt == oracle.max_reseeds) break;
            seed = next_reseed(seed);
        }
        report.oracle_value = value;
    }

    if (acceptable(value))
        report.verdict = (report.formula_value || report.genfor_value) ? Verdict::Agree
                                                                       : Verdict::WithinBounds;
    else if (value >= report.bounds->lower && value <= report.bounds->upper)
        report.verdict = Verdict::Disagree;
    else
        report.verdict = Verdict::Indeterminate;
    return report;
}

}  // namespace critdeg
