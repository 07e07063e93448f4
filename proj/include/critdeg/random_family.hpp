#pragma once

#include <cstdint>

#include "critdeg/family.hpp"

namespace critdeg {

// Constraints for the rejection-sampling family generator.  Shape biases only
// change the proposal distribution; every constraint is re-checked exactly.
struct RandomFamilyOptions {
    bool require_full_dim = false;   // every member of dimension n
    bool require_segment = false;    // at least one member of dimension 1
    bool bias_low_dim = false;       // propose segments / facet-flat members too
    int max_attempts = 1000;
};

// Essential family of n+1 polytopes, each the hull of 2..2n points drawn
// uniformly from [0, max_coord]^n; deterministic in the seed.  Throws when the
// attempt budget is exhausted.
PolytopeFamily random_family(int n, Int max_coord, std::uint64_t seed,
                             const RandomFamilyOptions& options = {});

}  // namespace critdeg
