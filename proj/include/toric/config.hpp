#pragma once

#include <cstdint>

namespace toric {

// Knobs shared across the pipeline.  All randomness (generic coefficient
// draws, eigen-splitting combinations, deformation directions) is derived
// from the single seed so certificates are reproducible run to run.
struct RunConfig {
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
    long groebner_step_cap = 100000;
    int eigen_dim_cap = 200;
};

}  // namespace toric
