#pragma once

#include <vector>

#include "qcorr/entropy.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

struct DiscordResult {
    double discord = 0.0;                // I - J; upper bound on the true discord
    double classical_correlation = 0.0;  // J; lower bound under incomplete minimization
    double mutual_information = 0.0;     // I(measured : memory)
    double theta = 0.0;                  // optimal measurement Bloch angles
    double phi = 0.0;
    long optimizer_evaluations = 0;
};

/// J_A = S(rho_memory) - min over rank-1 qubit projective measurements of
/// sum_i p_i S(rho_memory|i), minimized by a 64x64 (theta, phi) grid followed
/// by downhill-simplex refinement from the best three cells. The discord
/// field carries I - J.
DiscordResult classical_correlation(const DensityMatrix& rho, int measured,
                                    const std::vector<int>& memory);

/// Exhaustive grid evaluation (no refinement); returns the discord upper
/// bound implied by the grid's best J.
double discord_oracle(const DensityMatrix& rho, int measured, const std::vector<int>& memory,
                      int grid = 512);

/// Discord with the measurement on subsystem A (index 0).
DiscordResult discord_one_sided(const DensityMatrix& rho, const std::vector<int>& memory);

} // namespace qcorr
