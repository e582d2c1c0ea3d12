#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qcorr/linalg.hpp"
#include "qcorr/measurement.hpp"

namespace qcorr {

/// A probability vector (entries in [0,1], summing to 1 within 1e-9).
class OutcomeDistribution {
public:
    explicit OutcomeDistribution(std::vector<double> probabilities);

    const std::vector<double>& probabilities() const { return p_; }
    int size() const { return static_cast<int>(p_.size()); }

private:
    std::vector<double> p_;
};

/// H(p) = -sum p_k log2 p_k, with 0 log 0 = 0.
double shannon_entropy(const OutcomeDistribution& p);

/// S(rho) = -sum lambda log2 lambda over the (clamped) spectrum.
double von_neumann_entropy(const DensityMatrix& rho);

/// Entropy in bits of a raw Hermitian PSD matrix (no DensityMatrix validation).
double entropy_bits(const Matrix& m);

/// S(target | condition) = S(rho_{target u condition}) - S(rho_condition).
double conditional_entropy(const DensityMatrix& rho, const std::vector<int>& target,
                           const std::vector<int>& condition);

/// I(part1 : part2) = S(rho_1) + S(rho_2) - S(rho_12).
double mutual_information(const DensityMatrix& rho, const std::vector<int>& part1,
                          const std::vector<int>& part2);

/// sum_i (P_i (x) I) rho (P_i (x) I) with P_i the eigenprojectors of obs
/// acting on the measured subsystem. The measured register becomes classical
/// in the obs eigenbasis.
DensityMatrix post_measurement_state(const DensityMatrix& rho, const Observable& obs, int measured);

struct MeasurementOutcomes {
    OutcomeDistribution probabilities;
    // Conditional states over the remaining subsystems; empty slot when the
    // outcome probability is below 1e-12.
    std::vector<std::optional<DensityMatrix>> conditional_states;
};

/// Outcome distribution and conditional post-measurement states for a
/// projective measurement on one subsystem.
MeasurementOutcomes measurement_distribution(const DensityMatrix& rho,
                                             const ProjectiveMeasurement& meas, int measured);

/// Holevo quantity I(P:B) = S(rho_memory) - sum_i p_i S(rho_memory|i) for the
/// eigenbasis measurement of obs on the measured subsystem.
double holevo_quantity(const DensityMatrix& rho, const Observable& obs, int measured,
                       const std::vector<int>& memory);

/// S(O|memory) after measuring obs on the measured subsystem: the conditional
/// entropy of the post-measurement joint state.
double measured_conditional_entropy(const DensityMatrix& rho, const Observable& obs, int measured,
                                    const std::vector<int>& memory);

} // namespace qcorr
