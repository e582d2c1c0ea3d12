#pragma once

#include <optional>
#include <vector>

#include "qcorr/discord.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

/// Maximum squared eigenvector overlap c = max |<x_i|z_j>|^2 of two
/// non-degenerate observables; lies in [1/d, 1].
double incompatibility_c(const Observable& x, const Observable& z);

/// q_MU = -log2(c).
double q_mu(const Observable& x, const Observable& z);

/// S(X|B) + S(Z|C) for a three-subsystem state with both observables
/// measured on A.
double tripartite_lhs(const DensityMatrix& rho, const Observable& x, const Observable& z);

/// delta = (1/2)[I(A:B) + I(A:C)] - [I(X:B) + I(Z:C)]; may be negative.
double delta_eq6(const DensityMatrix& rho, const Observable& x, const Observable& z);

struct Theorem1Bounds {
    double rhs_tighter = 0.0;   // q_MU + max{0, [S(A|B)+S(A|C)]/2 + delta'3}
    double rhs_variant = 0.0;   // same with delta''3 (algebraically equal)
    double delta_p3 = 0.0;      // (1/2)[D_AB + D_AC - J_AB - J_AC]
    double delta_pp3 = 0.0;     // D_AB + D_AC - (1/2)[I(A:B) + I(A:C)]
};

/// Both discord-flavoured lower bounds on S(X|B) + S(Z|C).
Theorem1Bounds theorem1_bounds(const DensityMatrix& rho, const Observable& x, const Observable& z);

/// Every LHS/RHS scalar for one tripartite state and observable pair.
struct BoundReport {
    double lhs_uncertainty = 0.0; // S(X|B) + S(Z|C)
    double c = 0.0;
    double q_mu = 0.0;
    double delta = 0.0;     // mutual-information / Holevo correction
    double delta_p3 = 0.0;  // discord-form correction
    double delta_pp3 = 0.0; // mutual-information-form correction
    double rhs_eq6 = 0.0;   // q_MU + max{0, half_cond + delta}
    double rhs_eq15 = 0.0;  // q_MU + max{0, half_cond + delta_p3}
    double rhs_eq16 = 0.0;  // q_MU + max{0, half_cond + delta_pp3}
    double delta1 = 0.0;    // lhs - q_MU - half_cond
    double delta2 = 0.0;    // -half_cond
    double delta_t = 0.0;   // S(X|B) + S(Z|B) - q_MU - S(A|B)
    double s_a = 0.0;
    double d_ab = 0.0;
    double d_ac = 0.0;
    double j_ab = 0.0;
    double j_ac = 0.0;
    double i_ab = 0.0;
    double i_ac = 0.0;
    double discord_sum = 0.0;             // D_A(rho_AB) + D_A(rho_AC)
    double bound_new = 0.0;               // delta1 + delta2 + S(A)
    double bound_hufan = 0.0;             // S(A) + delta_t
    double theorem2_slack = 0.0;          // bound_new - discord_sum
    double monogamy_condition_gap = 0.0;  // S(A) + S(A|BC)
    bool monogamy_applicable = false;     // |gap| < 1e-8
};

/// Full bound evaluation; theorem2_slack records the slack of
/// Delta1 + Delta2 + S(A) >= D_A(rho_AB) + D_A(rho_AC).
BoundReport theorem2_check(const DensityMatrix& rho, const Observable& x, const Observable& z);

/// Hu-Fan upper bound S(A) + delta_t on the discord sum, with both memory
/// terms of delta_t conditioned on B.
double hufan_bound(const DensityMatrix& rho, const Observable& x, const Observable& z);

struct MonogamyForm {
    bool applicable = false; // |S(A) + S(A|BC)| < 1e-8
    double bound = 0.0;      // D_A(rho_A:BC) + Delta1 + Delta2 when applicable
};

/// Monogamy reading of the bound, valid when S(A) = -S(A|BC).
MonogamyForm monogamy_form(const DensityMatrix& rho, const Observable& x, const Observable& z);

/// Multi-observable incompatibility b, evaluated by explicit iteration over
/// all index tuples. Reduces to incompatibility_c for two observables.
double multipartite_b(const std::vector<Observable>& observables);

/// Four-partite b' exactly as displayed (third factor pairs the last
/// observable's eigenbasis with itself).
double b_prime_printed(const std::vector<Observable>& observables);

/// Alternative b' reading with the third factor pairing the second and third
/// eigenbases; coincides with multipartite_b for three observables.
double b_prime_alternative(const std::vector<Observable>& observables);

struct MultipartiteBoundReport {
    int n = 0;                 // number of memories N
    double b = 0.0;
    double lhs = 0.0;          // sum_i S(M_i|X_i)
    double delta_n = 0.0;      // Holevo-form correction
    double delta_pn = 0.0;     // discord-form correction
    double delta1_n = 0.0;
    double delta2_n = 0.0;
    double s_a = 0.0;
    double discord_sum = 0.0;
    double theorem3_slack = 0.0; // delta1_n + delta2_n + s_a - discord_sum
    double eq19_slack = 0.0;
    std::optional<double> b_prime;     // printed reading, N = 3 only
    std::optional<double> b_prime_alt; // alternative reading, N = 3 only
};

/// Multipartite shareability bound for an (N+1)-partite state; observable i
/// is measured on A with memory subsystem assignments[i]. For N = 2 the
/// report reproduces theorem2_check numerically.
MultipartiteBoundReport theorem3_check(const DensityMatrix& rho,
                                       const std::vector<Observable>& observables,
                                       const std::vector<int>& assignments);

/// Slack of the multipartite uncertainty bound with the discord-form
/// correction; must be >= 0 up to optimizer tolerance.
double corollary_eq19_check(const DensityMatrix& rho, const std::vector<Observable>& observables,
                            const std::vector<int>& assignments);

} // namespace qcorr
