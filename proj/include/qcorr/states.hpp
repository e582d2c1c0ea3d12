#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcorr/linalg.hpp"

namespace qcorr {

/// cos(beta)|000> + sin(beta)|111>, qubit A leftmost.
PureState make_gghz(double beta);

/// sin(theta)cos(phi)|100> + sin(theta)sin(phi)|010> + cos(theta)|001>.
PureState make_gw(double theta, double phi);

/// (1-p)|GHZ><GHZ| + (p/8) I on three qubits, p in [0,1].
DensityMatrix make_werner_ghz(double p);

/// p|GHZ><GHZ| + (1-p)|W><W|, p in [0,1].
DensityMatrix make_ghz_w_mix(double p);

/// GG^dag / Tr(GG^dag) for G with iid standard-normal real and imaginary
/// parts from the seeded deterministic stream. Full rank with probability 1.
DensityMatrix random_ginibre(const std::vector<int>& dims, std::uint64_t seed);

/// Normalized complex-Gaussian vector; Haar-distributed direction.
PureState random_haar_pure(const std::vector<int>& dims, std::uint64_t seed);

enum class Family {
    GGHZ,
    GW,
    WernerGhz,
    GhzWMix,
    RandomPure,
    RandomGinibre,
};

/// One point of a state family: parameter values plus (for random families)
/// the seed and subsystem layout.
struct StateFamilyPoint {
    Family family = Family::GGHZ;
    std::map<std::string, double> params; // beta / theta, phi / p
    std::uint64_t seed = 0;
    std::vector<int> dims = {2, 2, 2}; // random families only
};

/// Family tag <-> string (GGHZ, GW, WERNER_GHZ, GHZ_W_MIX, RANDOM_PURE, RANDOM_GINIBRE).
std::string family_name(Family f);
Family parse_family(const std::string& name);

/// Materialize the state for a family point; parameters are checked against
/// each family's domain, pure families are projected.
DensityMatrix make_state(const StateFamilyPoint& point);

} // namespace qcorr
