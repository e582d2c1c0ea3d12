#include "qcorr/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qcorr/rng.hpp"

namespace qcorr {

namespace {

const std::vector<int> kThreeQubits = {2, 2, 2};

void check_unit_interval(double p, const char* who)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream os;
        os << who << ": p = " << p << " outside [0,1]";
        throw precondition_error(os.str());
    }
}

Vector ghz_vector()
{
    Vector v = Vector::Zero(8);
    v[0] = v[7] = 1.0 / std::numbers::sqrt2;
    return v;
}

Vector w_vector()
{
    Vector v = Vector::Zero(8);
    v[1] = v[2] = v[4] = 1.0 / std::sqrt(3.0);
    return v;
}

double param_or(const StateFamilyPoint& pt, const std::string& key, double fallback)
{
    auto it = pt.params.find(key);
    return it == pt.params.end() ? fallback : it->second;
}

void check_known_params(const StateFamilyPoint& pt, std::initializer_list<const char*> allowed)
{
    for (const auto& [key, value] : pt.params) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }) == allowed.end()) {
            throw precondition_error("make_state: unknown parameter '" + key + "' for family " +
                                     family_name(pt.family));
        }
    }
}

} // namespace

PureState make_gghz(double beta)
{
    Vector v = Vector::Zero(8);
    v[0] = std::cos(beta);
    v[7] = std::sin(beta);
    return PureState(std::move(v), kThreeQubits);
}

PureState make_gw(double theta, double phi)
{
    Vector v = Vector::Zero(8);
    v[4] = std::sin(theta) * std::cos(phi); // |100>
    v[2] = std::sin(theta) * std::sin(phi); // |010>
    v[1] = std::cos(theta);                 // |001>
    return PureState(std::move(v), kThreeQubits);
}

DensityMatrix make_werner_ghz(double p)
{
    check_unit_interval(p, "make_werner_ghz");
    const Vector g = ghz_vector();
    Matrix m = (1.0 - p) * (g * g.adjoint()) + (p / 8.0) * Matrix::Identity(8, 8);
    return DensityMatrix(std::move(m), kThreeQubits);
}

DensityMatrix make_ghz_w_mix(double p)
{
    check_unit_interval(p, "make_ghz_w_mix");
    const Vector g = ghz_vector();
    const Vector w = w_vector();
    Matrix m = p * (g * g.adjoint()) + (1.0 - p) * (w * w.adjoint());
    return DensityMatrix(std::move(m), kThreeQubits);
}

DensityMatrix random_ginibre(const std::vector<int>& dims, std::uint64_t seed)
{
    const int total = std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
    if (total > 16) {
        std::ostringstream os;
        os << "random_ginibre: total dimension " << total << " exceeds 16";
        throw precondition_error(os.str());
    }
    GaussianStream gs(seed);
    Matrix g(total, total);
    for (int i = 0; i < total; ++i) {
        for (int j = 0; j < total; ++j) {
            g(i, j) = gs.next_complex();
        }
    }
    Matrix m = g * g.adjoint();
    m /= m.trace().real();
    m = 0.5 * (m + m.adjoint().eval());
    return DensityMatrix(std::move(m), dims);
}

PureState random_haar_pure(const std::vector<int>& dims, std::uint64_t seed)
{
    const int total = std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
    if (total > 16) {
        std::ostringstream os;
        os << "random_haar_pure: total dimension " << total << " exceeds 16";
        throw precondition_error(os.str());
    }
    GaussianStream gs(seed);
    Vector v(total);
    for (int i = 0; i < total; ++i) v[i] = gs.next_complex();
    v /= v.norm();
    return PureState(std::move(v), dims);
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::GGHZ: return "GGHZ";
    case Family::GW: return "GW";
    case Family::WernerGhz: return "WERNER_GHZ";
    case Family::GhzWMix: return "GHZ_W_MIX";
    case Family::RandomPure: return "RANDOM_PURE";
    case Family::RandomGinibre: return "RANDOM_GINIBRE";
    }
    throw precondition_error("family_name: unknown family");
}

Family parse_family(const std::string& name)
{
    std::string up = name;
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    if (up == "GGHZ") return Family::GGHZ;
    if (up == "GW") return Family::GW;
    if (up == "WERNER_GHZ") return Family::WernerGhz;
    if (up == "GHZ_W_MIX") return Family::GhzWMix;
    if (up == "RANDOM_PURE") return Family::RandomPure;
    if (up == "RANDOM_GINIBRE") return Family::RandomGinibre;
    throw precondition_error("unknown state family '" + name + "'");
}

DensityMatrix make_state(const StateFamilyPoint& pt)
{
    const double tau = 2.0 * std::numbers::pi;
    switch (pt.family) {
    case Family::GGHZ: {
        check_known_params(pt, {"beta"});
        const double beta = param_or(pt, "beta", std::numbers::pi / 4.0);
        if (!(beta >= 0.0 && beta < tau)) {
            throw precondition_error("make_state: beta outside [0, 2pi)");
        }
        return project_pure(make_gghz(beta));
    }
    case Family::GW: {
        check_known_params(pt, {"theta", "phi"});
        const double theta = param_or(pt, "theta", std::acos(1.0 / std::sqrt(3.0)));
        const double phi = param_or(pt, "phi", std::numbers::pi / 4.0);
        if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
            throw precondition_error("make_state: theta outside [0, pi]");
        }
        if (!(phi >= 0.0 && phi < tau)) {
            throw precondition_error("make_state: phi outside [0, 2pi)");
        }
        return project_pure(make_gw(theta, phi));
    }
    case Family::WernerGhz: {
        check_known_params(pt, {"p"});
        return make_werner_ghz(param_or(pt, "p", 0.5));
    }
    case Family::GhzWMix: {
        check_known_params(pt, {"p"});
        return make_ghz_w_mix(param_or(pt, "p", 0.5));
    }
    case Family::RandomPure:
        check_known_params(pt, {});
        return project_pure(random_haar_pure(pt.dims, pt.seed));
    case Family::RandomGinibre:
        check_known_params(pt, {});
        return random_ginibre(pt.dims, pt.seed);
    }
    throw precondition_error("make_state: unknown family");
}

} // namespace qcorr
