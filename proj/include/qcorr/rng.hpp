#pragma once

#include <complex>
#include <cstdint>

namespace qcorr {

// splitmix64: tiny counter-based PRNG. Used instead of <random> distributions
// so that sweeps and checks are bit-reproducible across standard libraries.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

/// Deterministic stream of standard normals for a given seed (Box-Muller over
/// splitmix64 uniforms).
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : sm_{seed}
    {
        sm_.next(); // decorrelate consecutive small seeds
    }

    double next()
    {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        // u1 in (0,1], u2 in [0,1)
        const double u1 = static_cast<double>((sm_.next() >> 11) + 1) * 0x1p-53;
        const double u2 = static_cast<double>(sm_.next() >> 11) * 0x1p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    std::complex<double> next_complex()
    {
        const double re = next();
        const double im = next();
        return {re, im};
    }

private:
    SplitMix64 sm_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

} // namespace qcorr
