#include "qcorr/discord.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcorr/measurement.hpp"

namespace qcorr {

namespace {

constexpr int kCoarseGrid = 64;
constexpr double kSimplexDiameter = 1e-8;
constexpr int kSimplexMaxIter = 600;
constexpr double kZeroOutcome = 1e-12;

double xlog2x(double p)
{
    return p > 1e-12 ? p * std::log2(p) : 0.0;
}

// Entropy of an unnormalized PSD block m with trace p: p * S(m/p).
double scaled_entropy(const Matrix& m, double p)
{
    if (m.rows() == 2) {
        // closed-form 2x2 spectrum
        const double a = m(0, 0).real(), d = m(1, 1).real();
        const double off = std::abs(m(0, 1));
        const double h = 0.5 * (a - d);
        const double r = std::sqrt(h * h + off * off);
        const double mid = 0.5 * (a + d);
        return -xlog2x(mid + r) - xlog2x(mid - r) + p * std::log2(p);
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        s -= xlog2x(solver.eigenvalues()[i]);
    }
    return s + p * std::log2(p);
}

// Reduced state over {measured} u memory with a flat-index map that lets the
// two conditional memory blocks be assembled directly per measurement angle.
class MeasurementProblem {
public:
    MeasurementProblem(const DensityMatrix& rho, int measured, const std::vector<int>& memory)
    {
        if (measured < 0 || measured >= rho.num_subsystems()) {
            throw invalid_subsystem_error("classical_correlation: measured index out of range");
        }
        if (rho.dims()[measured] != 2) {
            std::ostringstream os;
            os << "classical_correlation: measured subsystem has dimension "
               << rho.dims()[measured] << "; only qubit measurements are supported";
            throw unsupported_dimension_error(os.str());
        }
        if (memory.empty()) {
            throw precondition_error("classical_correlation: empty memory set");
        }
        std::vector<int> keep = memory;
        for (int k : keep) {
            if (k == measured) {
                throw precondition_error("classical_correlation: memory contains the measured subsystem");
            }
        }
        keep.push_back(measured);
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        if (keep.size() != memory.size() + 1) {
            throw precondition_error("classical_correlation: duplicate memory indices");
        }

        tau_ = partial_trace(rho.matrix(), rho.dims(), keep);
        std::vector<int> rdims;
        int pos = 0;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            rdims.push_back(rho.dims()[keep[i]]);
            if (keep[i] == measured) pos = static_cast<int>(i);
        }
        int pre = 1, post = 1;
        for (int i = 0; i < pos; ++i) pre *= rdims[i];
        for (int i = pos + 1; i < static_cast<int>(rdims.size()); ++i) post *= rdims[i];
        mem_dim_ = pre * post;

        // flat index in tau for measured digit a and memory rank r
        for (int a = 0; a < 2; ++a) {
            idx_[a].resize(mem_dim_);
            for (int r = 0; r < mem_dim_; ++r) {
                const int hi = r / post, lo = r % post;
                idx_[a][r] = (hi * 2 + a) * post + lo;
            }
        }
        mem_entropy_ = entropy_bits(partial_trace(rho.matrix(), rho.dims(),
                                                  std::vector<int>(memory.begin(), memory.end())));
        block_.resize(mem_dim_, mem_dim_);
    }

    double memory_entropy() const { return mem_entropy_; }

    // sum_i p_i S(rho_memory|i) for the Bloch-direction measurement (theta, phi)
    double average_conditional_entropy(double theta, double phi)
    {
        const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
        const Complex e = std::polar(1.0, phi);
        const std::array<std::array<Complex, 2>, 2> dirs = {{
            {Complex(c, 0.0), e * s},
            {Complex(s, 0.0), -e * c},
        }};
        double total = 0.0;
        for (const auto& u : dirs) {
            const Complex w00 = std::conj(u[0]) * u[0];
            const Complex w01 = std::conj(u[0]) * u[1];
            const Complex w10 = std::conj(u[1]) * u[0];
            const Complex w11 = std::conj(u[1]) * u[1];
            for (int i = 0; i < mem_dim_; ++i) {
                for (int j = 0; j < mem_dim_; ++j) {
                    block_(i, j) = w00 * tau_(idx_[0][i], idx_[0][j]) +
                                   w01 * tau_(idx_[0][i], idx_[1][j]) +
                                   w10 * tau_(idx_[1][i], idx_[0][j]) +
                                   w11 * tau_(idx_[1][i], idx_[1][j]);
                }
            }
            const double p = block_.trace().real();
            if (p > kZeroOutcome) {
                total += scaled_entropy(block_, p);
            }
        }
        return total;
    }

private:
    Matrix tau_;
    Matrix block_;
    std::array<std::vector<int>, 2> idx_;
    int mem_dim_ = 0;
    double mem_entropy_ = 0.0;
};

struct GridPoint {
    double value;
    double theta;
    double phi;

    bool operator<(const GridPoint& o) const
    {
        if (value != o.value) return value < o.value;
        if (theta != o.theta) return theta < o.theta;
        return phi < o.phi;
    }
};

// Downhill simplex on (theta, phi); returns the best vertex found.
GridPoint nelder_mead(MeasurementProblem& prob, const GridPoint& start, double h_theta,
                      double h_phi, long& evals)
{
    struct Vertex {
        double t, p, f;
    };
    auto eval = [&](double t, double p) {
        ++evals;
        return prob.average_conditional_entropy(t, p);
    };
    std::array<Vertex, 3> v = {{
        {start.theta, start.phi, start.value},
        {start.theta + h_theta, start.phi, 0.0},
        {start.theta, start.phi + h_phi, 0.0},
    }};
    v[1].f = eval(v[1].t, v[1].p);
    v[2].f = eval(v[2].t, v[2].p);

    for (int iter = 0; iter < kSimplexMaxIter; ++iter) {
        std::sort(v.begin(), v.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        double diam = 0.0;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                diam = std::max(diam, std::hypot(v[i].t - v[j].t, v[i].p - v[j].p));
            }
        }
        if (diam < kSimplexDiameter) break;

        const double ct = 0.5 * (v[0].t + v[1].t);
        const double cp = 0.5 * (v[0].p + v[1].p);
        const double rt = ct + (ct - v[2].t);
        const double rp = cp + (cp - v[2].p);
        const double fr = eval(rt, rp);
        if (fr < v[0].f) {
            const double et = ct + 2.0 * (ct - v[2].t);
            const double ep = cp + 2.0 * (cp - v[2].p);
            const double fe = eval(et, ep);
            v[2] = fe < fr ? Vertex{et, ep, fe} : Vertex{rt, rp, fr};
        } else if (fr < v[1].f) {
            v[2] = {rt, rp, fr};
        } else {
            const double kt = ct + 0.5 * ((fr < v[2].f ? rt : v[2].t) - ct);
            const double kp = cp + 0.5 * ((fr < v[2].f ? rp : v[2].p) - cp);
            const double fk = eval(kt, kp);
            if (fk < std::min(fr, v[2].f)) {
                v[2] = {kt, kp, fk};
            } else { // shrink toward the best vertex
                for (int i = 1; i < 3; ++i) {
                    v[i].t = v[0].t + 0.5 * (v[i].t - v[0].t);
                    v[i].p = v[0].p + 0.5 * (v[i].p - v[0].p);
                    v[i].f = eval(v[i].t, v[i].p);
                }
            }
        }
    }
    std::sort(v.begin(), v.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    return {v[0].f, v[0].t, v[0].p};
}

double grid_minimum(MeasurementProblem& prob, int grid, long& evals,
                    std::array<GridPoint, 3>* top3 = nullptr)
{
    const double pi = std::numbers::pi;
    std::array<GridPoint, 3> best = {{{1e300, 0, 0}, {1e300, 0, 0}, {1e300, 0, 0}}};
    for (int i = 0; i < grid; ++i) {
        const double theta = grid > 1 ? i * pi / (grid - 1) : 0.0;
        for (int j = 0; j < grid; ++j) {
            const double phi = j * 2.0 * pi / grid;
            ++evals;
            const GridPoint pt{prob.average_conditional_entropy(theta, phi), theta, phi};
            if (pt < best[2]) {
                best[2] = pt;
                if (best[2] < best[1]) std::swap(best[1], best[2]);
                if (best[1] < best[0]) std::swap(best[0], best[1]);
            }
        }
    }
    if (top3) *top3 = best;
    return best[0].value;
}

} // namespace

DiscordResult classical_correlation(const DensityMatrix& rho, int measured,
                                    const std::vector<int>& memory)
{
    MeasurementProblem prob(rho, measured, memory);

    long evals = 0;
    std::array<GridPoint, 3> seeds;
    grid_minimum(prob, kCoarseGrid, evals, &seeds);

    GridPoint best = seeds[0];
    const double h_theta = std::numbers::pi / (kCoarseGrid - 1);
    const double h_phi = 2.0 * std::numbers::pi / kCoarseGrid;
    for (const GridPoint& seed : seeds) {
        if (seed.value >= 1e300) continue;
        const GridPoint refined = nelder_mead(prob, seed, h_theta, h_phi, evals);
        if (refined < best) best = refined;
    }

    DiscordResult out;
    out.classical_correlation = prob.memory_entropy() - best.value;
    out.mutual_information = mutual_information(rho, {measured}, memory);
    out.discord = out.mutual_information - out.classical_correlation;
    double t = best.theta, p = best.phi;
    wrap_bloch_angles(t, p);
    out.theta = t;
    out.phi = p;
    out.optimizer_evaluations = evals;
    return out;
}

double discord_oracle(const DensityMatrix& rho, int measured, const std::vector<int>& memory,
                      int grid)
{
    if (grid < 2) {
        throw precondition_error("discord_oracle: grid resolution must be >= 2");
    }
    MeasurementProblem prob(rho, measured, memory);
    long evals = 0;
    const double emin = grid_minimum(prob, grid, evals);
    const double j = prob.memory_entropy() - emin;
    return mutual_information(rho, {measured}, memory) - j;
}

DiscordResult discord_one_sided(const DensityMatrix& rho, const std::vector<int>& memory)
{
    return classical_correlation(rho, 0, memory);
}

} // namespace qcorr
