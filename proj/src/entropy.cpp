#include "qcorr/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qcorr {

namespace {

// Eigenvalues below this contribute nothing to -sum p log2 p; negatives down
// to -1e-10 are treated as PSD round-off and clamped.
constexpr double kEntropyEigCut = 1e-12;
constexpr double kZeroOutcome = 1e-12;

void check_disjoint(const std::vector<int>& a, const std::vector<int>& b, const char* who)
{
    for (int x : a) {
        for (int y : b) {
            if (x == y) {
                std::ostringstream os;
                os << who << ": subsystem sets overlap at index " << x;
                throw precondition_error(os.str());
            }
        }
    }
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> u = a;
    u.insert(u.end(), b.begin(), b.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

} // namespace

OutcomeDistribution::OutcomeDistribution(std::vector<double> probabilities)
    : p_(std::move(probabilities))
{
    if (p_.empty()) {
        throw precondition_error("OutcomeDistribution: empty");
    }
    double sum = 0.0;
    for (double& v : p_) {
        if (v < 0.0) {
            if (v < -1e-9) {
                std::ostringstream os;
                os << "OutcomeDistribution: negative probability " << v;
                throw precondition_error(os.str());
            }
            v = 0.0; // round-off
        }
        if (v > 1.0 + 1e-9) {
            std::ostringstream os;
            os << "OutcomeDistribution: probability " << v << " > 1";
            throw precondition_error(os.str());
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        std::ostringstream os;
        os << "OutcomeDistribution: probabilities sum to " << sum;
        throw precondition_error(os.str());
    }
}

double shannon_entropy(const OutcomeDistribution& p)
{
    double h = 0.0;
    for (double v : p.probabilities()) {
        if (v > kZeroOutcome) h -= v * std::log2(v);
    }
    return h;
}

double entropy_bits(const Matrix& m)
{
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lam = solver.eigenvalues()[i];
        if (lam > kEntropyEigCut) s -= lam * std::log2(lam);
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho)
{
    return entropy_bits(rho.matrix());
}

double conditional_entropy(const DensityMatrix& rho, const std::vector<int>& target,
                           const std::vector<int>& condition)
{
    check_disjoint(target, condition, "conditional_entropy");
    const Matrix joint = partial_trace(rho.matrix(), rho.dims(), sorted_union(target, condition));
    const Matrix cond = partial_trace(rho.matrix(), rho.dims(), sorted_union(condition, {}));
    return entropy_bits(joint) - entropy_bits(cond);
}

double mutual_information(const DensityMatrix& rho, const std::vector<int>& part1,
                          const std::vector<int>& part2)
{
    check_disjoint(part1, part2, "mutual_information");
    const Matrix r1 = partial_trace(rho.matrix(), rho.dims(), sorted_union(part1, {}));
    const Matrix r2 = partial_trace(rho.matrix(), rho.dims(), sorted_union(part2, {}));
    const Matrix r12 = partial_trace(rho.matrix(), rho.dims(), sorted_union(part1, part2));
    return entropy_bits(r1) + entropy_bits(r2) - entropy_bits(r12);
}

DensityMatrix post_measurement_state(const DensityMatrix& rho, const Observable& obs, int measured)
{
    if (measured < 0 || measured >= rho.num_subsystems()) {
        throw invalid_subsystem_error("post_measurement_state: measured index out of range");
    }
    if (obs.dim() != rho.dims()[measured]) {
        std::ostringstream os;
        os << "post_measurement_state: observable dimension " << obs.dim()
           << " != subsystem dimension " << rho.dims()[measured];
        throw unsupported_dimension_error(os.str());
    }
    Matrix out = Matrix::Zero(rho.dim(), rho.dim());
    for (int i = 0; i < obs.dim(); ++i) {
        Vector v = obs.eigenvectors().col(i);
        const Matrix p = embed(v * v.adjoint(), rho.dims(), measured);
        out += p * rho.matrix() * p;
    }
    // Symmetrize away the last bits of round-off before revalidation.
    out = 0.5 * (out + out.adjoint().eval());
    return DensityMatrix(std::move(out), rho.dims());
}

MeasurementOutcomes measurement_distribution(const DensityMatrix& rho,
                                             const ProjectiveMeasurement& meas, int measured)
{
    if (measured < 0 || measured >= rho.num_subsystems()) {
        throw invalid_subsystem_error("measurement_distribution: measured index out of range");
    }
    if (meas.dim() != rho.dims()[measured]) {
        throw unsupported_dimension_error("measurement_distribution: measurement dimension mismatch");
    }
    std::vector<int> rest;
    for (int k = 0; k < rho.num_subsystems(); ++k) {
        if (k != measured) rest.push_back(k);
    }
    if (rest.empty()) {
        throw precondition_error("measurement_distribution: state has no memory subsystems");
    }
    std::vector<int> rest_dims;
    for (int k : rest) rest_dims.push_back(rho.dims()[k]);

    std::vector<double> probs;
    std::vector<std::optional<DensityMatrix>> conds;
    for (const Matrix& proj : meas.projectors()) {
        const Matrix p = embed(proj, rho.dims(), measured);
        Matrix m = p * rho.matrix() * p;
        const double pi = m.trace().real();
        probs.push_back(std::max(pi, 0.0));
        if (pi > kZeroOutcome) {
            Matrix cond = partial_trace(m, rho.dims(), rest) / pi;
            cond = 0.5 * (cond + cond.adjoint().eval());
            conds.emplace_back(DensityMatrix(std::move(cond), rest_dims));
        } else {
            conds.emplace_back(std::nullopt);
        }
    }
    return {OutcomeDistribution(std::move(probs)), std::move(conds)};
}

double holevo_quantity(const DensityMatrix& rho, const Observable& obs, int measured,
                       const std::vector<int>& memory)
{
    check_disjoint({measured}, memory, "holevo_quantity");
    const std::vector<int> mem = sorted_union(memory, {});
    const Matrix rho_mem = partial_trace(rho.matrix(), rho.dims(), mem);

    double avg = 0.0;
    for (int i = 0; i < obs.dim(); ++i) {
        Vector v = obs.eigenvectors().col(i);
        const Matrix p = embed(v * v.adjoint(), rho.dims(), measured);
        Matrix m = p * rho.matrix() * p;
        const double pi = m.trace().real();
        if (pi > kZeroOutcome) {
            avg += pi * entropy_bits(partial_trace(m, rho.dims(), mem) / pi);
        }
    }
    return entropy_bits(rho_mem) - avg;
}

double measured_conditional_entropy(const DensityMatrix& rho, const Observable& obs, int measured,
                                    const std::vector<int>& memory)
{
    check_disjoint({measured}, memory, "measured_conditional_entropy");
    const DensityMatrix pm = post_measurement_state(rho, obs, measured);
    return conditional_entropy(pm, {measured}, memory);
}

} // namespace qcorr
