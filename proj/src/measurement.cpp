#include "qcorr/measurement.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qcorr {

namespace {
constexpr double kProjTol = 1e-10;
}

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<Matrix> projectors)
    : projs_(std::move(projectors))
{
    if (projs_.empty()) {
        throw precondition_error("ProjectiveMeasurement: no projectors");
    }
    const Eigen::Index d = projs_.front().rows();
    Matrix sum = Matrix::Zero(d, d);
    for (const Matrix& p : projs_) {
        if (p.rows() != d || p.cols() != d) {
            throw precondition_error("ProjectiveMeasurement: projector dimensions differ");
        }
        if ((p * p - p).cwiseAbs().maxCoeff() > kProjTol) {
            throw precondition_error("ProjectiveMeasurement: projector is not idempotent");
        }
        if (std::abs(p.trace().real() - 1.0) > kProjTol) {
            throw precondition_error("ProjectiveMeasurement: projector is not rank one");
        }
        sum += p;
    }
    if ((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > kProjTol) {
        throw precondition_error("ProjectiveMeasurement: projectors do not resolve the identity");
    }
}

ProjectiveMeasurement ProjectiveMeasurement::from_observable(const Observable& obs)
{
    std::vector<Matrix> projs;
    projs.reserve(obs.dim());
    for (int i = 0; i < obs.dim(); ++i) {
        Vector v = obs.eigenvectors().col(i);
        projs.push_back(v * v.adjoint());
    }
    return ProjectiveMeasurement(std::move(projs));
}

void wrap_bloch_angles(double& theta, double& phi)
{
    const double tau = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, tau);
    if (theta < 0) theta += tau;
    if (theta > std::numbers::pi) { // antipodal point, same axis
        theta = tau - theta;
        phi += std::numbers::pi;
    }
    phi = std::fmod(phi, tau);
    if (phi < 0) phi += tau;
}

ProjectiveMeasurement bloch_measurement(double theta, double phi)
{
    wrap_bloch_angles(theta, phi);
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    const Complex e = std::polar(1.0, phi);
    Vector v(2), w(2);
    v << c, e * s;
    w << s, -e * c;
    std::vector<Matrix> projs;
    projs.push_back(v * v.adjoint());
    projs.push_back(w * w.adjoint());
    return ProjectiveMeasurement(std::move(projs));
}

} // namespace qcorr
