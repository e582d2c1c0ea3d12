#pragma once

#include <vector>

#include "qcorr/linalg.hpp"

namespace qcorr {

/// Complete set of rank-1 orthogonal projectors on one subsystem.
class ProjectiveMeasurement {
public:
    explicit ProjectiveMeasurement(std::vector<Matrix> projectors);

    /// Projectors onto the eigenbasis of an observable.
    static ProjectiveMeasurement from_observable(const Observable& obs);

    const std::vector<Matrix>& projectors() const { return projs_; }
    int dim() const { return static_cast<int>(projs_.front().rows()); }
    int outcomes() const { return static_cast<int>(projs_.size()); }

private:
    std::vector<Matrix> projs_;
};

/// Qubit measurement along the Bloch direction (theta, phi): projectors onto
/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> and its orthogonal complement.
/// Angles outside [0,pi] x [0,2pi) are wrapped.
ProjectiveMeasurement bloch_measurement(double theta, double phi);

/// Wrap arbitrary (theta, phi) into theta in [0,pi], phi in [0,2pi).
void wrap_bloch_angles(double& theta, double& phi);

} // namespace qcorr
