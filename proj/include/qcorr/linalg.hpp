#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qcorr/errors.hpp"

namespace qcorr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Validation tolerances, one order above double eigensolver noise at dim 16.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigFloor = -1e-10;
inline constexpr double kPureNormTol = 1e-12;

/// Kronecker product a (x) b. Total on square matrices of any dimension.
Matrix tensor(const Matrix& a, const Matrix& b);

/// Left fold of tensor() over three or more factors.
Matrix tensor(std::initializer_list<Matrix> factors);

/// op placed on subsystem k, identity on the others: I (x) ... (x) op (x) ... (x) I.
Matrix embed(const Matrix& op, const std::vector<int>& dims, int k);

struct EigResult {
    Eigen::VectorXd values; // ascending
    Matrix vectors;         // orthonormal columns, matching order
};

/// Eigendecomposition of a Hermitian matrix (checked within 1e-8).
EigResult eig_hermitian(const Matrix& m);

/// Partial trace over a raw matrix; keep indices refer to positions in dims,
/// kept subsystems stay in their original order.
Matrix partial_trace(const Matrix& m, const std::vector<int>& dims, const std::vector<int>& keep);

/// Hermitian, positive semidefinite, trace-one matrix over an ordered list of
/// subsystems (subsystem 0 is "A"). Invariants are asserted at construction.
class DensityMatrix {
public:
    DensityMatrix(Matrix m, std::vector<int> dims);

    const Matrix& matrix() const { return mat_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim() const { return static_cast<int>(mat_.rows()); }
    int num_subsystems() const { return static_cast<int>(dims_.size()); }

private:
    Matrix mat_;
    std::vector<int> dims_;
};

/// Normalized state vector over an ordered list of subsystems.
class PureState {
public:
    PureState(Vector amplitudes, std::vector<int> dims);

    const Vector& amplitudes() const { return amps_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim() const { return static_cast<int>(amps_.size()); }

private:
    Vector amps_;
    std::vector<int> dims_;
};

/// Hermitian observable with its cached orthonormal eigenbasis (ascending).
class Observable {
public:
    explicit Observable(Matrix m);

    static Observable pauli_x();
    static Observable pauli_y();
    static Observable pauli_z();

    const Matrix& matrix() const { return mat_; }
    const Eigen::VectorXd& eigenvalues() const { return evals_; }
    const Matrix& eigenvectors() const { return evecs_; }
    int dim() const { return static_cast<int>(mat_.rows()); }

    /// True when two eigenvalues coincide within tol (eigenbasis not unique).
    bool degenerate(double tol = 1e-8) const;

private:
    Matrix mat_;
    Eigen::VectorXd evals_;
    Matrix evecs_;
};

/// Rank-1 projector |psi><psi| as a validated density matrix.
DensityMatrix project_pure(const PureState& psi);

/// Reduced state over the kept subsystems.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

} // namespace qcorr
