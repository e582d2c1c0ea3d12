#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qcorr {

namespace {

double hermiticity_defect(const Matrix& m)
{
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void check_subsystems(const std::vector<int>& dims, const std::vector<int>& idx, const char* who)
{
    if (idx.empty()) {
        throw invalid_subsystem_error(std::string(who) + ": empty subsystem set");
    }
    for (int k : idx) {
        if (k < 0 || k >= static_cast<int>(dims.size())) {
            std::ostringstream os;
            os << who << ": subsystem index " << k << " out of range for " << dims.size() << " subsystems";
            throw invalid_subsystem_error(os.str());
        }
    }
}

// Digits of a flat basis index in the mixed radix given by dims, most
// significant subsystem first (subsystem 0 = leftmost ket label).
void to_digits(int flat, const std::vector<int>& dims, std::vector<int>& out)
{
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        out[k] = flat % dims[k];
        flat /= dims[k];
    }
}

int from_digits(const std::vector<int>& digits, const std::vector<int>& dims, const std::vector<int>& subset)
{
    int v = 0;
    for (int k : subset) {
        v = v * dims[k] + digits[k];
    }
    return v;
}

} // namespace

Matrix tensor(const Matrix& a, const Matrix& b)
{
    const Eigen::Index ra = a.rows(), ca = a.cols();
    const Eigen::Index rb = b.rows(), cb = b.cols();
    Matrix out(ra * rb, ca * cb);
    for (Eigen::Index i = 0; i < ra; ++i) {
        for (Eigen::Index j = 0; j < ca; ++j) {
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
        }
    }
    return out;
}

Matrix tensor(std::initializer_list<Matrix> factors)
{
    Matrix out = Matrix::Identity(1, 1);
    for (const Matrix& f : factors) {
        out = tensor(out, f);
    }
    return out;
}

Matrix embed(const Matrix& op, const std::vector<int>& dims, int k)
{
    check_subsystems(dims, {k}, "embed");
    if (op.rows() != dims[k] || op.cols() != dims[k]) {
        std::ostringstream os;
        os << "embed: operator is " << op.rows() << "x" << op.cols()
           << " but subsystem " << k << " has dimension " << dims[k];
        throw unsupported_dimension_error(os.str());
    }
    int pre = 1, post = 1;
    for (int i = 0; i < k; ++i) pre *= dims[i];
    for (int i = k + 1; i < static_cast<int>(dims.size()); ++i) post *= dims[i];
    return tensor(tensor(Matrix::Identity(pre, pre), op), Matrix::Identity(post, post));
}

EigResult eig_hermitian(const Matrix& m)
{
    if (m.rows() != m.cols()) {
        throw precondition_error("eig_hermitian: matrix is not square");
    }
    if (hermiticity_defect(m) > 1e-8) {
        std::ostringstream os;
        os << "eig_hermitian: matrix is not Hermitian (defect " << hermiticity_defect(m) << ")";
        throw precondition_error(os.str());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eig_hermitian: eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix partial_trace(const Matrix& m, const std::vector<int>& dims, const std::vector<int>& keep)
{
    check_subsystems(dims, keep, "partial_trace");
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

    const int n = static_cast<int>(dims.size());
    const int total = std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
    if (m.rows() != total || m.cols() != total) {
        throw precondition_error("partial_trace: matrix dimension does not match dims product");
    }

    std::vector<int> traced;
    for (int k = 0; k < n; ++k) {
        if (!std::binary_search(kept.begin(), kept.end(), k)) traced.push_back(k);
    }

    int kept_dim = 1;
    for (int k : kept) kept_dim *= dims[k];

    Matrix out = Matrix::Zero(kept_dim, kept_dim);
    std::vector<int> dr(n), dc(n);
    for (int r = 0; r < total; ++r) {
        to_digits(r, dims, dr);
        for (int c = 0; c < total; ++c) {
            to_digits(c, dims, dc);
            bool diagonal = true;
            for (int t : traced) {
                if (dr[t] != dc[t]) { diagonal = false; break; }
            }
            if (!diagonal) continue;
            out(from_digits(dr, dims, kept), from_digits(dc, dims, kept)) += m(r, c);
        }
    }
    return out;
}

DensityMatrix::DensityMatrix(Matrix m, std::vector<int> dims)
    : mat_(std::move(m)), dims_(std::move(dims))
{
    if (mat_.rows() != mat_.cols()) {
        throw validation_error("DensityMatrix: matrix is not square");
    }
    int prod = 1;
    for (int d : dims_) {
        if (d < 2) throw validation_error("DensityMatrix: every subsystem dimension must be >= 2");
        prod *= d;
    }
    if (prod != mat_.rows()) {
        std::ostringstream os;
        os << "DensityMatrix: dims product " << prod << " != matrix dimension " << mat_.rows();
        throw validation_error(os.str());
    }
    const double hd = hermiticity_defect(mat_);
    if (hd > kHermTol) {
        std::ostringstream os;
        os << "DensityMatrix: not Hermitian (defect " << hd << ")";
        throw validation_error(os.str());
    }
    const double tr = mat_.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol || std::abs(mat_.trace().imag()) > kTraceTol) {
        std::ostringstream os;
        os << "DensityMatrix: trace " << tr << " != 1";
        throw validation_error(os.str());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(mat_, Eigen::EigenvaluesOnly);
    const double lo = solver.eigenvalues().minCoeff();
    if (lo < kEigFloor) {
        std::ostringstream os;
        os << "DensityMatrix: negative eigenvalue " << lo;
        throw validation_error(os.str());
    }
}

PureState::PureState(Vector amplitudes, std::vector<int> dims)
    : amps_(std::move(amplitudes)), dims_(std::move(dims))
{
    int prod = 1;
    for (int d : dims_) {
        if (d < 2) throw validation_error("PureState: every subsystem dimension must be >= 2");
        prod *= d;
    }
    if (prod != amps_.size()) {
        throw validation_error("PureState: dims product does not match amplitude count");
    }
    const double n2 = amps_.squaredNorm();
    if (std::abs(n2 - 1.0) > kPureNormTol) {
        std::ostringstream os;
        os << "PureState: squared norm " << n2 << " != 1";
        throw validation_error(os.str());
    }
}

Observable::Observable(Matrix m) : mat_(std::move(m))
{
    EigResult e = eig_hermitian(mat_); // rejects non-Hermitian input
    evals_ = std::move(e.values);
    evecs_ = std::move(e.vectors);
}

Observable Observable::pauli_x()
{
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return Observable(m);
}

Observable Observable::pauli_y()
{
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return Observable(m);
}

Observable Observable::pauli_z()
{
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return Observable(m);
}

bool Observable::degenerate(double tol) const
{
    for (Eigen::Index i = 0; i + 1 < evals_.size(); ++i) {
        if (evals_[i + 1] - evals_[i] < tol) return true;
    }
    return false;
}

DensityMatrix project_pure(const PureState& psi)
{
    Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
    return DensityMatrix(std::move(m), psi.dims());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep)
{
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    Matrix m = partial_trace(rho.matrix(), rho.dims(), kept);
    std::vector<int> kdims;
    kdims.reserve(kept.size());
    for (int k : kept) kdims.push_back(rho.dims()[k]);
    return DensityMatrix(std::move(m), std::move(kdims));
}

} // namespace qcorr
