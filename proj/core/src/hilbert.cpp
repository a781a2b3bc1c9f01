#include "qlogic/hilbert.hpp"

#include <cmath>
#include <string>

namespace qlogic {

namespace {

void require_same_dim(const Projector& p, const Projector& q) {
    if (p.dim() != q.dim())
        throw DimensionMismatchError("projector dimensions differ: " + std::to_string(p.dim()) +
                                     " vs " + std::to_string(q.dim()));
}

}  // namespace

Tolerance::Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0.0) || !(eps < 1e-3))
        throw ValidationError("tolerance must satisfy 0 < eps < 1e-3, got " + std::to_string(eps));
}

double Tolerance::subspace_eps() const noexcept { return std::sqrt(eps_); }

bool approx_equal(const Matrix& a, const Matrix& b, double eps) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return (a - b).norm() <= eps;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Projector Projector::from_matrix(Matrix m, Tolerance tol) {
    if (m.rows() != m.cols())
        throw ValidationError("projector matrix must be square, got " + std::to_string(m.rows()) +
                              "x" + std::to_string(m.cols()));
    if (m.rows() == 0) throw ValidationError("projector matrix must be nonempty");
    if (!m.allFinite()) throw ValidationError("projector matrix has non-finite entries");
    double herm = (m - m.adjoint()).norm();
    if (herm > tol.eps())
        throw ValidationError("matrix is not Hermitian within tolerance (residual " +
                              std::to_string(herm) + ")");
    double idem = (m * m - m).norm();
    if (idem > tol.eps())
        throw ValidationError("matrix is not idempotent within tolerance (residual " +
                              std::to_string(idem) + ")");
    return Projector(std::move(m));
}

Projector Projector::zero(Eigen::Index dim) {
    if (dim <= 0) throw ValidationError("projector dimension must be positive");
    return Projector(Matrix::Zero(dim, dim));
}

Projector Projector::identity(Eigen::Index dim) {
    if (dim <= 0) throw ValidationError("projector dimension must be positive");
    return Projector(Matrix::Identity(dim, dim));
}

Eigen::Index Projector::rank() const {
    return static_cast<Eigen::Index>(std::llround(m_.trace().real()));
}

Projector projector_from_basis(Eigen::Index dim, std::span<const StateVector> vectors,
                               Tolerance tol) {
    if (dim <= 0) throw ValidationError("projector dimension must be positive");
    for (const StateVector& v : vectors)
        if (v.size() != dim)
            throw DimensionMismatchError("basis vector of size " + std::to_string(v.size()) +
                                         " in dimension " + std::to_string(dim));
    if (vectors.empty()) return Projector::zero(dim);

    Matrix cols(dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) cols.col(static_cast<Eigen::Index>(i)) = vectors[i];

    Eigen::JacobiSVD<Matrix> svd(cols, Eigen::ComputeThinU);
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma(0) <= 0.0) return Projector::zero(dim);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma(i) > tol.subspace_eps() * sigma(0)) ++rank;
    if (rank == 0) return Projector::zero(dim);

    Matrix u = svd.matrixU().leftCols(rank);
    Matrix p = u * u.adjoint();
    p = 0.5 * (p + p.adjoint().eval());
    return Projector::from_matrix(std::move(p), tol);
}

PauliEigenprojectors pauli_eigenprojectors(Axis axis) {
    Matrix plus(2, 2), minus(2, 2);
    if (axis == Axis::Z) {
        plus << 1, 0, 0, 0;
        minus << 0, 0, 0, 1;
    } else {
        plus << 0.5, 0.5, 0.5, 0.5;
        minus << 0.5, -0.5, -0.5, 0.5;
    }
    return {Projector::from_matrix(std::move(plus)), Projector::from_matrix(std::move(minus))};
}

bool commutes(const Projector& p, const Projector& q, Tolerance tol) {
    require_same_dim(p, q);
    return (p.matrix() * q.matrix() - q.matrix() * p.matrix()).norm() <= tol.eps();
}

Projector ortho(const Projector& p) {
    return Projector::from_matrix(Matrix::Identity(p.dim(), p.dim()) - p.matrix());
}

Projector meet(const Projector& p, const Projector& q, Tolerance tol) {
    require_same_dim(p, q);
    Eigen::SelfAdjointEigenSolver<Matrix> es(p.matrix() + q.matrix());
    if (es.info() != Eigen::Success) throw Error("eigendecomposition of P + Q failed");
    const auto& values = es.eigenvalues();
    const Matrix& vectors = es.eigenvectors();
    Matrix acc = Matrix::Zero(p.dim(), p.dim());
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (std::abs(values(i) - 2.0) <= tol.subspace_eps())
            acc += vectors.col(i) * vectors.col(i).adjoint();
    acc = 0.5 * (acc + acc.adjoint().eval());
    return Projector::from_matrix(std::move(acc), tol);
}

Projector join(const Projector& p, const Projector& q, Tolerance tol) {
    return ortho(meet(ortho(p), ortho(q), tol));
}

Projector sasaki_hook(const Projector& p, const Projector& q, Tolerance tol) {
    return join(ortho(p), meet(p, q, tol), tol);
}

bool leq(const Projector& p, const Projector& q, Tolerance tol) {
    require_same_dim(p, q);
    return (q.matrix() * p.matrix() - p.matrix()).norm() <= tol.eps();
}

DistributivityReport distributivity_witness(const Projector& p, const Projector& q,
                                            const Projector& r, Tolerance tol) {
    require_same_dim(p, q);
    require_same_dim(p, r);
    Projector lhs = meet(p, join(q, r, tol), tol);
    Projector rhs = join(meet(p, q, tol), meet(p, r, tol), tol);
    bool dist = approx_equal(lhs.matrix(), rhs.matrix(), tol.eps());
    return {std::move(lhs), std::move(rhs), dist};
}

bool orthomodular_check(const Projector& p, const Projector& q, Tolerance tol) {
    require_same_dim(p, q);
    if (!leq(p, q, tol))
        throw PreconditionError("orthomodular_check requires P ≤ Q (range inclusion)");
    Projector rebuilt = join(p, meet(q, ortho(p), tol), tol);
    return approx_equal(q.matrix(), rebuilt.matrix(), tol.eps());
}

StateTruth apply_and_classify(const Projector& p, const StateVector& psi, Tolerance tol) {
    if (psi.size() != p.dim())
        throw DimensionMismatchError("state of size " + std::to_string(psi.size()) +
                                     " against projector of dimension " + std::to_string(p.dim()));
    if (std::abs(psi.norm() - 1.0) > tol.eps())
        throw NormalizationError("state is not unit-norm (‖ψ‖ = " + std::to_string(psi.norm()) +
                                 ")");
    StateVector image = p.matrix() * psi;
    if ((image - psi).norm() <= tol.eps()) return StateTruth::True;
    if (image.norm() <= tol.eps()) return StateTruth::False;
    return StateTruth::Indeterminate;
}

}  // namespace qlogic
