#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>

#include "qlogic/errors.hpp"

namespace qlogic {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Absolute Frobenius-norm tolerance used by every matrix comparison.
/// Must satisfy 0 < eps < 1e-3; dimensions in scope are small enough that no
/// relative scaling is needed.
class Tolerance {
public:
    Tolerance() = default;
    explicit Tolerance(double eps);

    double eps() const noexcept { return eps_; }
    /// Eigenvalue threshold for subspace extraction (meet); decoupled from the
    /// entry-level eps.
    double subspace_eps() const noexcept;

private:
    double eps_ = 1e-9;
};

/// Hermitian idempotent matrix; the unique representation of a closed
/// subspace, so equality of subspaces is a norm check on matrices.
class Projector {
public:
    /// Validates ‖P - P†‖_F ≤ eps and ‖P² - P‖_F ≤ eps.
    static Projector from_matrix(Matrix m, Tolerance tol = {});
    static Projector zero(Eigen::Index dim);
    static Projector identity(Eigen::Index dim);

    const Matrix& matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }
    /// Subspace dimension (trace, rounded).
    Eigen::Index rank() const;

private:
    explicit Projector(Matrix m) : m_(std::move(m)) {}
    Matrix m_;
};

/// ‖a - b‖_F ≤ eps.
bool approx_equal(const Matrix& a, const Matrix& b, double eps);

/// Plain Kronecker product (row-major block layout).
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Projector onto the span of the given vectors: orthonormalizes the input
/// (rank-revealing) and returns the sum of the resulting dyads. An empty list
/// yields the zero projector.
Projector projector_from_basis(Eigen::Index dim, std::span<const StateVector> vectors,
                               Tolerance tol = {});

enum class Axis { X, Z };

struct PauliEigenprojectors {
    Projector plus;
    Projector minus;
};

/// Spin-½ eigenprojectors: z gives diag(1,0) / diag(0,1); x gives
/// ½[[1,±1],[±1,1]].
PauliEigenprojectors pauli_eigenprojectors(Axis axis);

/// ‖PQ - QP‖_F ≤ eps.
bool commutes(const Projector& p, const Projector& q, Tolerance tol = {});

/// Orthocomplement I - P.
Projector ortho(const Projector& p);

/// Projector onto range(P) ∩ range(Q): the eigenspace of P + Q at eigenvalue 2
/// (threshold |λ-2| ≤ √eps). Equals PQ for commuting inputs.
Projector meet(const Projector& p, const Projector& q, Tolerance tol = {});

/// Projector onto the closed span, ortho(meet(ortho(P), ortho(Q))). Equals
/// P + Q - PQ for commuting inputs.
Projector join(const Projector& p, const Projector& q, Tolerance tol = {});

/// The lattice conditional join(ortho(P), meet(P, Q)).
Projector sasaki_hook(const Projector& p, const Projector& q, Tolerance tol = {});

/// Range inclusion: ‖QP - P‖_F ≤ eps.
bool leq(const Projector& p, const Projector& q, Tolerance tol = {});

struct DistributivityReport {
    Projector lhs;  // meet(P, join(Q, R))
    Projector rhs;  // join(meet(P, Q), meet(P, R))
    bool distributive;
};

DistributivityReport distributivity_witness(const Projector& p, const Projector& q,
                                            const Projector& r, Tolerance tol = {});

/// Checks Q = join(P, meet(Q, ortho(P))) for P ≤ Q. Throws PreconditionError
/// when leq(P, Q) fails.
bool orthomodular_check(const Projector& p, const Projector& q, Tolerance tol = {});

enum class StateTruth { True, False, Indeterminate };

/// True iff ‖Pψ - ψ‖ ≤ eps, False iff ‖Pψ‖ ≤ eps, Indeterminate otherwise.
/// ψ must be unit-norm within eps.
StateTruth apply_and_classify(const Projector& p, const StateVector& psi, Tolerance tol = {});

}  // namespace qlogic
