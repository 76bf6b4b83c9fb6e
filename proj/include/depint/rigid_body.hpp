#pragma once

#include "depint/lie_interface.hpp"
#include "depint/types.hpp"

namespace depint {

/// Inertia data for the free rigid body.
///
/// lambda = (L1, L2, L3) is the diagonal of the matrix Lambda entering the
/// inertia operator J(xi) = Lambda hat(xi) + hat(xi) Lambda, subject to
/// L_i + L_j > 0 for i != j. classical = (J1, J2, J3) are the induced
/// principal moments J_i = L_j + L_k (strictly positive).
class InertiaSpec {
public:
  static InertiaSpec from_lambda(const Eigen::Vector3d& lambda);
  /// J_i = L_j + L_k inverted as L_i = (J_j + J_k - J_i) / 2.
  static InertiaSpec from_classical(const Eigen::Vector3d& classical);

  const Eigen::Vector3d& lambda() const { return lambda_; }
  const Eigen::Vector3d& classical() const { return classical_; }
  Eigen::Matrix3d lambda_matrix() const { return lambda_.asDiagonal(); }

private:
  InertiaSpec(const Eigen::Vector3d& lambda, const Eigen::Vector3d& classical)
      : lambda_(lambda), classical_(classical) {}

  Eigen::Vector3d lambda_;
  Eigen::Vector3d classical_;
};

/// Inertia operator in vector coordinates: (J1 x1, J2 x2, J3 x3), which equals
/// vee(Lambda hat(xi) + hat(xi) Lambda).
MomentumVector inertia_apply(const InertiaSpec& inertia, const AlgebraVector& xi);

/// Kinetic energy 1/2 sum J_i xi_i^2 (= 1/4 Tr(hat(xi)^T J(hat(xi))) under the
/// half-trace pairing).
double energy(const InertiaSpec& inertia, const AlgebraVector& xi);

/// Legendre transform of ell(f) = Tr(f Lambda): the left momentum
/// vee(f^T Lambda - Lambda f). Coincides with left_pullback_dl of
/// MoserVeselovLagrangian; see the convention note on that class.
MomentumVector mv_legendre(const InertiaSpec& inertia, const GroupElement& f);

/// Derivative of x |-> mv_legendre(f exp(hat(x))) at x = 0:
/// f^T Lambda - Tr(f Lambda) I. At f = I this is -diag(J1, J2, J3).
Eigen::Matrix3d mv_legendre_jacobian(const InertiaSpec& inertia, const GroupElement& f);

/// Casimir on the group: Tr(f Lambda f Lambda). Satisfies
/// casimir_group(f) + |mv_legendre(f)|^2 = Tr(Lambda^2) identically.
double casimir_group(const InertiaSpec& inertia, const GroupElement& f);

/// Casimir on the dual algebra: |mu|^2.
double casimir_dual(const MomentumVector& mu);

/// Casimir on the algebra: |J(xi)|^2 = casimir_dual(inertia_apply(xi)).
double casimir_algebra(const InertiaSpec& inertia, const AlgebraVector& xi);

/// Reduced discrete Lagrangian of the free rigid body, ell(f) = Tr(f Lambda).
///
/// Convention note: with hat(v) w = v x w, the half-trace pairing, and the
/// defining curve d/de ell(f exp(e xi)), the closed-form left momentum is
/// vee(f^T Lambda - Lambda f). The body transition solved by the stepper then
/// satisfies f ~ exp(-h hat(Omega)), and the discrete momentum carries the
/// h-scaling Pi ~ h J(Omega).
class MoserVeselovLagrangian final : public ReducedLagrangian {
public:
  explicit MoserVeselovLagrangian(const InertiaSpec& inertia) : inertia_(inertia) {}

  double eval(const GroupElement& f) const override;
  MomentumVector left_momentum(const GroupElement& f) const override;
  MomentumVector right_momentum(const GroupElement& f) const override;
  Eigen::Matrix3d left_momentum_jacobian(const GroupElement& f) const override;
  Eigen::Matrix3d right_momentum_jacobian(const GroupElement& f) const override;
  bool has_analytic_jacobian() const override { return true; }

  const InertiaSpec& inertia() const { return inertia_; }

private:
  InertiaSpec inertia_;
};

} // namespace depint
