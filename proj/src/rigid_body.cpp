#include "depint/rigid_body.hpp"

#include <stdexcept>
#include <string>

#include "depint/so3.hpp"

namespace depint {

namespace {

void check_pairwise_sums(const Eigen::Vector3d& lambda) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!(lambda[i] + lambda[j] > 0.0)) {
        throw std::invalid_argument(
            "inertia: lambda_" + std::to_string(i + 1) + " + lambda_" + std::to_string(j + 1) +
            " = " + std::to_string(lambda[i] + lambda[j]) + " violates the pair (" +
            std::to_string(i + 1) + "," + std::to_string(j + 1) + ") positivity constraint");
      }
    }
  }
}

Eigen::Vector3d classical_from_lambda(const Eigen::Vector3d& lambda) {
  return {lambda[1] + lambda[2], lambda[0] + lambda[2], lambda[0] + lambda[1]};
}

} // namespace

InertiaSpec InertiaSpec::from_lambda(const Eigen::Vector3d& lambda) {
  if (!lambda.allFinite()) {
    throw std::invalid_argument("inertia: lambda entries must be finite");
  }
  check_pairwise_sums(lambda);
  return InertiaSpec(lambda, classical_from_lambda(lambda));
}

InertiaSpec InertiaSpec::from_classical(const Eigen::Vector3d& classical) {
  if (!classical.allFinite()) {
    throw std::invalid_argument("inertia: classical entries must be finite");
  }
  Eigen::Vector3d lambda;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    lambda[i] = 0.5 * (classical[j] + classical[k] - classical[i]);
  }
  check_pairwise_sums(lambda);
  return InertiaSpec(lambda, classical_from_lambda(lambda));
}

MomentumVector inertia_apply(const InertiaSpec& inertia, const AlgebraVector& xi) {
  return inertia.classical().cwiseProduct(xi);
}

double energy(const InertiaSpec& inertia, const AlgebraVector& xi) {
  return 0.5 * xi.dot(inertia_apply(inertia, xi));
}

MomentumVector mv_legendre(const InertiaSpec& inertia, const GroupElement& f) {
  const Eigen::Matrix3d m = f.transpose() * inertia.lambda_matrix() -
                            inertia.lambda_matrix() * f;
  // m is skew by construction; read it off directly.
  return MomentumVector(m(2, 1), m(0, 2), m(1, 0));
}

Eigen::Matrix3d mv_legendre_jacobian(const InertiaSpec& inertia, const GroupElement& f) {
  const Eigen::Matrix3d b = f.transpose() * inertia.lambda_matrix();
  return b - b.trace() * Eigen::Matrix3d::Identity();
}

double casimir_group(const InertiaSpec& inertia, const GroupElement& f) {
  const Eigen::Matrix3d fl = f * inertia.lambda_matrix();
  return (fl * fl).trace();
}

double casimir_dual(const MomentumVector& mu) {
  return mu.squaredNorm();
}

double casimir_algebra(const InertiaSpec& inertia, const AlgebraVector& xi) {
  return casimir_dual(inertia_apply(inertia, xi));
}

double MoserVeselovLagrangian::eval(const GroupElement& f) const {
  return inertia_.lambda().dot(f.diagonal());
}

MomentumVector MoserVeselovLagrangian::left_momentum(const GroupElement& f) const {
  return mv_legendre(inertia_, f);
}

MomentumVector MoserVeselovLagrangian::right_momentum(const GroupElement& f) const {
  const Eigen::Matrix3d m = inertia_.lambda_matrix() * f.transpose() -
                            f * inertia_.lambda_matrix();
  return MomentumVector(m(2, 1), m(0, 2), m(1, 0));
}

Eigen::Matrix3d MoserVeselovLagrangian::left_momentum_jacobian(const GroupElement& f) const {
  return mv_legendre_jacobian(inertia_, f);
}

Eigen::Matrix3d MoserVeselovLagrangian::right_momentum_jacobian(const GroupElement& f) const {
  const Eigen::Matrix3d fl = f * inertia_.lambda_matrix();
  return (fl - fl.trace() * Eigen::Matrix3d::Identity()) * f;
}

} // namespace depint
