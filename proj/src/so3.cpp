#include "depint/so3.hpp"

#include <cmath>

#include <Eigen/Geometry>

namespace depint::so3 {

namespace {
constexpr double kTaylorThreshold = 1e-4;
}

Eigen::Matrix3d hat(const AlgebraVector& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
      -v.y(), v.x(), 0.0;
  return m;
}

AlgebraVector vee(const Eigen::Matrix3d& a) {
  const double sym = (a + a.transpose()).cwiseAbs().maxCoeff();
  if (sym > 1e-10) {
    throw std::invalid_argument("vee: input is not skew-symmetric (|A + A^T|_max = " +
                                std::to_string(sym) + ")");
  }
  return AlgebraVector(a(2, 1), a(0, 2), a(1, 0));
}

GroupElement exp_so3(const AlgebraVector& v) {
  const double theta2 = v.squaredNorm();
  const double theta = std::sqrt(theta2);
  // sin(theta)/theta and (1 - cos(theta))/theta^2
  double a, b;
  if (theta < kTaylorThreshold) {
    a = 1.0 - theta2 / 6.0 * (1.0 - theta2 / 20.0);
    b = 0.5 - theta2 / 24.0 * (1.0 - theta2 / 30.0);
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / theta2;
  }
  const Eigen::Matrix3d w = hat(v);
  return Eigen::Matrix3d::Identity() + a * w + b * (w * w);
}

AlgebraVector log_so3(const GroupElement& r) {
  const double tr = r.trace();
  if (tr <= -1.0 + 1e-6) {
    throw AngleNearPiError("log_so3: rotation angle too close to pi (trace = " +
                           std::to_string(tr) + ")");
  }
  const double cos_theta = std::min(1.0, std::max(-1.0, 0.5 * (tr - 1.0)));
  const double theta = std::acos(cos_theta);
  // w = 2 sin(theta) * axis
  const AlgebraVector w(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  double factor;  // theta / (2 sin(theta))
  if (theta < kTaylorThreshold) {
    const double theta2 = theta * theta;
    factor = 0.5 * (1.0 + theta2 / 6.0 * (1.0 + 7.0 * theta2 / 60.0));
  } else {
    factor = 0.5 * theta / std::sin(theta);
  }
  return factor * w;
}

AlgebraVector Ad(const GroupElement& g, const AlgebraVector& xi) {
  return g * xi;
}

MomentumVector coAd(const GroupElement& g, const MomentumVector& mu) {
  // g^T rather than g: fixed by the pairing identity <coAd(g,mu), xi> = <mu, Ad(g,xi)>.
  return g.transpose() * mu;
}

double rotation_angle(const GroupElement& r) {
  const double cos_theta = std::min(1.0, std::max(-1.0, 0.5 * (r.trace() - 1.0)));
  return std::acos(cos_theta);
}

bool is_rotation(const GroupElement& r, double tol) {
  const double ortho = (r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  return ortho <= tol && std::abs(r.determinant() - 1.0) <= tol;
}

GroupElement project_to_group(const GroupElement& r) {
  Eigen::Quaterniond q(r);
  q.normalize();
  return q.toRotationMatrix();
}

} // namespace depint::so3
