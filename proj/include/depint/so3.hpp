#pragma once

#include <stdexcept>

#include "depint/types.hpp"

namespace depint::so3 {

/// Thrown by log_so3 when the rotation angle is too close to pi for the axis
/// to be determined reliably (trace(R) <= -1 + 1e-6).
class AngleNearPiError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// hat(v) is the skew matrix with hat(v) * w = v x w for all w.
Eigen::Matrix3d hat(const AlgebraVector& v);

/// Inverse of hat. Rejects input whose symmetric part exceeds 1e-10.
AlgebraVector vee(const Eigen::Matrix3d& a);

/// Rodrigues exponential. Switches to a Taylor branch below theta = 1e-4;
/// the two branches agree to ~1e-16 at the crossover.
GroupElement exp_so3(const AlgebraVector& v);

/// Principal logarithm, valid away from angle pi. exp_so3(log_so3(R)) = R to 1e-10.
/// Throws AngleNearPiError when trace(R) <= -1 + 1e-6.
AlgebraVector log_so3(const GroupElement& r);

/// Adjoint action Ad_g xi = vee(g hat(xi) g^-1); in vector coordinates g * xi.
AlgebraVector Ad(const GroupElement& g, const AlgebraVector& xi);

/// Coadjoint action Ad*_g, the adjoint of Ad_g under the pairing:
/// <coAd(g, mu), xi> = <mu, Ad(g, xi)>. In vector coordinates g^T * mu.
MomentumVector coAd(const GroupElement& g, const MomentumVector& mu);

/// Rotation angle in [0, pi], read off the trace.
double rotation_angle(const GroupElement& r);

/// Max-norm checks of R^T R = I and det R = 1.
bool is_rotation(const GroupElement& r, double tol = 1e-12);

/// Nearest rotation via quaternion normalization; used to stop orthogonality
/// drift from accumulating across long products.
GroupElement project_to_group(const GroupElement& r);

} // namespace depint::so3
