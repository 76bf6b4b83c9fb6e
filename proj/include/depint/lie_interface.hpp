#pragma once

#include "depint/types.hpp"

namespace depint {

/// Pairing between so(3)* and so(3) in R^3 coordinates. Normalized so the hat
/// map is an isometry: pairing(mu, xi) = mu . xi = 1/2 Tr(hat(mu)^T hat(xi)).
double pairing(const MomentumVector& mu, const AlgebraVector& xi);

/// Operations the reduced machinery requires of a group backend. Values are
/// immutable; implementations must be stateless and thread-safe.
///
/// Required identities:
///   pairing(coAd(g, mu), xi) = pairing(mu, Ad(g, xi))   for all g, mu, xi
///   Ad(compose(g, h), xi) = Ad(g, Ad(h, xi));  Ad(identity, .) = id
///   log(exp(xi)) = xi for |xi| < pi.
class GroupOps {
public:
  virtual ~GroupOps() = default;

  virtual GroupElement identity() const = 0;
  virtual GroupElement compose(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement inverse(const GroupElement& g) const = 0;
  virtual GroupElement exp(const AlgebraVector& xi) const = 0;
  virtual AlgebraVector log(const GroupElement& g) const = 0;
  virtual AlgebraVector Ad(const GroupElement& g, const AlgebraVector& xi) const = 0;
  virtual MomentumVector coAd(const GroupElement& g, const MomentumVector& mu) const = 0;
  virtual double pair(const MomentumVector& mu, const AlgebraVector& xi) const = 0;

  /// Re-normalization onto the group, applied periodically by long-running
  /// products to stop representation drift. Default: identity map.
  virtual GroupElement project(const GroupElement& g) const { return g; }
};

/// The SO(3) backend (stateless singleton).
const GroupOps& so3_ops();

/// A reduced Lagrangian ell : G -> R.
///
/// The two momenta are the pull-backs of the differential by left/right
/// translation, defined through the chart curves
///   left_momentum(f)  . xi = d/de ell(f exp(e xi)) |_{e=0}
///   right_momentum(f) . xi = d/de ell(exp(e xi) f) |_{e=0}
/// and related by right_momentum(f) = coAd(f^-1, left_momentum(f)).
///
/// Defaults use central finite differences (step 1e-5) in the exponential
/// chart; subclasses with closed forms should override them.
class ReducedLagrangian {
public:
  explicit ReducedLagrangian(const GroupOps& ops = so3_ops()) : ops_(ops) {}
  virtual ~ReducedLagrangian() = default;

  virtual double eval(const GroupElement& f) const = 0;

  virtual MomentumVector left_momentum(const GroupElement& f) const;
  virtual MomentumVector right_momentum(const GroupElement& f) const;

  /// Derivative of x |-> left_momentum(f exp(hat(x))) at x = 0, as used by the
  /// Newton stepper. Default: finite differences of left_momentum.
  virtual Eigen::Matrix3d left_momentum_jacobian(const GroupElement& f) const;

  /// Same for x |-> right_momentum(f exp(hat(x))).
  virtual Eigen::Matrix3d right_momentum_jacobian(const GroupElement& f) const;

  virtual bool has_analytic_jacobian() const { return false; }

  const GroupOps& group() const { return ops_; }

  static constexpr double kFdStep = 1e-5;

private:
  const GroupOps& ops_;
};

/// L*_f dl(f): covector nu with nu . xi = d/de ell(f exp(e xi)) |_{e=0}.
MomentumVector left_pullback_dl(const ReducedLagrangian& ell, const GroupElement& f);

/// R*_f dl(f): covector nu with nu . xi = d/de ell(exp(e xi) f) |_{e=0}.
MomentumVector right_pullback_dl(const ReducedLagrangian& ell, const GroupElement& f);

/// Finite-difference evaluations of the same covectors, bypassing any closed
/// forms. Used by the consistency checks.
MomentumVector fd_left_pullback_dl(const ReducedLagrangian& ell, const GroupElement& f,
                                   double step = ReducedLagrangian::kFdStep);
MomentumVector fd_right_pullback_dl(const ReducedLagrangian& ell, const GroupElement& f,
                                    double step = ReducedLagrangian::kFdStep);

/// Finite-difference chart Jacobians of the momentum maps, bypassing any
/// closed forms (used when StepperConfig::fd_jacobian is set).
Eigen::Matrix3d fd_left_momentum_jacobian(const ReducedLagrangian& ell, const GroupElement& f,
                                          double step = ReducedLagrangian::kFdStep);
Eigen::Matrix3d fd_right_momentum_jacobian(const ReducedLagrangian& ell, const GroupElement& f,
                                           double step = ReducedLagrangian::kFdStep);

} // namespace depint
