#include "depint/lie_interface.hpp"

#include "depint/so3.hpp"

namespace depint {

double pairing(const MomentumVector& mu, const AlgebraVector& xi) {
  return mu.dot(xi);
}

namespace {

class So3Ops final : public GroupOps {
public:
  GroupElement identity() const override { return GroupElement::Identity(); }
  GroupElement compose(const GroupElement& a, const GroupElement& b) const override {
    return a * b;
  }
  GroupElement inverse(const GroupElement& g) const override { return g.transpose(); }
  GroupElement exp(const AlgebraVector& xi) const override { return so3::exp_so3(xi); }
  AlgebraVector log(const GroupElement& g) const override { return so3::log_so3(g); }
  AlgebraVector Ad(const GroupElement& g, const AlgebraVector& xi) const override {
    return so3::Ad(g, xi);
  }
  MomentumVector coAd(const GroupElement& g, const MomentumVector& mu) const override {
    return so3::coAd(g, mu);
  }
  double pair(const MomentumVector& mu, const AlgebraVector& xi) const override {
    return pairing(mu, xi);
  }
  GroupElement project(const GroupElement& g) const override {
    return so3::project_to_group(g);
  }
};

} // namespace

const GroupOps& so3_ops() {
  static const So3Ops ops;
  return ops;
}

namespace {

// Central difference of ell along the three chart directions; `left` selects
// f * exp(e e_i) versus exp(e e_i) * f.
MomentumVector fd_momentum(const ReducedLagrangian& ell, const GroupElement& f,
                           double step, bool left) {
  const GroupOps& ops = ell.group();
  MomentumVector nu;
  for (int i = 0; i < 3; ++i) {
    AlgebraVector dir = AlgebraVector::Zero();
    dir[i] = step;
    const GroupElement plus = left ? ops.compose(f, ops.exp(dir)) : ops.compose(ops.exp(dir), f);
    dir[i] = -step;
    const GroupElement minus = left ? ops.compose(f, ops.exp(dir)) : ops.compose(ops.exp(dir), f);
    nu[i] = (ell.eval(plus) - ell.eval(minus)) / (2.0 * step);
  }
  return nu;
}

// Central difference of a momentum map in the right chart of f.
Eigen::Matrix3d fd_jacobian(const ReducedLagrangian& ell, const GroupElement& f, bool left,
                            double step) {
  const GroupOps& ops = ell.group();
  Eigen::Matrix3d j;
  for (int i = 0; i < 3; ++i) {
    AlgebraVector dir = AlgebraVector::Zero();
    dir[i] = step;
    const GroupElement fp = ops.compose(f, ops.exp(dir));
    dir[i] = -step;
    const GroupElement fm = ops.compose(f, ops.exp(dir));
    const MomentumVector mp = left ? ell.left_momentum(fp) : ell.right_momentum(fp);
    const MomentumVector mm = left ? ell.left_momentum(fm) : ell.right_momentum(fm);
    j.col(i) = (mp - mm) / (2.0 * step);
  }
  return j;
}

} // namespace

MomentumVector ReducedLagrangian::left_momentum(const GroupElement& f) const {
  return fd_momentum(*this, f, kFdStep, true);
}

MomentumVector ReducedLagrangian::right_momentum(const GroupElement& f) const {
  return fd_momentum(*this, f, kFdStep, false);
}

Eigen::Matrix3d ReducedLagrangian::left_momentum_jacobian(const GroupElement& f) const {
  return fd_jacobian(*this, f, true, kFdStep);
}

Eigen::Matrix3d ReducedLagrangian::right_momentum_jacobian(const GroupElement& f) const {
  return fd_jacobian(*this, f, false, kFdStep);
}

MomentumVector left_pullback_dl(const ReducedLagrangian& ell, const GroupElement& f) {
  return ell.left_momentum(f);
}

MomentumVector right_pullback_dl(const ReducedLagrangian& ell, const GroupElement& f) {
  return ell.right_momentum(f);
}

MomentumVector fd_left_pullback_dl(const ReducedLagrangian& ell, const GroupElement& f,
                                   double step) {
  return fd_momentum(ell, f, step, true);
}

MomentumVector fd_right_pullback_dl(const ReducedLagrangian& ell, const GroupElement& f,
                                    double step) {
  return fd_momentum(ell, f, step, false);
}

Eigen::Matrix3d fd_left_momentum_jacobian(const ReducedLagrangian& ell, const GroupElement& f,
                                          double step) {
  return fd_jacobian(ell, f, true, step);
}

Eigen::Matrix3d fd_right_momentum_jacobian(const ReducedLagrangian& ell, const GroupElement& f,
                                           double step) {
  return fd_jacobian(ell, f, false, step);
}

} // namespace depint
