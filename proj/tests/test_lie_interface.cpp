#include <doctest.h>

#include <cmath>

#include "depint/lie_interface.hpp"
#include "depint/rigid_body.hpp"
#include "depint/so3.hpp"
#include "helpers.hpp"

using namespace depint;
using testutil::Rng;

namespace {

const AlgebraVector e1(1, 0, 0);
const AlgebraVector e2(0, 1, 0);
const AlgebraVector e3(0, 0, 1);

InertiaSpec canonical_inertia() { return InertiaSpec::from_lambda({1.0, 2.0, 3.0}); }

// Same value as ell(f) = Tr(f Lambda), but exposing only eval(): exercises the
// finite-difference defaults of the base class.
class EvalOnlyLagrangian final : public ReducedLagrangian {
public:
  explicit EvalOnlyLagrangian(const InertiaSpec& inertia) : inertia_(inertia) {}
  double eval(const GroupElement& f) const override {
    return (f * inertia_.lambda_matrix()).trace();
  }

private:
  InertiaSpec inertia_;
};

} // namespace

TEST_CASE("pairing follows the dual basis convention") {
  CHECK(pairing(e1, e1) == 1.0);
  CHECK(pairing(e1, e2) == 0.0);
}

TEST_CASE("pairing equals the half-trace of the matrix forms") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const MomentumVector mu = rng.vector();
    const AlgebraVector xi = rng.vector();
    const double trace_form =
        0.5 * (testutil::skew(mu).transpose() * testutil::skew(xi)).trace();
    CHECK(pairing(mu, xi) == doctest::Approx(trace_form).epsilon(1e-14));
  }
}

TEST_CASE("coadjoint action satisfies the pairing identity") {
  const GroupOps& ops = so3_ops();
  Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    const GroupElement g = rng.rotation();
    const MomentumVector mu = rng.vector();
    const AlgebraVector xi = rng.vector();
    CHECK(std::abs(ops.pair(ops.coAd(g, mu), xi) - ops.pair(mu, ops.Ad(g, xi))) <= 1e-12);
  }
}

TEST_CASE("coAd at the identity is exact") {
  const GroupOps& ops = so3_ops();
  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const MomentumVector mu = rng.vector();
    CHECK(ops.coAd(ops.identity(), mu) == mu);
  }
}

TEST_CASE("left pullback of the rigid-body Lagrangian at the identity vanishes") {
  const MoserVeselovLagrangian ell(canonical_inertia());
  CHECK(left_pullback_dl(ell, GroupElement::Identity()).norm() == 0.0);
  CHECK(right_pullback_dl(ell, GroupElement::Identity()).norm() == 0.0);
}

TEST_CASE("left pullback at a z rotation is axis-aligned with magnitude (l1+l2) sin(theta)") {
  const InertiaSpec inertia = canonical_inertia();
  const MoserVeselovLagrangian ell(inertia);
  const double theta = 0.4;
  const GroupElement f = so3::exp_so3(theta * e3);

  // oracle: direct 3x3 evaluation of the momentum matrix
  const Eigen::Matrix3d lam = inertia.lambda_matrix();
  const Eigen::Matrix3d m = f.transpose() * lam - lam * f;
  const MomentumVector expected(m(2, 1), m(0, 2), m(1, 0));

  const MomentumVector nu = left_pullback_dl(ell, f);
  CHECK((nu - expected).norm() <= 1e-15);
  CHECK(nu[0] == 0.0);
  CHECK(nu[1] == 0.0);
  // orientation fixed by the vee convention: the magnitude is pinned
  CHECK(std::abs(nu[2]) == doctest::Approx(3.0 * std::sin(theta)).epsilon(1e-14));
  CHECK(nu[2] == doctest::Approx(-3.0 * std::sin(theta)).epsilon(1e-14));
}

TEST_CASE("pullbacks agree with central finite differences of eval") {
  const MoserVeselovLagrangian ell(canonical_inertia());
  const auto eval = [&ell](const GroupElement& f) { return ell.eval(f); };
  Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    const GroupElement f = rng.rotation();
    const double scale = std::max(1.0, left_pullback_dl(ell, f).norm());
    CHECK((left_pullback_dl(ell, f) - testutil::chart_gradient(eval, f, true)).norm() / scale <=
          1e-8);
    CHECK((right_pullback_dl(ell, f) - testutil::chart_gradient(eval, f, false)).norm() / scale <=
          1e-8);
  }
}

TEST_CASE("right pullback is the coadjoint transport of the left pullback") {
  const MoserVeselovLagrangian ell(canonical_inertia());
  const GroupOps& ops = so3_ops();
  Rng rng(35);
  for (int i = 0; i < 200; ++i) {
    const GroupElement f = rng.rotation();
    const MomentumVector via_pairing = ops.coAd(ops.inverse(f), left_pullback_dl(ell, f));
    CHECK((right_pullback_dl(ell, f) - via_pairing).norm() <= 1e-12);
  }
}

TEST_CASE("finite-difference defaults of the base class match the closed forms") {
  const InertiaSpec inertia = canonical_inertia();
  const EvalOnlyLagrangian fd_ell(inertia);
  const MoserVeselovLagrangian closed(inertia);
  Rng rng(36);
  for (int i = 0; i < 50; ++i) {
    const GroupElement f = rng.rotation();
    CHECK((fd_ell.left_momentum(f) - closed.left_momentum(f)).norm() <= 1e-8);
    CHECK((fd_ell.right_momentum(f) - closed.right_momentum(f)).norm() <= 1e-8);
    CHECK((fd_ell.left_momentum_jacobian(f) - closed.left_momentum_jacobian(f))
              .cwiseAbs()
              .maxCoeff() <= 1e-5);
  }
  CHECK_FALSE(fd_ell.has_analytic_jacobian());
  CHECK(closed.has_analytic_jacobian());
}

TEST_CASE("fd_ helpers bypass the closed forms and still agree") {
  const MoserVeselovLagrangian ell(canonical_inertia());
  Rng rng(37);
  for (int i = 0; i < 50; ++i) {
    const GroupElement f = rng.rotation();
    CHECK((fd_left_pullback_dl(ell, f) - ell.left_momentum(f)).norm() <= 1e-8);
    CHECK((fd_right_pullback_dl(ell, f) - ell.right_momentum(f)).norm() <= 1e-8);
    CHECK((fd_left_momentum_jacobian(ell, f) - ell.left_momentum_jacobian(f))
              .cwiseAbs()
              .maxCoeff() <= 1e-5);
    CHECK((fd_right_momentum_jacobian(ell, f) - ell.right_momentum_jacobian(f))
              .cwiseAbs()
              .maxCoeff() <= 1e-5);
  }
}

TEST_CASE("group backend round trips and composition") {
  const GroupOps& ops = so3_ops();
  Rng rng(38);
  for (int i = 0; i < 100; ++i) {
    const GroupElement g = rng.rotation();
    CHECK((ops.compose(g, ops.inverse(g)) - ops.identity()).cwiseAbs().maxCoeff() <= 4e-15);
    const AlgebraVector v = rng.uniform(0.0, 2.0) * rng.unit_axis();
    CHECK((ops.log(ops.exp(v)) - v).norm() <= 1e-12);
  }
}
