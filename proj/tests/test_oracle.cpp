#include <doctest.h>

#include <cmath>

#include "depint/oracle.hpp"
#include "depint/so3.hpp"
#include "helpers.hpp"

using namespace depint;
using testutil::Rng;

namespace {
InertiaSpec canonical_inertia() { return InertiaSpec::from_lambda({1.0, 2.0, 3.0}); }
} // namespace

TEST_CASE("principal-axis momenta are equilibria of the Euler equations") {
  const InertiaSpec inertia = canonical_inertia();
  CHECK(euler_rhs(inertia, MomentumVector(0.7, 0, 0)).norm() == 0.0);
  CHECK(euler_rhs(inertia, MomentumVector(0, -1.2, 0)).norm() == 0.0);
  CHECK(euler_rhs(inertia, MomentumVector(0, 0, 0.4)).norm() == 0.0);
}

TEST_CASE("euler_rhs hand-checked value") {
  // J = (5, 4, 3), Pi = (1, 1, 0): Omega = (0.2, 0.25, 0), Pi x Omega = (0, 0, 0.05)
  const InertiaSpec inertia = canonical_inertia();
  const MomentumVector rhs = euler_rhs(inertia, MomentumVector(1, 1, 0));
  CHECK((rhs - MomentumVector(0, 0, 0.05)).norm() <= 1e-16);
}

TEST_CASE("euler_rhs is orthogonal to the momentum") {
  const InertiaSpec inertia = canonical_inertia();
  Rng rng(71);
  for (int i = 0; i < 200; ++i) {
    const MomentumVector pi = rng.vector();
    CHECK(std::abs(pi.dot(euler_rhs(inertia, pi))) <= 1e-15 * pi.squaredNorm());
  }
}

TEST_CASE("rk4 keeps a principal-axis state fixed") {
  const InertiaSpec inertia = canonical_inertia();
  const MomentumVector pi0(0, 0, 0.8);
  const ContinuousState s = rk4_run(inertia, pi0, GroupElement::Identity(), 1.0, 1000);
  CHECK((s.pi - pi0).norm() <= 1e-12);
  CHECK(s.t == 1.0);
}

TEST_CASE("rk4 self-convergence is fourth order") {
  const InertiaSpec inertia = canonical_inertia();
  // fast enough tumbling that the truncation error sits well above roundoff
  const MomentumVector pi0 = inertia_apply(inertia, AlgebraVector(1.0, 0.6, 0.3));
  const GroupElement g0 = GroupElement::Identity();
  const MomentumVector ref = rk4_run(inertia, pi0, g0, 1.0, 32000).pi;
  const double e_coarse = (rk4_run(inertia, pi0, g0, 1.0, 100).pi - ref).norm();
  const double e_fine = (rk4_run(inertia, pi0, g0, 1.0, 200).pi - ref).norm();
  const double ratio = e_coarse / e_fine;
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("rk4 conserves momentum norm and energy over a long run") {
  const InertiaSpec inertia = canonical_inertia();
  const MomentumVector pi0(1.0, 0.5, 0.25);
  const ContinuousState s = rk4_run(inertia, pi0, GroupElement::Identity(), 1.0, 10000);

  CHECK(std::abs(s.pi.squaredNorm() - pi0.squaredNorm()) / pi0.squaredNorm() <= 1e-10);
  const auto kinetic = [&inertia](const MomentumVector& pi) {
    return 0.5 * pi.cwiseQuotient(inertia.classical()).dot(pi);
  };
  CHECK(std::abs(kinetic(s.pi) - kinetic(pi0)) / kinetic(pi0) <= 1e-10);
}

TEST_CASE("rk4 attitude stays orthogonal") {
  const InertiaSpec inertia = canonical_inertia();
  const ContinuousState s =
      rk4_run(inertia, MomentumVector(1.0, 0.5, 0.25), GroupElement::Identity(), 1.0, 10000);
  CHECK(so3::is_rotation(s.g, 1e-10));
}

TEST_CASE("rk4 rejects a nonpositive step count") {
  CHECK_THROWS_AS(
      rk4_run(canonical_inertia(), MomentumVector::Zero(), GroupElement::Identity(), 1.0, 0),
      std::invalid_argument);
}
