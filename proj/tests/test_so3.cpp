#include <doctest.h>

#include <cmath>

#include "depint/so3.hpp"
#include "helpers.hpp"

using namespace depint;
using testutil::Rng;

namespace {
const AlgebraVector e1(1, 0, 0);
const AlgebraVector e3(0, 0, 1);
} // namespace

TEST_CASE("hat of zero is the zero matrix") {
  CHECK(so3::hat(AlgebraVector::Zero()).isZero(0.0));
}

TEST_CASE("hat follows the cross-product convention") {
  Eigen::Matrix3d expected;
  expected << 0, -1, 0,
              1, 0, 0,
              0, 0, 0;
  CHECK((so3::hat(e3) - expected).cwiseAbs().maxCoeff() == 0.0);

  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const AlgebraVector v = rng.vector();
    const AlgebraVector w = rng.vector();
    CHECK((so3::hat(v) * w - v.cross(w)).norm() <= 1e-15);
  }
}

TEST_CASE("vee inverts hat exactly") {
  const AlgebraVector v(1, 2, 3);
  CHECK(so3::vee(so3::hat(v)) == v);
}

TEST_CASE("vee rejects non-skew input") {
  Eigen::Matrix3d a = so3::hat(AlgebraVector(0.1, 0.2, 0.3));
  a(0, 0) = 1e-6;
  CHECK_THROWS_AS(so3::vee(a), std::invalid_argument);
}

TEST_CASE("exp of zero is the identity") {
  CHECK(so3::exp_so3(AlgebraVector::Zero()) == GroupElement::Identity());
}

TEST_CASE("exp of a quarter turn about z") {
  GroupElement expected;
  expected << 0, -1, 0,
              1, 0, 0,
              0, 0, 1;
  CHECK((so3::exp_so3(M_PI / 2 * e3) - expected).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("exp near zero matches I + hat(v) to 1e-17") {
  const AlgebraVector v = 1e-9 * AlgebraVector(0.3, -0.8, 0.52).normalized();
  const GroupElement r = so3::exp_so3(v);
  CHECK((r - (Eigen::Matrix3d::Identity() + so3::hat(v))).cwiseAbs().maxCoeff() <= 1e-17);
}

TEST_CASE("exp Taylor branch agrees with the trig formula at the crossover") {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Vector3d axis = rng.unit_axis();
    const double theta = 0.99e-4;  // just inside the Taylor branch
    const GroupElement expected = testutil::rotation_about(axis, theta);
    CHECK((so3::exp_so3(theta * axis) - expected).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("log of the identity is zero") {
  CHECK(so3::log_so3(GroupElement::Identity()) == AlgebraVector::Zero());
}

TEST_CASE("log(exp) round trip on a single axis") {
  CHECK((so3::log_so3(so3::exp_so3(0.3 * e1)) - 0.3 * e1).norm() <= 1e-12);
}

TEST_CASE("small-angle log matches the antisymmetric-part formula") {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const GroupElement r = testutil::rotation_about(rng.unit_axis(), 1e-5);
    // series oracle: for small angles log ~ vee((R - R^T)/2)
    const AlgebraVector expected =
        0.5 * AlgebraVector(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
    CHECK((so3::log_so3(r) - expected).norm() <= 1e-14);
  }
}

TEST_CASE("log signals AngleNearPi close to a half turn") {
  const GroupElement r = testutil::rotation_about(Eigen::Vector3d(1, 0, 0), M_PI - 1e-7);
  CHECK_THROWS_AS(so3::log_so3(r), so3::AngleNearPiError);
  // still fine at pi - 0.01
  const GroupElement ok = testutil::rotation_about(Eigen::Vector3d(0, 1, 0), M_PI - 0.01);
  CHECK((so3::exp_so3(so3::log_so3(ok)) - ok).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("Ad at the identity is the identity") {
  Rng rng(14);
  for (int i = 0; i < 20; ++i) {
    const AlgebraVector xi = rng.vector();
    CHECK(so3::Ad(GroupElement::Identity(), xi) == xi);
  }
}

TEST_CASE("Ad of a z rotation on e1") {
  const double theta = 0.77;
  const GroupElement g = so3::exp_so3(theta * e3);
  // oracle: conjugation of hat(e1) evaluated directly
  const Eigen::Matrix3d conj = g * so3::hat(e1) * g.transpose();
  const AlgebraVector expected(conj(2, 1), conj(0, 2), conj(1, 0));
  CHECK((so3::Ad(g, e1) - AlgebraVector(std::cos(theta), std::sin(theta), 0)).norm() <= 1e-15);
  CHECK((so3::Ad(g, e1) - expected).norm() <= 1e-15);
}

TEST_CASE("coAd preserves the Euclidean norm") {
  Rng rng(15);
  for (int i = 0; i < 500; ++i) {
    const GroupElement g = rng.rotation();
    const MomentumVector mu = rng.vector();
    CHECK(std::abs(so3::coAd(g, mu).norm() - mu.norm()) <= 1e-13);
  }
}

TEST_CASE("exp output is orthogonal with unit determinant up to |v| = 10") {
  Rng rng(16);
  for (int i = 0; i < 500; ++i) {
    const GroupElement r = so3::exp_so3(rng.uniform(0.0, 10.0) * rng.unit_axis());
    CHECK(so3::is_rotation(r, 1e-13));
  }
}

TEST_CASE("log(exp) = id on [0, pi - 0.01]") {
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    const AlgebraVector v = rng.uniform(0.0, M_PI - 0.01) * rng.unit_axis();
    CHECK((so3::log_so3(so3::exp_so3(v)) - v).norm() <= 1e-10);
  }
}

TEST_CASE("exp(log) = id on sampled rotations") {
  Rng rng(18);
  for (int i = 0; i < 500; ++i) {
    const GroupElement r = rng.rotation(M_PI - 0.01);
    CHECK((so3::exp_so3(so3::log_so3(r)) - r).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("Ad is a homomorphism") {
  Rng rng(19);
  for (int i = 0; i < 500; ++i) {
    const GroupElement g1 = rng.rotation();
    const GroupElement g2 = rng.rotation();
    const AlgebraVector xi = rng.vector();
    CHECK((so3::Ad(g1 * g2, xi) - so3::Ad(g1, so3::Ad(g2, xi))).norm() <= 1e-12);
  }
}

TEST_CASE("project_to_group restores orthogonality") {
  Rng rng(20);
  GroupElement r = rng.rotation();
  r(0, 1) += 3e-9;
  r(2, 2) -= 2e-9;
  const GroupElement p = so3::project_to_group(r);
  CHECK(so3::is_rotation(p, 1e-14));
  CHECK((p - r).cwiseAbs().maxCoeff() <= 1e-8);
}
