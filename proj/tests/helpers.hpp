#pragma once

// Test-side utilities. The finite-difference and matrix oracles here are kept
// independent of the library's own differentiation helpers on purpose: they
// only ever call eval()-level entry points of whatever they are checking.

#include <cmath>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "depint/types.hpp"

namespace testutil {

using depint::AlgebraVector;
using depint::GroupElement;
using depint::MomentumVector;

inline Eigen::Matrix3d skew(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
      -v.y(), v.x(), 0.0;
  return m;
}

/// Rodrigues formula written out locally (oracle-grade rotation builder).
inline GroupElement rotation_about(const Eigen::Vector3d& unit_axis, double angle) {
  const Eigen::Matrix3d k = skew(unit_axis);
  return Eigen::Matrix3d::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * (k * k);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  Eigen::Vector3d unit_axis() {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::Vector3d v;
    do {
      v = Eigen::Vector3d(normal(gen_), normal(gen_), normal(gen_));
    } while (v.norm() < 1e-8);
    return v.normalized();
  }

  Eigen::Vector3d vector(double scale = 1.0) {
    std::normal_distribution<double> normal(0.0, scale);
    return Eigen::Vector3d(normal(gen_), normal(gen_), normal(gen_));
  }

  GroupElement rotation(double max_angle = M_PI - 0.02) {
    return rotation_about(unit_axis(), uniform(0.0, max_angle));
  }

private:
  std::mt19937_64 gen_;
};

/// Central difference of a scalar on the group along the three exponential
/// chart directions: left_chart selects f * exp(e e_i) vs exp(e e_i) * f.
inline Eigen::Vector3d chart_gradient(const std::function<double(const GroupElement&)>& func,
                                      const GroupElement& at, bool left_chart,
                                      double step = 1e-5) {
  Eigen::Vector3d grad;
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d axis = Eigen::Vector3d::Zero();
    axis[i] = 1.0;
    const GroupElement plus_rot = rotation_about(axis, step);
    const GroupElement minus_rot = rotation_about(axis, -step);
    const GroupElement fp = left_chart ? GroupElement(at * plus_rot) : GroupElement(plus_rot * at);
    const GroupElement fm =
        left_chart ? GroupElement(at * minus_rot) : GroupElement(minus_rot * at);
    grad[i] = (func(fp) - func(fm)) / (2.0 * step);
  }
  return grad;
}

} // namespace testutil
