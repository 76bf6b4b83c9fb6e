#include "depint/oracle.hpp"

#include <stdexcept>

#include <Eigen/Geometry>

#include "depint/so3.hpp"

namespace depint {

MomentumVector euler_rhs(const InertiaSpec& inertia, const MomentumVector& pi) {
  const AlgebraVector omega = pi.cwiseQuotient(inertia.classical());
  return pi.cross(omega);
}

namespace {

struct Derivative {
  MomentumVector dpi;
  Eigen::Matrix3d dg;
};

Derivative rhs(const InertiaSpec& inertia, const MomentumVector& pi, const GroupElement& g) {
  const AlgebraVector omega = pi.cwiseQuotient(inertia.classical());
  return {pi.cross(omega), g * so3::hat(omega)};
}

} // namespace

ContinuousState rk4_run(const InertiaSpec& inertia, const MomentumVector& pi0,
                        const GroupElement& g0, double t_final, long n_steps) {
  if (n_steps < 1) {
    throw std::invalid_argument("rk4_run: n_steps must be >= 1");
  }
  const double dt = t_final / static_cast<double>(n_steps);

  MomentumVector pi = pi0;
  GroupElement g = g0;
  for (long k = 0; k < n_steps; ++k) {
    const Derivative k1 = rhs(inertia, pi, g);
    const Derivative k2 = rhs(inertia, pi + 0.5 * dt * k1.dpi, g + 0.5 * dt * k1.dg);
    const Derivative k3 = rhs(inertia, pi + 0.5 * dt * k2.dpi, g + 0.5 * dt * k2.dg);
    const Derivative k4 = rhs(inertia, pi + dt * k3.dpi, g + dt * k3.dg);
    pi += dt / 6.0 * (k1.dpi + 2.0 * k2.dpi + 2.0 * k3.dpi + k4.dpi);
    g += dt / 6.0 * (k1.dg + 2.0 * k2.dg + 2.0 * k3.dg + k4.dg);
    if ((k + 1) % 128 == 0) {
      g = so3::project_to_group(g);
    }
  }
  return {pi, g, t_final};
}

} // namespace depint
