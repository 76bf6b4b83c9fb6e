#pragma once

#include "depint/rigid_body.hpp"
#include "depint/types.hpp"

namespace depint {

/// Continuous-time state of the free rigid body (body momentum normalization).
struct ContinuousState {
  MomentumVector pi;
  GroupElement g;
  double t = 0.0;
};

/// Euler equations on so(3)*: dPi/dt = Pi x Omega with Omega_i = Pi_i / J_i.
MomentumVector euler_rhs(const InertiaSpec& inertia, const MomentumVector& pi);

/// Fixed-step RK4 on (Pi, g) with dg/dt = g hat(Omega), n steps over [0, T].
/// The attitude factor is re-orthonormalized periodically. Reference solver
/// for convergence measurements; not a production ODE integrator.
ContinuousState rk4_run(const InertiaSpec& inertia, const MomentumVector& pi0,
                        const GroupElement& g0, double t_final, long n_steps);

} // namespace depint
