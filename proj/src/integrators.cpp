#include "depint/integrators.hpp"

#include <cmath>
#include <limits>

#include <Eigen/SVD>

namespace depint {

void StepperConfig::validate() const {
  if (!(newton_tol > 0.0)) {
    throw std::invalid_argument("StepperConfig: newton_tol must be > 0");
  }
  if (max_iters < 1) {
    throw std::invalid_argument("StepperConfig: max_iters must be >= 1");
  }
}

namespace {

constexpr double kMaxCondition = 1e12;

// Newton iteration in the right chart f <- f exp(hat(x)). `left` selects which
// pullback is matched to the target momentum. Iterates past newton_tol while
// the residual keeps dropping, so converged steps end near the roundoff floor.
GeneratingStepResult newton_step(const ReducedLagrangian& ell, const MomentumVector& target,
                                 const StepperConfig& cfg, const GroupElement& guess, bool left) {
  cfg.validate();
  const GroupOps& ops = ell.group();

  GroupElement f = ops.project(guess);
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                       (1.0 + std::abs(ell.eval(f)) + target.norm());

  double best_norm = std::numeric_limits<double>::infinity();
  double prev_norm = std::numeric_limits<double>::infinity();

  for (int it = 0; it <= cfg.max_iters; ++it) {
    const MomentumVector r = (left ? ell.left_momentum(f) : ell.right_momentum(f)) - target;
    const double nr = r.norm();
    best_norm = std::min(best_norm, nr);
    const bool stalled = nr <= floor || nr > 0.45 * prev_norm || it == cfg.max_iters;
    if (nr <= cfg.newton_tol && stalled) {
      const MomentumVector next = left ? ell.right_momentum(f) : ell.left_momentum(f);
      return {f, next, it, nr};
    }
    if (it == cfg.max_iters) break;
    prev_norm = nr;

    Eigen::Matrix3d jac;
    if (cfg.fd_jacobian) {
      jac = left ? fd_left_momentum_jacobian(ell, f) : fd_right_momentum_jacobian(ell, f);
    } else {
      jac = left ? ell.left_momentum_jacobian(f) : ell.right_momentum_jacobian(f);
    }

    Eigen::JacobiSVD<Eigen::Matrix3d> svd(jac, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double smin = svd.singularValues()(2);
    const double smax = svd.singularValues()(0);
    if (!(smin > 0.0) || smax / smin > kMaxCondition) {
      throw SolveError(SolveFailure::singular_jacobian, best_norm, it,
                       "generating step: Jacobian condition estimate exceeds 1e12 "
                       "(best residual " + std::to_string(best_norm) + ")");
    }
    const AlgebraVector delta = svd.solve((-r).eval());
    f = ops.compose(f, ops.exp(delta));
  }

  throw SolveError(SolveFailure::no_convergence, best_norm, cfg.max_iters,
                   "generating step: no convergence within " + std::to_string(cfg.max_iters) +
                   " iterations (best residual " + std::to_string(best_norm) + ")");
}

} // namespace

GeneratingStepResult solve_generating_step(const ReducedLagrangian& ell,
                                           const MomentumVector& pi_k, const StepperConfig& cfg,
                                           const GroupElement& guess) {
  return newton_step(ell, pi_k, cfg, guess, true);
}

GeneratingStepResult solve_generating_step_right(const ReducedLagrangian& ell,
                                                 const MomentumVector& mu_k,
                                                 const StepperConfig& cfg,
                                                 const GroupElement& guess) {
  return newton_step(ell, mu_k, cfg, guess, false);
}

MomentumVector dep_residual_left(const ReducedLagrangian& ell, const GroupElement& f_prev,
                                 const GroupElement& f_next) {
  return ell.left_momentum(f_next) - ell.right_momentum(f_prev);
}

MomentumVector dep_residual_right(const ReducedLagrangian& ell, const GroupElement& f_prev,
                                  const GroupElement& f_next) {
  return ell.right_momentum(f_next) - ell.left_momentum(f_prev);
}

MomentumVector dlp_step_left(const MomentumVector& pi_k, const GroupElement& f,
                             const GroupOps& ops) {
  return ops.coAd(ops.inverse(f), pi_k);
}

MomentumVector dlp_step_right(const MomentumVector& mu_k, const GroupElement& f,
                              const GroupOps& ops) {
  return ops.coAd(f, mu_k);
}

TrajectoryRecord run_dep(const ReducedLagrangian& ell, const MomentumVector& pi0, long n_steps,
                         const StepperConfig& cfg, double h) {
  cfg.validate();
  if (n_steps < 1) {
    throw std::invalid_argument("run_dep: n_steps must be >= 1");
  }
  const GroupOps& ops = ell.group();

  TrajectoryRecord traj;
  traj.h = h;
  traj.f_seq.reserve(n_steps);
  traj.pi_seq.reserve(n_steps + 1);
  traj.newton_iters.reserve(n_steps);
  traj.pi_seq.push_back(pi0);

  GroupElement guess = ops.identity();
  long large_rotation_count = 0;
  long first_large_rotation = -1;

  for (long k = 0; k < n_steps; ++k) {
    GeneratingStepResult step;
    try {
      step = solve_generating_step(ell, traj.pi_seq.back(), cfg, guess);
    } catch (SolveError& err) {
      err.step_index = k;
      throw;
    }

    // Store the isometric coadjoint transport; the generating system's right
    // pullback must agree with it to kDlpConsistencyTol.
    const MomentumVector transported = dlp_step_left(traj.pi_seq.back(), step.f, ops);
    const double dlp_residual = (step.pi_next - transported).norm();
    traj.max_dlp_residual = std::max(traj.max_dlp_residual, dlp_residual);
    if (dlp_residual > kDlpConsistencyTol) {
      throw std::logic_error("run_dep: generating-system momentum and coadjoint transport "
                             "disagree at step " + std::to_string(k) + " (|diff| = " +
                             std::to_string(dlp_residual) + ")");
    }

    double angle = 0.0;
    try {
      angle = ops.log(step.f).norm();
    } catch (const std::domain_error&) {
      angle = std::acos(-1.0);
    }
    traj.max_step_angle = std::max(traj.max_step_angle, angle);
    if (angle > 1.0) {
      ++large_rotation_count;
      if (first_large_rotation < 0) first_large_rotation = k;
    }

    traj.f_seq.push_back(step.f);
    traj.pi_seq.push_back(transported);
    traj.newton_iters.push_back(step.iters);
    guess = (cfg.guess_strategy == GuessStrategy::previous_f) ? step.f : ops.identity();
  }

  if (large_rotation_count > 0) {
    traj.warnings.push_back(
        "per-step rotation exceeded 1 rad at " + std::to_string(large_rotation_count) +
        " step(s), first at step " + std::to_string(first_large_rotation) +
        "; the solver's near-identity regularity assumption may fail");
  }
  return traj;
}

namespace {

std::vector<GroupElement> reconstruct(const GroupElement& g0,
                                      const std::vector<GroupElement>& f_seq,
                                      const GroupOps& ops, bool left) {
  std::vector<GroupElement> g_seq;
  g_seq.reserve(f_seq.size() + 1);
  g_seq.push_back(g0);
  long since_projection = 0;
  for (const GroupElement& f : f_seq) {
    const GroupElement f_inv = ops.inverse(f);
    GroupElement next = left ? ops.compose(g_seq.back(), f_inv) : ops.compose(f_inv, g_seq.back());
    if (++since_projection >= 512) {
      next = ops.project(next);
      since_projection = 0;
    }
    g_seq.push_back(next);
  }
  return g_seq;
}

} // namespace

std::vector<GroupElement> reconstruct_left(const GroupElement& g0,
                                           const std::vector<GroupElement>& f_seq,
                                           const GroupOps& ops) {
  return reconstruct(g0, f_seq, ops, true);
}

std::vector<GroupElement> reconstruct_right(const GroupElement& g0,
                                            const std::vector<GroupElement>& f_seq,
                                            const GroupOps& ops) {
  return reconstruct(g0, f_seq, ops, false);
}

} // namespace depint
