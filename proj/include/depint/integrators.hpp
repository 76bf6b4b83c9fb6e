#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "depint/lie_interface.hpp"
#include "depint/types.hpp"

namespace depint {

enum class GuessStrategy { previous_f, identity };

struct StepperConfig {
  double newton_tol = 1e-12;
  int max_iters = 50;
  /// Use finite-difference Jacobians even when the Lagrangian has closed forms.
  bool fd_jacobian = false;
  GuessStrategy guess_strategy = GuessStrategy::previous_f;

  /// Throws std::invalid_argument unless newton_tol > 0 and max_iters >= 1.
  void validate() const;
};

enum class SolveFailure { no_convergence, singular_jacobian };

/// Raised by the generating-step solver. Carries the best residual reached;
/// step_index is filled in when the failure occurs inside run_dep.
class SolveError : public std::runtime_error {
public:
  SolveError(SolveFailure kind, double best_residual, int iters, const std::string& message)
      : std::runtime_error(message), kind(kind), best_residual(best_residual), iters(iters) {}

  SolveFailure kind;
  double best_residual;
  int iters;
  long step_index = -1;
};

struct GeneratingStepResult {
  GroupElement f;
  MomentumVector pi_next;
  int iters = 0;
  double residual = 0.0;
};

/// One step of the generating system for a left-invariant system: solves
///   left_pullback_dl(ell, f) = pi_k
/// for f by Newton iteration in the chart f <- f exp(hat(x)), then evaluates
///   pi_next = right_pullback_dl(ell, f),
/// which coincides with coAd(f^-1, pi_k).
GeneratingStepResult solve_generating_step(const ReducedLagrangian& ell,
                                           const MomentumVector& pi_k,
                                           const StepperConfig& cfg,
                                           const GroupElement& guess);

/// Mirror for right-invariant systems: solves right_pullback_dl(ell, f) = mu_k,
/// returns mu_next = left_pullback_dl(ell, f) = coAd(f, mu_k).
GeneratingStepResult solve_generating_step_right(const ReducedLagrangian& ell,
                                                 const MomentumVector& mu_k,
                                                 const StepperConfig& cfg,
                                                 const GroupElement& guess);

/// Left-invariant discrete Euler-Poincare residual
///   L*-pullback at f_next minus R*-pullback at f_prev;
/// zero iff (f_prev, f_next) is a solution pair.
MomentumVector dep_residual_left(const ReducedLagrangian& ell, const GroupElement& f_prev,
                                 const GroupElement& f_next);

/// Right-invariant mirror: R*-pullback at f_next minus L*-pullback at f_prev.
MomentumVector dep_residual_right(const ReducedLagrangian& ell, const GroupElement& f_prev,
                                  const GroupElement& f_next);

/// Discrete Lie-Poisson update for left-invariant systems: coAd(f^-1, pi_k).
MomentumVector dlp_step_left(const MomentumVector& pi_k, const GroupElement& f,
                             const GroupOps& ops = so3_ops());

/// Right-invariant counterpart: coAd(f, mu_k).
MomentumVector dlp_step_right(const MomentumVector& mu_k, const GroupElement& f,
                              const GroupOps& ops = so3_ops());

/// Trajectory produced by run_dep. f_seq[k] is the body transition taking step
/// k to step k+1, pi_seq[k] the body momentum at step k, so
/// pi_seq.size() == f_seq.size() + 1. g_seq is empty until reconstructed, then
/// matches pi_seq in length. h is bookkeeping only (timestamps, energy readout).
struct TrajectoryRecord {
  double h = 1.0;
  std::vector<GroupElement> f_seq;
  std::vector<MomentumVector> pi_seq;
  std::vector<GroupElement> g_seq;

  std::vector<int> newton_iters;
  double max_dlp_residual = 0.0;
  double max_step_angle = 0.0;
  std::vector<std::string> warnings;

  long steps() const { return static_cast<long>(f_seq.size()); }
};

/// Tolerance for the per-step identity |right pullback - coAd transport|.
inline constexpr double kDlpConsistencyTol = 1e-10;

/// Iterates the generating step from pi0. The stored momentum sequence uses
/// the coadjoint transport pi_{k+1} = coAd(f^-1, pi_k) (an isometry, so the
/// dual Casimir is preserved to roundoff); agreement with the right pullback
/// is asserted to kDlpConsistencyTol at every step. Solver failures are
/// rethrown with the step index attached.
TrajectoryRecord run_dep(const ReducedLagrangian& ell, const MomentumVector& pi0, long n_steps,
                         const StepperConfig& cfg, double h = 1.0);

/// Attitude reconstruction for a left-invariant run: g_{k+1} = g_k f_k^-1.
/// The spatial momentum coAd(g_k^-1, pi_k) is then a constant of motion.
std::vector<GroupElement> reconstruct_left(const GroupElement& g0,
                                           const std::vector<GroupElement>& f_seq,
                                           const GroupOps& ops = so3_ops());

/// Right-invariant mirror: g_{k+1} = f_k^-1 g_k; conserves coAd(g_k, mu_k).
std::vector<GroupElement> reconstruct_right(const GroupElement& g0,
                                            const std::vector<GroupElement>& f_seq,
                                            const GroupOps& ops = so3_ops());

} // namespace depint
