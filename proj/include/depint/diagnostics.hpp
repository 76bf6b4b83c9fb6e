#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "depint/integrators.hpp"
#include "depint/oracle.hpp"
#include "depint/rigid_body.hpp"

namespace depint {

/// Drift of a scalar series against its step-0 value.
struct DriftReport {
  std::string quantity;
  double initial = 0.0;
  /// (v_k - v_0) / |v_0|, with divisor 1 when v_0 == 0.
  std::vector<double> deviations;
  double max_abs_deviation = 0.0;
  double max_rel_deviation = 0.0;
  /// Least-squares slope of the relative deviations per step.
  double slope = 0.0;
};

DriftReport make_drift_report(std::string quantity, const std::vector<double>& series);

/// Drift reports for a trajectory: group Casimir Tr(f L f L) over f_seq, dual
/// Casimir |Pi|^2 over pi_seq, energy reconstructed at xi_k = vee(log f_k)/h,
/// and (when attitudes are present) the three spatial momentum components
/// coAd(g_k^-1, Pi_k).
std::vector<DriftReport> conservation_report(const TrajectoryRecord& traj,
                                             const InertiaSpec& inertia);

/// Commutativity defect of the reduction/Legendre diagram. For each pair
/// (g_k, g_k1), compares the momentum obtained by differentiating
/// L(g_k, g_k1) = ell(g_k g_k1^-1) in its first slot (central differences
/// along exp-chart directions, pulled back by right translation) against the
/// closed-form pullback at f = g_k g_k1^-1. Returns the largest norm
/// discrepancy. Pairs should be near-diagonal: |log(g_k g_k1^-1)| < 1.
double diagram_commutes_check(const ReducedLagrangian& ell,
                              const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
                              double fd_step = 1e-5);

struct ConvergenceRow {
  double h = 0.0;
  double error = 0.0;
  /// Observed order vs the previous (coarser) row; NaN on the first row.
  double observed_order = 0.0;
};

struct ConvergenceResult {
  std::vector<ConvergenceRow> rows;
  /// Largest relative change of any error when the oracle step count is halved.
  double oracle_rel_change = 0.0;
  long oracle_steps = 0;
};

/// Runs the discrete scheme at each h with pi0 = h * pi0_continuous and
/// compares pi_N / h at time t_final against the RK4 reference. h_list must be
/// strictly decreasing and divide t_final. Trajectories run concurrently;
/// results are merged in h order.
ConvergenceResult convergence_study(const InertiaSpec& inertia,
                                    const MomentumVector& pi0_continuous, double t_final,
                                    const std::vector<double>& h_list,
                                    const StepperConfig& cfg = {});

struct PropertyResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double bound = 0.0;
};

/// Randomized verification suite: pairing/adjoint identities, exp/log round
/// trips, closed-form differentials against finite differences, transport
/// consistency, and the diagram check. Deterministic for a given seed.
std::vector<PropertyResult> verify_properties(const InertiaSpec& inertia, std::uint64_t seed);

} // namespace depint
