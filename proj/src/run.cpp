#include "depint/run.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>

#include "depint/csv_io.hpp"
#include "depint/diagnostics.hpp"
#include "depint/so3.hpp"

namespace depint {

namespace {

void print_inertia(std::ostream& out, const InertiaSpec& inertia) {
  const auto& l = inertia.lambda();
  const auto& c = inertia.classical();
  out << "lambda = [" << format_double(l[0]) << ", " << format_double(l[1]) << ", "
      << format_double(l[2]) << "]\n";
  out << "classical = [" << format_double(c[0]) << ", " << format_double(c[1]) << ", "
      << format_double(c[2]) << "]\n";
}

void print_drift(std::ostream& out, const DriftReport& report) {
  out << report.quantity << ": initial = " << format_double(report.initial)
      << ", max_rel_dev = " << format_double(report.max_rel_deviation)
      << ", max_abs_dev = " << format_double(report.max_abs_deviation)
      << ", slope_per_step = " << format_double(report.slope) << "\n";
}

int run_trajectory(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const InertiaSpec inertia = cfg.inertia();
  const MoserVeselovLagrangian ell(inertia);
  const MomentumVector pi0 = cfg.initial_pi();

  TrajectoryRecord traj;
  try {
    traj = run_dep(ell, pi0, cfg.steps, cfg.stepper(), cfg.h);
  } catch (const SolveError& e) {
    err << "solver failure at step " << e.step_index << ": " << e.what() << "\n";
    return 2;
  }

  if (cfg.mode == RunMode::reconstruct) {
    traj.g_seq = reconstruct_left(GroupElement::Identity(), traj.f_seq);
  }

  for (const std::string& w : traj.warnings) {
    err << "warning: " << w << "\n";
  }

  const std::string path = cfg.out.empty() ? cfg.default_out() : cfg.out;
  try {
    write_trajectory_csv(path, traj, inertia);
  } catch (const std::runtime_error& e) {
    err << "output failure: " << e.what() << "\n";
    return 4;
  }

  out << "mode = " << mode_name(cfg.mode) << "\n";
  print_inertia(out, inertia);
  out << "h = " << format_double(cfg.h) << ", steps = " << cfg.steps << "\n";
  out << "pi0 = [" << format_double(pi0[0]) << ", " << format_double(pi0[1]) << ", "
      << format_double(pi0[2]) << "]\n";
  out << "csv = " << path << "\n";

  for (const DriftReport& report : conservation_report(traj, inertia)) {
    const bool spatial = report.quantity.rfind("spatial_momentum", 0) == 0;
    const std::string flag = spatial ? "spatial_momentum" : report.quantity;
    if (cfg.report_enabled(flag)) {
      print_drift(out, report);
    }
  }

  out << "dlp_consistency_max = " << format_double(traj.max_dlp_residual) << "\n";
  out << "max_step_rotation = " << format_double(traj.max_step_angle) << "\n";
  const long total_iters =
      std::accumulate(traj.newton_iters.begin(), traj.newton_iters.end(), 0L);
  int max_iters = 0;
  for (int it : traj.newton_iters) max_iters = std::max(max_iters, it);
  out << "newton_iterations: total = " << total_iters << ", max_per_step = " << max_iters
      << ", mean = "
      << format_double(static_cast<double>(total_iters) /
                       static_cast<double>(traj.newton_iters.size()))
      << "\n";
  out << "warnings = " << traj.warnings.size() << "\n";
  return 0;
}

int run_convergence(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const InertiaSpec inertia = cfg.inertia();
  const MomentumVector pi0_cont = inertia_apply(inertia, *cfg.omega0);

  ConvergenceResult study;
  try {
    study = convergence_study(inertia, pi0_cont, cfg.t_final, cfg.h_list, cfg.stepper());
  } catch (const SolveError& e) {
    err << "solver failure at step " << e.step_index << ": " << e.what() << "\n";
    return 2;
  }

  const std::string path = cfg.out.empty() ? cfg.default_out() : cfg.out;
  {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
      err << "output failure: cannot open '" << path << "'\n";
      return 4;
    }
    os << "h,error,observed_order\n";
    for (const ConvergenceRow& row : study.rows) {
      os << format_double(row.h) << ',' << format_double(row.error) << ',';
      if (std::isnan(row.observed_order)) {
        os << '\n';
      } else {
        os << format_double(row.observed_order) << '\n';
      }
    }
  }

  out << "mode = convergence\n";
  print_inertia(out, inertia);
  out << "t_final = " << format_double(cfg.t_final) << "\n";
  out << "oracle_steps = " << study.oracle_steps << "\n";
  out << "csv = " << path << "\n";
  for (const ConvergenceRow& row : study.rows) {
    out << "h = " << format_double(row.h) << ": error = " << format_double(row.error);
    if (!std::isnan(row.observed_order)) {
      out << ", observed_order = " << format_double(row.observed_order);
    }
    out << "\n";
  }
  out << "oracle_self_check: max relative error change on halving = "
      << format_double(study.oracle_rel_change) << "\n";
  return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  const InertiaSpec inertia = cfg.inertia();
  out << "mode = verify (seed = " << cfg.seed << ")\n";
  print_inertia(out, inertia);
  bool all_pass = true;
  for (const PropertyResult& p : verify_properties(inertia, cfg.seed)) {
    all_pass = all_pass && p.pass;
    out << (p.pass ? "[PASS] " : "[FAIL] ") << p.name
        << ": measured = " << format_double(p.measured)
        << ", bound = " << format_double(p.bound) << "\n";
  }
  out << (all_pass ? "verify: all properties passed\n" : "verify: FAILURES present\n");
  return all_pass ? 0 : 3;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  switch (cfg.mode) {
    case RunMode::dep:
    case RunMode::dlp:
    case RunMode::reconstruct:
      return run_trajectory(cfg, out, err);
    case RunMode::convergence:
      return run_convergence(cfg, out, err);
    case RunMode::verify:
      return run_verify(cfg, out);
  }
  return 1;
}

} // namespace depint
