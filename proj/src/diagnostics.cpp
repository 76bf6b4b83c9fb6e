#include "depint/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/LU>

#include "depint/so3.hpp"

namespace depint {

DriftReport make_drift_report(std::string quantity, const std::vector<double>& series) {
  if (series.empty()) {
    throw std::invalid_argument("make_drift_report: empty series");
  }
  DriftReport report;
  report.quantity = std::move(quantity);
  report.initial = series.front();
  const double denom = report.initial != 0.0 ? std::abs(report.initial) : 1.0;

  report.deviations.reserve(series.size());
  for (double v : series) {
    const double abs_dev = v - report.initial;
    report.deviations.push_back(abs_dev / denom);
    report.max_abs_deviation = std::max(report.max_abs_deviation, std::abs(abs_dev));
  }
  for (double d : report.deviations) {
    report.max_rel_deviation = std::max(report.max_rel_deviation, std::abs(d));
  }

  // Least squares d_k ~ slope * k + b.
  const auto n = static_cast<double>(series.size());
  if (series.size() > 1) {
    const double k_mean = 0.5 * (n - 1.0);
    double d_mean = 0.0;
    for (double d : report.deviations) d_mean += d;
    d_mean /= n;
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < report.deviations.size(); ++k) {
      const double dk = static_cast<double>(k) - k_mean;
      num += dk * (report.deviations[k] - d_mean);
      den += dk * dk;
    }
    report.slope = num / den;
  }
  return report;
}

std::vector<DriftReport> conservation_report(const TrajectoryRecord& traj,
                                             const InertiaSpec& inertia) {
  if (traj.pi_seq.empty()) {
    throw std::invalid_argument("conservation_report: empty trajectory");
  }
  std::vector<DriftReport> reports;

  if (!traj.f_seq.empty()) {
    std::vector<double> cg;
    cg.reserve(traj.f_seq.size());
    for (const GroupElement& f : traj.f_seq) {
      cg.push_back(casimir_group(inertia, f));
    }
    reports.push_back(make_drift_report("casimir_group", cg));
  }

  {
    std::vector<double> cd;
    cd.reserve(traj.pi_seq.size());
    for (const MomentumVector& pi : traj.pi_seq) {
      cd.push_back(casimir_dual(pi));
    }
    reports.push_back(make_drift_report("casimir_dual", cd));
  }

  if (!traj.f_seq.empty()) {
    std::vector<double> en;
    en.reserve(traj.f_seq.size());
    for (const GroupElement& f : traj.f_seq) {
      const AlgebraVector xi = so3::log_so3(f) / traj.h;
      en.push_back(energy(inertia, xi));
    }
    reports.push_back(make_drift_report("energy", en));
  }

  if (!traj.g_seq.empty()) {
    if (traj.g_seq.size() != traj.pi_seq.size()) {
      throw std::invalid_argument("conservation_report: g_seq/pi_seq length mismatch");
    }
    const char* names[3] = {"spatial_momentum_x", "spatial_momentum_y", "spatial_momentum_z"};
    std::vector<double> comp[3];
    for (std::size_t k = 0; k < traj.g_seq.size(); ++k) {
      const MomentumVector spatial =
          so3::coAd(traj.g_seq[k].transpose(), traj.pi_seq[k]);
      for (int i = 0; i < 3; ++i) comp[i].push_back(spatial[i]);
    }
    for (int i = 0; i < 3; ++i) {
      reports.push_back(make_drift_report(names[i], comp[i]));
    }
  }
  return reports;
}

double diagram_commutes_check(const ReducedLagrangian& ell,
                              const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
                              double fd_step) {
  const GroupOps& ops = ell.group();
  double max_err = 0.0;
  for (const auto& [gk, gk1] : pairs) {
    const GroupElement gk1_inv = ops.inverse(gk1);
    const GroupElement f = ops.compose(gk, gk1_inv);
    const MomentumVector direct = ell.right_momentum(f);

    MomentumVector fd;
    for (int i = 0; i < 3; ++i) {
      AlgebraVector dir = AlgebraVector::Zero();
      dir[i] = fd_step;
      const double plus = ell.eval(ops.compose(ops.compose(ops.exp(dir), gk), gk1_inv));
      dir[i] = -fd_step;
      const double minus = ell.eval(ops.compose(ops.compose(ops.exp(dir), gk), gk1_inv));
      fd[i] = (plus - minus) / (2.0 * fd_step);
    }
    max_err = std::max(max_err, (fd - direct).norm());
  }
  return max_err;
}

ConvergenceResult convergence_study(const InertiaSpec& inertia,
                                    const MomentumVector& pi0_continuous, double t_final,
                                    const std::vector<double>& h_list,
                                    const StepperConfig& cfg) {
  if (h_list.empty()) {
    throw std::invalid_argument("convergence_study: empty h list");
  }
  for (std::size_t i = 0; i + 1 < h_list.size(); ++i) {
    if (!(h_list[i] > h_list[i + 1])) {
      throw std::invalid_argument("convergence_study: h list must be strictly decreasing");
    }
  }
  std::vector<long> step_counts;
  for (double h : h_list) {
    if (!(h > 0.0)) {
      throw std::invalid_argument("convergence_study: h must be positive");
    }
    const double ratio = t_final / h;
    const long n = std::lround(ratio);
    if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-9 * ratio) {
      throw std::invalid_argument("convergence_study: t_final must be an integer multiple of h");
    }
    step_counts.push_back(n);
  }

  // Reference solution, plus a half-resolution run to bound the oracle's own
  // contribution to the measured errors.
  const long oracle_steps = std::max<long>(20000, 4 * step_counts.back());
  const GroupElement g0 = GroupElement::Identity();
  const MomentumVector ref = rk4_run(inertia, pi0_continuous, g0, t_final, oracle_steps).pi;
  const MomentumVector ref_half =
      rk4_run(inertia, pi0_continuous, g0, t_final, oracle_steps / 2).pi;

  struct TrajError {
    double error;
    double error_vs_half;
  };
  std::vector<std::future<TrajError>> futures;
  futures.reserve(h_list.size());
  for (std::size_t i = 0; i < h_list.size(); ++i) {
    const double h = h_list[i];
    const long n = step_counts[i];
    futures.push_back(std::async(std::launch::async, [&, h, n]() -> TrajError {
      const MoserVeselovLagrangian ell(inertia);
      const TrajectoryRecord traj = run_dep(ell, h * pi0_continuous, n, cfg, h);
      const MomentumVector final_pi = traj.pi_seq.back() / h;
      return {(final_pi - ref).norm(), (final_pi - ref_half).norm()};
    }));
  }

  ConvergenceResult result;
  result.oracle_steps = oracle_steps;
  for (std::size_t i = 0; i < futures.size(); ++i) {
    const TrajError te = futures[i].get();
    ConvergenceRow row;
    row.h = h_list[i];
    row.error = te.error;
    row.observed_order = std::numeric_limits<double>::quiet_NaN();
    if (i > 0) {
      row.observed_order = std::log(result.rows[i - 1].error / te.error) /
                           std::log(h_list[i - 1] / h_list[i]);
    }
    result.rows.push_back(row);
    if (te.error > 1e-13) {
      result.oracle_rel_change =
          std::max(result.oracle_rel_change, std::abs(te.error_vs_half - te.error) / te.error);
    }
  }
  return result;
}

namespace {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  AlgebraVector unit_vector() {
    std::normal_distribution<double> normal(0.0, 1.0);
    AlgebraVector v;
    do {
      v = AlgebraVector(normal(rng_), normal(rng_), normal(rng_));
    } while (v.norm() < 1e-8);
    return v.normalized();
  }

  AlgebraVector vector(double scale = 1.0) {
    std::normal_distribution<double> normal(0.0, scale);
    return AlgebraVector(normal(rng_), normal(rng_), normal(rng_));
  }

  GroupElement rotation(double max_angle = M_PI - 0.01) {
    return so3::exp_so3(uniform(0.0, max_angle) * unit_vector());
  }

private:
  std::mt19937_64 rng_;
};

} // namespace

std::vector<PropertyResult> verify_properties(const InertiaSpec& inertia, std::uint64_t seed) {
  constexpr int kSamples = 1000;
  const MoserVeselovLagrangian ell(inertia);
  const GroupOps& ops = ell.group();
  std::vector<PropertyResult> results;

  const auto record = [&results](const std::string& name, double measured, double bound) {
    results.push_back({name, measured <= bound, measured, bound});
  };

  {
    Sampler s(seed);
    double worst = 0.0;
    for (int i = 0; i < kSamples; ++i) {
      const GroupElement g = s.rotation();
      const MomentumVector mu = s.vector();
      const AlgebraVector xi = s.vector();
      worst = std::max(worst, std::abs(ops.pair(ops.coAd(g, mu), xi) -
                                       ops.pair(mu, ops.Ad(g, xi))));
    }
    record("coadjoint pairing identity", worst, 1e-12);
  }
  {
    Sampler s(seed + 1);
    double worst = 0.0;
    for (int i = 0; i < kSamples; ++i) {
      const GroupElement g1 = s.rotation();
      const GroupElement g2 = s.rotation();
      const AlgebraVector xi = s.vector();
      worst = std::max(worst, (ops.Ad(ops.compose(g1, g2), xi) -
                               ops.Ad(g1, ops.Ad(g2, xi))).norm());
    }
    record("Ad homomorphism", worst, 1e-12);
  }
  {
    Sampler s(seed + 2);
    double worst = 0.0;
    for (int i = 0; i < kSamples; ++i) {
      const MomentumVector mu = s.vector();
      worst = std::max(worst, (ops.coAd(ops.identity(), mu) - mu).cwiseAbs().maxCoeff());
    }
    record("coAd at identity is exact", worst, 0.0);
  }
  {
    Sampler s(seed + 3);
    double worst = 0.0;
    for (int i = 0; i < kSamples; ++i) {
      const AlgebraVector v = s.uniform(0.0, M_PI - 0.01) * s.unit_vector();
      worst = std::max(worst, (ops.log(ops.exp(v)) - v).norm());
    }
    record("log(exp) round trip", worst, 1e-10);
  }
  {
    Sampler s(seed + 4);
    double worst = 0.0;
    for (int i = 0; i < kSamples; ++i) {
      const GroupElement r = ops.exp(s.uniform(0.0, 10.0) * s.unit_vector());
      const double ortho = (r.transpose() * r - GroupElement::Identity()).cwiseAbs().maxCoeff();
      worst = std::max({worst, ortho, std::abs(r.determinant() - 1.0)});
    }
    record("exp orthogonality and determinant", worst, 1e-13);
  }
  {
    Sampler s(seed + 5);
    double worst = 0.0;
    for (int i = 0; i < kSamples; ++i) {
      const GroupElement g = s.rotation();
      const MomentumVector mu = s.vector();
      worst = std::max(worst, std::abs(ops.coAd(g, mu).norm() - mu.norm()));
    }
    record("coAd isometry", worst, 1e-13);
  }
  {
    Sampler s(seed + 6);
    double worst_left = 0.0, worst_right = 0.0;
    for (int i = 0; i < kSamples; ++i) {
      const GroupElement f = s.rotation();
      const double scale = std::max(1.0, mv_legendre(inertia, f).norm());
      worst_left = std::max(worst_left,
                            (ell.left_momentum(f) - fd_left_pullback_dl(ell, f)).norm() / scale);
      worst_right = std::max(
          worst_right, (ell.right_momentum(f) - fd_right_pullback_dl(ell, f)).norm() / scale);
    }
    record("left momentum closed form vs finite differences", worst_left, 1e-7);
    record("right momentum closed form vs finite differences", worst_right, 1e-7);
  }
  {
    Sampler s(seed + 7);
    double worst = 0.0;
    for (int i = 0; i < kSamples; ++i) {
      const GroupElement f = s.rotation();
      worst = std::max(worst, (ell.right_momentum(f) -
                               ops.coAd(ops.inverse(f), ell.left_momentum(f))).norm());
    }
    record("right pullback equals transported left pullback", worst, 1e-12);
  }
  {
    Sampler s(seed + 8);
    std::vector<std::pair<GroupElement, GroupElement>> pairs;
    for (int i = 0; i < 100; ++i) {
      const GroupElement gk = s.rotation();
      const GroupElement f = ops.exp(s.uniform(0.0, 0.5) * s.unit_vector());
      pairs.emplace_back(gk, ops.compose(ops.inverse(f), gk));
    }
    record("legendre diagram commutes", diagram_commutes_check(ell, pairs, 1e-5), 1e-6);

    // Central differences: the defect should shrink ~4x per halving where
    // truncation dominates.
    const double coarse = diagram_commutes_check(ell, pairs, 2e-3);
    const double fine = diagram_commutes_check(ell, pairs, 1e-3);
    const double ratio = coarse / fine;
    results.push_back({"diagram defect is second order in the step",
                       ratio > 2.5 && ratio < 6.0, ratio, 4.0});
  }
  return results;
}

} // namespace depint
