#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "depint/integrators.hpp"
#include "depint/rigid_body.hpp"

namespace depint {

enum class RunMode { dep, dlp, reconstruct, convergence, verify };

/// Parse or validation failure; carries the offending line (1-based, 0 when
/// not tied to a line) and key when known.
class ConfigError : public std::runtime_error {
public:
  ConfigError(const std::string& message, int line = 0, std::string key = "")
      : std::runtime_error(message), line(line), key(std::move(key)) {}

  int line;
  std::string key;
};

/// One run of the tool. Flat key = value text; triples and lists are
/// bracketed comma-separated values, e.g. lambda = [1, 2, 3].
struct RunConfig {
  RunMode mode = RunMode::dep;

  std::optional<Eigen::Vector3d> lambda;
  std::optional<Eigen::Vector3d> classical;
  /// Initial body momentum, discrete normalization (used as given).
  std::optional<Eigen::Vector3d> pi0;
  /// Initial body angular velocity, continuous normalization; the run seeds
  /// pi0 = h * J(omega0).
  std::optional<Eigen::Vector3d> omega0;

  double h = 0.0;
  long steps = 0;
  std::string out;
  double tol = 1e-12;
  int max_iters = 50;
  bool fd_jacobian = false;
  GuessStrategy guess = GuessStrategy::previous_f;
  std::uint64_t seed = 0;

  /// Convergence mode only.
  std::vector<double> h_list = {0.02, 0.01, 0.005, 0.0025};
  double t_final = 1.0;

  /// Which invariants appear in the summary; empty means all.
  std::set<std::string> reports;

  void validate() const;
  InertiaSpec inertia() const;
  /// Resolves pi0/omega0, applying the h-scaling to omega0.
  MomentumVector initial_pi() const;
  StepperConfig stepper() const;
  bool report_enabled(const std::string& name) const;
  std::string default_out() const;
};

/// Applies one key/value pair (shared by the file parser and flag overrides).
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value, int line = 0);

/// Applies key = value lines to cfg without final validation.
void apply_config_text(RunConfig& cfg, const std::string& text);

/// Full parse: defaults, then text, then validation.
RunConfig parse_config(const std::string& text);

RunMode parse_mode(const std::string& text);
const char* mode_name(RunMode mode);

} // namespace depint
