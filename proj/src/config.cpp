#include "depint/config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace depint {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& value, const std::string& key, int line) {
  const std::string t = trim(value);
  double out = 0.0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  if (ec != std::errc() || p != t.data() + t.size()) {
    throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                      "': cannot parse '" + t + "' as a number", line, key);
  }
  return out;
}

long parse_long(const std::string& value, const std::string& key, int line) {
  const std::string t = trim(value);
  long out = 0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  if (ec != std::errc() || p != t.data() + t.size()) {
    throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                      "': cannot parse '" + t + "' as an integer", line, key);
  }
  return out;
}

bool parse_bool(const std::string& value, const std::string& key, int line) {
  const std::string t = trim(value);
  if (t == "true" || t == "1" || t == "on") return true;
  if (t == "false" || t == "0" || t == "off") return false;
  throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                    "': cannot parse '" + t + "' as a boolean", line, key);
}

std::vector<double> parse_list(const std::string& value, const std::string& key, int line) {
  std::string t = trim(value);
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
    t = t.substr(1, t.size() - 2);
  }
  std::vector<double> items;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    items.push_back(parse_double(item, key, line));
  }
  if (items.empty()) {
    throw ConfigError("line " + std::to_string(line) + ": key '" + key + "': empty list",
                      line, key);
  }
  return items;
}

Eigen::Vector3d parse_triple(const std::string& value, const std::string& key, int line) {
  const std::vector<double> items = parse_list(value, key, line);
  if (items.size() != 3) {
    throw ConfigError("line " + std::to_string(line) + ": key '" + key + "': expected 3 values, got " +
                      std::to_string(items.size()), line, key);
  }
  return {items[0], items[1], items[2]};
}

const std::set<std::string> kKnownReports = {"casimir_group", "casimir_dual", "energy",
                                             "spatial_momentum"};

} // namespace

RunMode parse_mode(const std::string& text) {
  const std::string t = trim(text);
  if (t == "dep") return RunMode::dep;
  if (t == "dlp") return RunMode::dlp;
  if (t == "reconstruct") return RunMode::reconstruct;
  if (t == "convergence") return RunMode::convergence;
  if (t == "verify") return RunMode::verify;
  throw ConfigError("unknown mode '" + t +
                    "' (expected dep, dlp, reconstruct, convergence, or verify)", 0, "mode");
}

const char* mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::dep: return "dep";
    case RunMode::dlp: return "dlp";
    case RunMode::reconstruct: return "reconstruct";
    case RunMode::convergence: return "convergence";
    case RunMode::verify: return "verify";
  }
  return "?";
}

void apply_key(RunConfig& cfg, const std::string& raw_key, const std::string& value, int line) {
  const std::string key = trim(raw_key);
  try {
    if (key == "mode") {
      cfg.mode = parse_mode(value);
    } else if (key == "lambda") {
      cfg.lambda = parse_triple(value, key, line);
    } else if (key == "classical") {
      cfg.classical = parse_triple(value, key, line);
    } else if (key == "pi0") {
      cfg.pi0 = parse_triple(value, key, line);
    } else if (key == "omega0") {
      cfg.omega0 = parse_triple(value, key, line);
    } else if (key == "h") {
      cfg.h = parse_double(value, key, line);
    } else if (key == "steps") {
      cfg.steps = parse_long(value, key, line);
    } else if (key == "out") {
      cfg.out = trim(value);
    } else if (key == "tol") {
      cfg.tol = parse_double(value, key, line);
    } else if (key == "max_iters") {
      cfg.max_iters = static_cast<int>(parse_long(value, key, line));
    } else if (key == "fd_jacobian") {
      cfg.fd_jacobian = parse_bool(value, key, line);
    } else if (key == "guess") {
      const std::string t = trim(value);
      if (t == "previous_f") {
        cfg.guess = GuessStrategy::previous_f;
      } else if (t == "identity") {
        cfg.guess = GuessStrategy::identity;
      } else {
        throw ConfigError("line " + std::to_string(line) +
                          ": key 'guess': expected previous_f or identity", line, key);
      }
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_long(value, key, line));
    } else if (key == "h_list") {
      cfg.h_list = parse_list(value, key, line);
    } else if (key == "t_final") {
      cfg.t_final = parse_double(value, key, line);
    } else if (key == "reports") {
      cfg.reports.clear();
      const std::string t = trim(value);
      if (t != "all") {
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ',')) {
          const std::string name = trim(item);
          if (kKnownReports.find(name) == kKnownReports.end()) {
            throw ConfigError("line " + std::to_string(line) + ": key 'reports': unknown report '" +
                              name + "'", line, key);
          }
          cfg.reports.insert(name);
        }
      }
    } else {
      throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'", line, key);
    }
  } catch (ConfigError& err) {
    if (err.line == 0) {
      throw ConfigError("line " + std::to_string(line) + ": " + err.what(), line,
                        err.key.empty() ? key : err.key);
    }
    throw;
  }
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
  std::stringstream ss(text);
  std::string raw_line;
  int line_number = 0;
  while (std::getline(ss, raw_line)) {
    ++line_number;
    const std::string stripped = trim(raw_line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_number) +
                        ": expected 'key = value', got '" + stripped + "'", line_number);
    }
    apply_key(cfg, stripped.substr(0, eq), stripped.substr(eq + 1), line_number);
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  apply_config_text(cfg, text);
  cfg.validate();
  return cfg;
}

void RunConfig::validate() const {
  const bool trajectory_mode =
      mode == RunMode::dep || mode == RunMode::dlp || mode == RunMode::reconstruct;

  if (lambda && classical) {
    throw ConfigError("exactly one of 'lambda' and 'classical' may be given", 0, "lambda");
  }
  if (mode != RunMode::verify && !lambda && !classical) {
    throw ConfigError("missing required key 'lambda' (or 'classical')", 0, "lambda");
  }
  if (lambda || classical) {
    const char* key = lambda ? "lambda" : "classical";
    try {
      inertia();
    } catch (const std::invalid_argument& err) {
      throw ConfigError(std::string("key '") + key + "': " + err.what(), 0, key);
    }
  }

  if (trajectory_mode) {
    if (pi0 && omega0) {
      throw ConfigError("exactly one of 'pi0' and 'omega0' may be given", 0, "pi0");
    }
    if (!pi0 && !omega0) {
      throw ConfigError("missing required key 'pi0' (or 'omega0')", 0, "pi0");
    }
    if (!(h > 0.0)) {
      throw ConfigError("missing or invalid key 'h': must be > 0", 0, "h");
    }
    if (steps < 1) {
      throw ConfigError("missing or invalid key 'steps': must be >= 1", 0, "steps");
    }
  }

  if (mode == RunMode::convergence) {
    if (pi0) {
      throw ConfigError(
          "convergence mode requires 'omega0' (a continuous initial condition); "
          "'pi0' is ambiguous across the h list", 0, "pi0");
    }
    if (!omega0) {
      throw ConfigError("missing required key 'omega0'", 0, "omega0");
    }
    if (!(t_final > 0.0)) {
      throw ConfigError("invalid key 't_final': must be > 0", 0, "t_final");
    }
    if (h_list.empty()) {
      throw ConfigError("invalid key 'h_list': must be nonempty", 0, "h_list");
    }
    for (std::size_t i = 0; i < h_list.size(); ++i) {
      if (!(h_list[i] > 0.0)) {
        throw ConfigError("invalid key 'h_list': entries must be > 0", 0, "h_list");
      }
      if (i > 0 && !(h_list[i - 1] > h_list[i])) {
        throw ConfigError("invalid key 'h_list': must be strictly decreasing", 0, "h_list");
      }
    }
  }

  if (!(tol > 0.0)) {
    throw ConfigError("invalid key 'tol': must be > 0", 0, "tol");
  }
  if (max_iters < 1) {
    throw ConfigError("invalid key 'max_iters': must be >= 1", 0, "max_iters");
  }
}

InertiaSpec RunConfig::inertia() const {
  if (classical) {
    return InertiaSpec::from_classical(*classical);
  }
  if (lambda) {
    return InertiaSpec::from_lambda(*lambda);
  }
  // verify mode default
  return InertiaSpec::from_lambda(Eigen::Vector3d(1.0, 2.0, 3.0));
}

MomentumVector RunConfig::initial_pi() const {
  if (pi0) return *pi0;
  if (omega0) return h * inertia_apply(inertia(), *omega0);
  throw ConfigError("missing required key 'pi0' (or 'omega0')", 0, "pi0");
}

StepperConfig RunConfig::stepper() const {
  StepperConfig s;
  s.newton_tol = tol;
  s.max_iters = max_iters;
  s.fd_jacobian = fd_jacobian;
  s.guess_strategy = guess;
  return s;
}

bool RunConfig::report_enabled(const std::string& name) const {
  return reports.empty() || reports.count(name) > 0;
}

std::string RunConfig::default_out() const {
  return mode == RunMode::convergence ? "convergence.csv" : "trajectory.csv";
}

} // namespace depint
