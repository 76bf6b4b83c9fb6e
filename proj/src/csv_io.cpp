#include "depint/csv_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "depint/so3.hpp"

namespace depint {

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                       std::chars_format::general, 17);
  if (ec != std::errc()) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, ptr);
}

namespace {

const char* kHeader =
    "step,t,f11,f12,f13,f21,f22,f23,f31,f32,f33,Pi1,Pi2,Pi3,"
    "g11,g12,g13,g21,g22,g23,g31,g32,g33,casimir_group,casimir_dual,energy";

constexpr std::size_t kColumns = 26;

void append_matrix(std::string& row, const GroupElement& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      row += ',';
      row += format_double(m(i, j));
    }
  }
}

double parse_field(const std::string& field, std::size_t row, std::size_t col) {
  double out = 0.0;
  const auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  if (ec != std::errc() || p != field.data() + field.size()) {
    throw std::runtime_error("trajectory csv: row " + std::to_string(row) + " column " +
                             std::to_string(col + 1) + ": bad number '" + field + "'");
  }
  return out;
}

} // namespace

void write_trajectory_csv(std::ostream& os, const TrajectoryRecord& traj,
                          const InertiaSpec& inertia) {
  const std::size_t n = traj.f_seq.size();
  if (traj.pi_seq.size() != n + 1) {
    throw std::invalid_argument("write_trajectory_csv: pi_seq must have f_seq.size() + 1 entries");
  }
  const bool have_g = !traj.g_seq.empty();
  if (have_g && traj.g_seq.size() != traj.pi_seq.size()) {
    throw std::invalid_argument("write_trajectory_csv: g_seq/pi_seq length mismatch");
  }

  os << kHeader << '\n';
  for (std::size_t k = 0; k <= n; ++k) {
    std::string row = std::to_string(k);
    row += ',';
    row += format_double(static_cast<double>(k) * traj.h);

    if (k < n) {
      append_matrix(row, traj.f_seq[k]);
    } else {
      row.append(9, ',');
    }
    for (int i = 0; i < 3; ++i) {
      row += ',';
      row += format_double(traj.pi_seq[k][i]);
    }
    if (have_g) {
      append_matrix(row, traj.g_seq[k]);
    } else {
      row.append(9, ',');
    }
    if (k < n) {
      row += ',';
      row += format_double(casimir_group(inertia, traj.f_seq[k]));
    } else {
      row += ',';
    }
    row += ',';
    row += format_double(casimir_dual(traj.pi_seq[k]));
    if (k < n) {
      const AlgebraVector xi = so3::log_so3(traj.f_seq[k]) / traj.h;
      row += ',';
      row += format_double(energy(inertia, xi));
    } else {
      row += ',';
    }
    os << row << '\n';
  }
}

void write_trajectory_csv(const std::string& path, const TrajectoryRecord& traj,
                          const InertiaSpec& inertia) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  write_trajectory_csv(os, traj, inertia);
  os.flush();
  if (!os) {
    throw std::runtime_error("write to '" + path + "' failed");
  }
}

TrajectoryRecord read_trajectory_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kHeader) {
    throw std::runtime_error("trajectory csv: missing or unexpected header");
  }

  struct Row {
    std::vector<std::string> fields;
  };
  std::vector<Row> rows;
  std::size_t row_index = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    Row row;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
      row.fields.push_back(field);
    }
    // Trailing empty fields are dropped by getline; restore them.
    while (row.fields.size() < kColumns) row.fields.emplace_back();
    if (row.fields.size() != kColumns) {
      throw std::runtime_error("trajectory csv: row " + std::to_string(row_index) +
                               ": expected " + std::to_string(kColumns) + " columns");
    }
    rows.push_back(std::move(row));
    ++row_index;
  }
  if (rows.size() < 2) {
    throw std::runtime_error("trajectory csv: need at least two data rows");
  }

  TrajectoryRecord traj;
  const std::size_t n = rows.size() - 1;
  const double t0 = parse_field(rows[0].fields[1], 0, 1);
  const double t1 = parse_field(rows[1].fields[1], 1, 1);
  traj.h = t1 - t0;

  const bool have_g = !rows[0].fields[14].empty();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& f = rows[k].fields;
    if (k < n) {
      GroupElement m;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = parse_field(f[2 + 3 * i + j], k, 2 + 3 * i + j);
      traj.f_seq.push_back(m);
    }
    traj.pi_seq.emplace_back(parse_field(f[11], k, 11), parse_field(f[12], k, 12),
                             parse_field(f[13], k, 13));
    if (have_g) {
      GroupElement m;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = parse_field(f[14 + 3 * i + j], k, 14 + 3 * i + j);
      traj.g_seq.push_back(m);
    }
  }
  return traj;
}

TrajectoryRecord read_trajectory_csv(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw std::runtime_error("cannot open '" + path + "' for reading");
  }
  return read_trajectory_csv(is);
}

} // namespace depint
