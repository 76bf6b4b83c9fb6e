#pragma once

#include <iosfwd>
#include <string>

#include "depint/integrators.hpp"
#include "depint/rigid_body.hpp"

namespace depint {

/// Shortest locale-independent representation with 17 significant digits
/// (lossless round trip of doubles).
std::string format_double(double value);

/// Trajectory CSV. One row per step k = 0..N: the outgoing transition f_k and
/// its invariants occupy row k, so the final row carries only the momentum
/// state (f, casimir_group and energy cells are empty there, as are the g
/// cells when no attitudes were reconstructed).
void write_trajectory_csv(std::ostream& os, const TrajectoryRecord& traj,
                          const InertiaSpec& inertia);
void write_trajectory_csv(const std::string& path, const TrajectoryRecord& traj,
                          const InertiaSpec& inertia);

/// Inverse of write_trajectory_csv; h is recovered from the time column.
TrajectoryRecord read_trajectory_csv(std::istream& is);
TrajectoryRecord read_trajectory_csv(const std::string& path);

} // namespace depint
