#pragma once

#include <iosfwd>

#include "depint/config.hpp"

namespace depint {

/// Executes one configured run. Summary goes to `out`, warnings and failure
/// notices to `err`. Returns 0 on success, 2 on solver failure (the failing
/// step index is printed to `err`), 3 when verify-mode properties fail,
/// 4 on file I/O failure.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace depint
