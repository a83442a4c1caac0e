#pragma once

#include <ostream>

namespace geobip {

/// Command-line entry point, usable in-process.
///
///   check <file> [--algo A] [--mode closed|open] [--out json|svg] [--verify]
///   gen segments|disks <n> [--bipartite] [--seed S] [--degree D] [-o file]
///   bench <file | gen:KIND:N[:bipartite][:seed=S]> [--algo A]...
///
/// Exit codes: 0 bipartite (or success), 1 odd cycle, 2 usage, parse or
/// unsupported input, 3 internal invariant failure or failed --verify.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geobip
