#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "geobip/balls.hpp"
#include "geobip/degeneracy.hpp"
#include "geobip/generic.hpp"
#include "geobip/segment_sweep.hpp"
#include "geobip/verdict.hpp"

namespace geobip {

enum class Algorithm { kAuto, kSweep, kGeneric, kBalls, kOracle };

std::string_view to_string(Algorithm a);
/// Throws ParseError on an unknown name.
Algorithm parse_algorithm(std::string_view name);

/// What a solve did besides producing the verdict.
struct SolveReport {
  Verdict verdict;
  DegeneracyReport degeneracies;
  bool rewritten = false;  // degeneracies resolved by a length rewrite or a shear
  std::optional<SweepStats> sweep;
  std::optional<GenericStats> generic;
  std::optional<BallsStats> balls;
};

/// Both entry points return odd cycles in canonical form.
///
/// kAuto and kSweep scan for degeneracies first. kAuto falls back to the
/// oracle (provenance oracle-fallback) when the scan finds anything the
/// exact rewrites cannot resolve; kSweep throws DegenerateInputError
/// instead. kBalls is rejected with std::invalid_argument.
SolveReport solve_segments(std::span<const Segment> segments, SegmentMode mode, Algorithm algo = Algorithm::kAuto);

/// kAuto is the capped method. kSweep is rejected with std::invalid_argument.
SolveReport solve_balls(std::span<const Ball> balls, Algorithm algo = Algorithm::kAuto);

}  // namespace geobip
