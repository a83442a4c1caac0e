#include "geobip/solve.hpp"

#include <stdexcept>

#include "geobip/error.hpp"
#include "geobip/oracle.hpp"

namespace geobip {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kAuto:
      return "auto";
    case Algorithm::kSweep:
      return "sweep";
    case Algorithm::kGeneric:
      return "generic";
    case Algorithm::kBalls:
      return "balls";
    case Algorithm::kOracle:
      return "oracle";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kAuto, Algorithm::kSweep, Algorithm::kGeneric, Algorithm::kBalls, Algorithm::kOracle}) {
    if (to_string(a) == name) return a;
  }
  throw ParseError("unknown algorithm '" + std::string(name) + "'");
}

namespace {

SolveReport segments_impl(std::span<const Segment> segments, SegmentMode mode, Algorithm algo) {
  const SegmentSet set(segments, mode);
  switch (algo) {
    case Algorithm::kOracle:
      return {oracle_bipartiteness(set), {}, false, {}, {}, {}};
    case Algorithm::kGeneric: {
      GenericStats stats;
      Verdict v = generic_bipartiteness(set, grid_detector_factory(), &stats);
      return {std::move(v), {}, false, {}, stats, {}};
    }
    case Algorithm::kBalls:
      throw std::invalid_argument("the balls algorithm does not apply to segments");
    case Algorithm::kAuto:
    case Algorithm::kSweep:
      break;
  }

  SolveReport report{Verdict{}, {}, false, {}, {}, {}};
  const auto ready = general_position_form(segments, mode, &report.degeneracies, &report.rewritten);
  if (!ready) {
    if (algo == Algorithm::kSweep) {
      throw DegenerateInputError("input is not in general position: " + report.degeneracies.summary());
    }
    report.verdict = oracle_bipartiteness(set, Provenance::kOracleFallback);
    return report;
  }
  SegmentSweep sweep(*ready, mode);
  report.verdict = sweep.run();
  report.sweep = sweep.stats();
  return report;
}

SolveReport balls_impl(std::span<const Ball> balls, Algorithm algo) {
  const BallSet set(balls);
  SolveReport report{Verdict{}, {}, false, {}, {}, {}};
  switch (algo) {
    case Algorithm::kAuto:
    case Algorithm::kBalls: {
      BallsStats stats;
      report.verdict = balls_bipartiteness(set, {}, &stats);
      report.balls = stats;
      break;
    }
    case Algorithm::kGeneric: {
      GenericStats stats;
      report.verdict = generic_bipartiteness(set, grid_detector_factory(), &stats);
      report.generic = stats;
      break;
    }
    case Algorithm::kOracle:
      report.verdict = oracle_bipartiteness(set);
      break;
    case Algorithm::kSweep:
      throw std::invalid_argument("the sweep applies to segments only");
  }
  return report;
}

SolveReport finish(SolveReport r) {
  if (!r.verdict.is_bipartite()) r.verdict.witness = canonical(r.verdict.odd_cycle());
  return r;
}

}  // namespace

SolveReport solve_segments(std::span<const Segment> segments, SegmentMode mode, Algorithm algo) {
  return finish(segments_impl(segments, mode, algo));
}

SolveReport solve_balls(std::span<const Ball> balls, Algorithm algo) { return finish(balls_impl(balls, algo)); }

}  // namespace geobip
