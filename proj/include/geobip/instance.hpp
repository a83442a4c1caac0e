#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "geobip/geometry.hpp"
#include "geobip/verdict.hpp"

namespace geobip {

enum class InstanceKind { kSegments, kDisks, kBalls };

std::string_view to_string(InstanceKind kind);
std::string_view to_string(SegmentMode mode);
/// "closed" or "open"; ParseError otherwise.
SegmentMode parse_mode(std::string_view text);

struct Instance {
  InstanceKind kind = InstanceKind::kSegments;
  SegmentMode mode = SegmentMode::kClosed;
  std::size_t dim = 2;
  std::vector<Segment> segments;
  std::vector<Ball> balls;  // disks are balls of dimension 2

  std::size_t size() const { return kind == InstanceKind::kSegments ? segments.size() : balls.size(); }
};

/// Segments: {"kind":"segments","mode":"closed","items":[{"id":0,"p":["0","0"],"q":["2","2"]}]}
/// Disks:    {"kind":"disks","items":[{"id":0,"c":["0","0"],"r":"1"}]}
/// Balls:    {"kind":"balls","dim":3,"items":[{"id":0,"c":["0","0","0"],"r":"1"}]}
///
/// Coordinates are decimal strings or JSON numbers; numbers are read from
/// their source text, never through binary floating point. Throws ParseError
/// on malformed documents, duplicate ids, zero-length segments, inconsistent
/// dimensions and non-positive radii.
Instance parse_instance(std::string_view json_text);
Instance load_instance(const std::string& path);

std::string instance_to_json(const Instance& instance);

/// {"result":"bipartite","colors":{"0":"red",...},"provenance":"sweep"} or
/// {"result":"odd_cycle","cycle":[0,1,2],"provenance":"sweep"}.
std::string verdict_to_json(const Verdict& verdict);
/// Inverse of verdict_to_json. Throws ParseError.
Verdict parse_verdict(std::string_view json_text);

// ---------------------------------------------------------------------------
// Generators. Deterministic for a given seed on every platform; coordinates
// are multiples of 1e-9 inside the unit square.

struct GenOptions {
  std::size_t n = 100;
  std::uint64_t seed = 1;
  bool bipartite = false;
  /// Target mean number of neighbors for the unconstrained generators.
  double degree = 1.5;
};

/// Unconstrained: uniform midpoints and directions, length tuned to the
/// target degree. Bipartite: two layers of parallel translates, one near
/// horizontal and one near vertical, every pair across layers crossing.
std::vector<Segment> generate_segments(const GenOptions& options);

/// Unconstrained: uniform centers, radius tuned to the target degree.
/// Bipartite: two interleaved jittered grid packings; disks within one
/// packing are disjoint.
std::vector<Ball> generate_disks(const GenOptions& options);

}  // namespace geobip
