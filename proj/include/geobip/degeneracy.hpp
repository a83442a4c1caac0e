#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geobip/geometry.hpp"

namespace geobip {

enum class DegeneracyKind {
  kVertical,            // one segment
  kEndpointOnSegment,   // endpoint of the first id in the relative interior of the second
  kSharedEndpoint,      // the two segments have a common endpoint
  kCollinearOverlap,    // collinear and sharing more than one point
  kConcurrentCrossing,  // three or more segments cross at one point
  kEventCollision,      // two distinct event points with the same x
};

std::string_view to_string(DegeneracyKind kind);

struct Degeneracy {
  DegeneracyKind kind;
  std::vector<ObjectId> ids;
  Point2 at;  // a representative point (the collision x for kEventCollision)
};

struct DegeneracyReport {
  std::vector<Degeneracy> items;

  bool empty() const { return items.empty(); }
  bool has(DegeneracyKind kind) const;
  /// Only touching configurations, which the length rewrites resolve.
  bool only_touching() const;
  /// Only touching pairs, vertical segments and event collisions, which the
  /// length rewrites and a shear resolve.
  bool fixable() const;
  std::string summary() const;
};

/// All violations of the sweep's general position assumptions, found by an
/// exact quadratic scan over pairs, endpoints and proper crossing points.
/// Empty iff the sweep preconditions hold.
DegeneracyReport degeneracy_scan(std::span<const Segment> segments, SegmentMode mode);

/// Closed mode: each segment grows at both ends by lambda times its length,
/// with lambda = 2^-k small enough that every growth is below half the least
/// positive distance from an endpoint to another segment. Touching pairs turn
/// into proper crossings and no new pair meets, so the intersection graph is
/// unchanged.
std::vector<Segment> lengthen_segments(std::span<const Segment> segments);

/// Open mode: each segment shrinks at both ends by lambda times its length,
/// with lambda below half the smallest distance (in segment parameter) from a
/// proper crossing to an end. Touching pairs separate, crossings survive.
std::vector<Segment> shrink_segments(std::span<const Segment> segments);

/// (x, y) -> (x + delta * y, y). An invertible affine map, so incidences and
/// with them the intersection graph are exactly preserved.
std::vector<Segment> shear_segments(std::span<const Segment> segments, const Scalar& delta);

/// Scan, and when every problem is fixable, rewrite: touching pairs with the
/// length rule for `mode`, then vertical segments and event collisions with a
/// shear whose factor is searched among a few small rationals. Returns the
/// sweep-ready segments, or nothing when degeneracies remain. `report`
/// receives the first scan.
std::optional<std::vector<Segment>> general_position_form(std::span<const Segment> segments, SegmentMode mode,
                                                          DegeneracyReport* report = nullptr,
                                                          bool* rewritten = nullptr);

}  // namespace geobip
