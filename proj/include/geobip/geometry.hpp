#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "geobip/scalar.hpp"

namespace geobip {

using ObjectId = std::int64_t;

struct Point2 {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point2&, const Point2&) = default;
  /// Lexicographic (x, y): the sweep's event order.
  friend std::strong_ordering operator<=>(const Point2& a, const Point2& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

/// Closed segments include their endpoints; open segments are their relative
/// interiors only. The mode belongs to an instance, not to a segment.
enum class SegmentMode { kClosed, kOpen };

struct Segment {
  ObjectId id = 0;
  Point2 p;
  Point2 q;

  bool is_vertical() const { return p.x == q.x; }
  /// Endpoint with the smaller (x, y).
  const Point2& left() const { return p < q ? p : q; }
  const Point2& right() const { return p < q ? q : p; }
};

struct Ball {
  ObjectId id = 0;
  std::vector<Scalar> center;
  Scalar radius;

  std::size_t dim() const { return center.size(); }
};

/// Sign of (b - a) x (c - a): +1 counterclockwise, 0 collinear, -1 clockwise.
int orientation(const Point2& a, const Point2& b, const Point2& c);

/// True when p lies on the closed segment ab (collinear and within its box).
bool on_segment(const Point2& p, const Point2& a, const Point2& b);

bool segments_intersect(const Segment& s, const Segment& t, SegmentMode mode);

/// The single point where the relative interiors of s and t cross, if they
/// cross properly. Touching at endpoints, parallel and collinear pairs yield
/// nothing.
std::optional<Point2> crossing_point(const Segment& s, const Segment& t);

/// y-coordinate of s on the vertical line through x. Requires x strictly
/// between the endpoint abscissae (asserted).
Scalar y_at(const Segment& s, const Scalar& x);

/// Closed balls: tangent balls intersect. Throws DegenerateInputError on a
/// dimension mismatch.
bool balls_intersect(const Ball& a, const Ball& b);

/// Squared Euclidean distance from p to the closed segment ab.
Scalar squared_distance(const Point2& p, const Point2& a, const Point2& b);

Scalar squared_length(const Segment& s);

}  // namespace geobip
