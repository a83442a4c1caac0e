#include "geobip/geometry.hpp"

#include <algorithm>
#include <cassert>

#include "geobip/error.hpp"

namespace geobip {

int orientation(const Point2& a, const Point2& b, const Point2& c) {
  const Scalar lhs = (b.x - a.x) * (c.y - a.y);
  const Scalar rhs = (b.y - a.y) * (c.x - a.x);
  const auto cmp = lhs <=> rhs;
  return cmp > 0 ? 1 : (cmp < 0 ? -1 : 0);
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

namespace {

// Parameter interval of t's endpoints projected on the dominant axis of s.
// Used only for collinear pairs.
bool collinear_overlap(const Segment& s, const Segment& t, bool open) {
  const bool use_x = s.p.x != s.q.x;
  auto coord = [&](const Point2& pt) -> const Scalar& { return use_x ? pt.x : pt.y; };
  const Scalar& s0 = std::min(coord(s.p), coord(s.q));
  const Scalar& s1 = std::max(coord(s.p), coord(s.q));
  const Scalar& t0 = std::min(coord(t.p), coord(t.q));
  const Scalar& t1 = std::max(coord(t.p), coord(t.q));
  const Scalar& lo = std::max(s0, t0);
  const Scalar& hi = std::min(s1, t1);
  return open ? lo < hi : lo <= hi;
}

}  // namespace

bool segments_intersect(const Segment& s, const Segment& t, SegmentMode mode) {
  const int o1 = orientation(s.p, s.q, t.p);
  const int o2 = orientation(s.p, s.q, t.q);
  const int o3 = orientation(t.p, t.q, s.p);
  const int o4 = orientation(t.p, t.q, s.q);

  if (o1 == 0 && o2 == 0) return collinear_overlap(s, t, mode == SegmentMode::kOpen);

  if (mode == SegmentMode::kOpen) {
    // Non-collinear lines meet in at most one point; it lies in both relative
    // interiors only for a proper crossing.
    return o1 * o2 < 0 && o3 * o4 < 0;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && on_segment(t.p, s.p, s.q)) || (o2 == 0 && on_segment(t.q, s.p, s.q)) ||
         (o3 == 0 && on_segment(s.p, t.p, t.q)) || (o4 == 0 && on_segment(s.q, t.p, t.q));
}

std::optional<Point2> crossing_point(const Segment& s, const Segment& t) {
  const int o1 = orientation(s.p, s.q, t.p);
  const int o2 = orientation(s.p, s.q, t.q);
  const int o3 = orientation(t.p, t.q, s.p);
  const int o4 = orientation(t.p, t.q, s.q);
  if (!(o1 * o2 < 0 && o3 * o4 < 0)) return std::nullopt;

  // s.p + u (s.q - s.p), u = cross(t.p - s.p, dt) / cross(ds, dt)
  const Scalar dsx = s.q.x - s.p.x;
  const Scalar dsy = s.q.y - s.p.y;
  const Scalar dtx = t.q.x - t.p.x;
  const Scalar dty = t.q.y - t.p.y;
  const Scalar denom = dsx * dty - dsy * dtx;
  const Scalar u = ((t.p.x - s.p.x) * dty - (t.p.y - s.p.y) * dtx) / denom;
  return Point2{s.p.x + u * dsx, s.p.y + u * dsy};
}

Scalar y_at(const Segment& s, const Scalar& x) {
  const Point2& a = s.left();
  const Point2& b = s.right();
  assert(a.x < x && x < b.x && "y_at: abscissa outside the open x-range of the segment");
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

bool balls_intersect(const Ball& a, const Ball& b) {
  if (a.dim() != b.dim()) throw DegenerateInputError("balls_intersect: dimension mismatch");
  Scalar dist2;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const Scalar d = a.center[k] - b.center[k];
    dist2 += d * d;
  }
  const Scalar reach = a.radius + b.radius;
  return dist2 <= reach * reach;
}

Scalar squared_distance(const Point2& p, const Point2& a, const Point2& b) {
  const Scalar dx = b.x - a.x;
  const Scalar dy = b.y - a.y;
  const Scalar len2 = dx * dx + dy * dy;
  Scalar u = len2.sign() == 0 ? Scalar(0) : ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  if (u < Scalar(0)) u = 0;
  if (u > Scalar(1)) u = 1;
  const Scalar ex = p.x - (a.x + u * dx);
  const Scalar ey = p.y - (a.y + u * dy);
  return ex * ex + ey * ey;
}

Scalar squared_length(const Segment& s) {
  const Scalar dx = s.q.x - s.p.x;
  const Scalar dy = s.q.y - s.p.y;
  return dx * dx + dy * dy;
}

}  // namespace geobip
