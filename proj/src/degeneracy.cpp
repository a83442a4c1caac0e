#include "geobip/degeneracy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "geobip/object_set.hpp"

namespace geobip {

std::string_view to_string(DegeneracyKind kind) {
  switch (kind) {
    case DegeneracyKind::kVertical:
      return "vertical-segment";
    case DegeneracyKind::kEndpointOnSegment:
      return "endpoint-on-segment";
    case DegeneracyKind::kSharedEndpoint:
      return "shared-endpoint";
    case DegeneracyKind::kCollinearOverlap:
      return "collinear-overlap";
    case DegeneracyKind::kConcurrentCrossing:
      return "concurrent-crossing";
    case DegeneracyKind::kEventCollision:
      return "event-x-collision";
  }
  return "unknown";
}

bool DegeneracyReport::has(DegeneracyKind kind) const {
  return std::any_of(items.begin(), items.end(), [&](const Degeneracy& d) { return d.kind == kind; });
}

bool DegeneracyReport::only_touching() const {
  return std::all_of(items.begin(), items.end(), [](const Degeneracy& d) {
    return d.kind == DegeneracyKind::kEndpointOnSegment || d.kind == DegeneracyKind::kSharedEndpoint;
  });
}

bool DegeneracyReport::fixable() const {
  return std::all_of(items.begin(), items.end(), [](const Degeneracy& d) {
    return d.kind != DegeneracyKind::kCollinearOverlap && d.kind != DegeneracyKind::kConcurrentCrossing;
  });
}

std::string DegeneracyReport::summary() const {
  std::map<std::string_view, int> counts;
  for (const Degeneracy& d : items) ++counts[to_string(d.kind)];
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, count] : counts) {
    out << (first ? "" : ", ") << name << " x" << count;
    first = false;
  }
  return out.str();
}

namespace {

struct EventPoint {
  Point2 at;
  ObjectId a;
  ObjectId b;  // equal to a for endpoints
  bool crossing;
};

bool collinear_overlap_positive(const Segment& s, const Segment& t) {
  const bool use_x = s.p.x != s.q.x;
  auto coord = [&](const Point2& pt) -> const Scalar& { return use_x ? pt.x : pt.y; };
  const Scalar& lo = std::max(std::min(coord(s.p), coord(s.q)), std::min(coord(t.p), coord(t.q)));
  const Scalar& hi = std::min(std::max(coord(s.p), coord(s.q)), std::max(coord(t.p), coord(t.q)));
  return lo < hi;
}

bool strictly_inside(const Point2& p, const Segment& s) {
  return on_segment(p, s.p, s.q) && p != s.p && p != s.q;
}

}  // namespace

DegeneracyReport degeneracy_scan(std::span<const Segment> segments, SegmentMode /*mode*/) {
  DegeneracyReport report;
  const std::size_t n = segments.size();
  const SegmentSet closed(segments, SegmentMode::kClosed);
  std::vector<EventPoint> events;
  events.reserve(2 * n);

  for (const Segment& s : segments) {
    if (s.is_vertical()) report.items.push_back({DegeneracyKind::kVertical, {s.id}, s.left()});
    events.push_back({s.p, s.id, s.id, false});
    events.push_back({s.q, s.id, s.id, false});
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!closed.intersects(i, j)) continue;
      const Segment& s = segments[i];
      const Segment& t = segments[j];
      const int o1 = orientation(s.p, s.q, t.p);
      const int o2 = orientation(s.p, s.q, t.q);
      if (o1 == 0 && o2 == 0) {
        if (collinear_overlap_positive(s, t)) {
          const Point2 at = std::max(s.left(), t.left());
          report.items.push_back({DegeneracyKind::kCollinearOverlap, {s.id, t.id}, at});
        } else {
          const Point2 at = s.right() == t.left() ? s.right() : s.left();
          report.items.push_back({DegeneracyKind::kSharedEndpoint, {s.id, t.id}, at});
        }
        continue;
      }
      bool touching = false;
      for (const Point2* a : {&s.p, &s.q}) {
        for (const Point2* b : {&t.p, &t.q}) {
          if (*a == *b) {
            report.items.push_back({DegeneracyKind::kSharedEndpoint, {s.id, t.id}, *a});
            touching = true;
          }
        }
      }
      for (const Point2* a : {&t.p, &t.q}) {
        if (strictly_inside(*a, s)) {
          report.items.push_back({DegeneracyKind::kEndpointOnSegment, {t.id, s.id}, *a});
          touching = true;
        }
      }
      for (const Point2* a : {&s.p, &s.q}) {
        if (strictly_inside(*a, t)) {
          report.items.push_back({DegeneracyKind::kEndpointOnSegment, {s.id, t.id}, *a});
          touching = true;
        }
      }
      if (touching) continue;
      if (auto at = crossing_point(s, t)) events.push_back({std::move(*at), s.id, t.id, true});
    }
  }

  std::sort(events.begin(), events.end(), [](const EventPoint& l, const EventPoint& r) { return l.at < r.at; });

  // Several crossings at one point.
  for (std::size_t k = 0; k < events.size();) {
    std::size_t e = k;
    while (e < events.size() && events[e].at == events[k].at) ++e;
    std::set<ObjectId> ids;
    std::size_t crossings = 0;
    for (std::size_t m = k; m < e; ++m) {
      if (!events[m].crossing) continue;
      ++crossings;
      ids.insert(events[m].a);
      ids.insert(events[m].b);
    }
    if (crossings >= 2) {
      report.items.push_back({DegeneracyKind::kConcurrentCrossing, {ids.begin(), ids.end()}, events[k].at});
    }
    k = e;
  }

  // Distinct event points on one vertical line. The two ends of a single
  // vertical segment are reported as that segment only.
  for (std::size_t k = 0; k < events.size();) {
    std::size_t e = k;
    while (e < events.size() && events[e].at.x == events[k].at.x) ++e;
    std::set<ObjectId> ids;
    std::size_t distinct = 1;
    for (std::size_t m = k; m < e; ++m) {
      ids.insert(events[m].a);
      ids.insert(events[m].b);
      if (m > k && events[m].at != events[m - 1].at) ++distinct;
    }
    const bool lone_vertical = ids.size() == 1 && distinct == 2;
    if (distinct >= 2 && !lone_vertical) {
      report.items.push_back({DegeneracyKind::kEventCollision, {ids.begin(), ids.end()}, events[k].at});
    }
    k = e;
  }
  return report;
}

namespace {

// Largest 2^-k (k >= 2) with 2^-k < bound, as a rational.
Scalar power_of_two_below(const Scalar& bound) {
  Scalar lambda = Scalar::ratio(1, 4);
  while (!(lambda < bound)) lambda = lambda / Scalar(2);
  return lambda;
}

Segment scaled(const Segment& s, const Scalar& lambda) {
  // lambda > 0 grows, lambda < 0 shrinks, symmetrically about the midpoint.
  const Scalar dx = (s.q.x - s.p.x) * lambda;
  const Scalar dy = (s.q.y - s.p.y) * lambda;
  return Segment{s.id, Point2{s.p.x - dx, s.p.y - dy}, Point2{s.q.x + dx, s.q.y + dy}};
}

}  // namespace

std::vector<Segment> lengthen_segments(std::span<const Segment> segments) {
  // Least positive squared clearance D and largest squared length M. The
  // growth lambda * |s| must stay below sqrt(D) / 2, i.e. 4 lambda^2 M < D.
  std::optional<Scalar> clearance;
  Scalar longest(0);
  for (const Segment& s : segments) longest = std::max(longest, squared_length(s));
  for (const Segment& s : segments) {
    for (const Segment& t : segments) {
      if (&s == &t) continue;
      for (const Point2* e : {&s.p, &s.q}) {
        const Scalar d = squared_distance(*e, t.p, t.q);
        if (d.sign() > 0 && (!clearance || d < *clearance)) clearance = d;
      }
    }
  }
  Scalar lambda = Scalar::ratio(1, 4);
  if (clearance) {
    while (!(Scalar(4) * lambda * lambda * longest < *clearance)) lambda = lambda / Scalar(2);
  }
  std::vector<Segment> out;
  out.reserve(segments.size());
  for (const Segment& s : segments) out.push_back(scaled(s, lambda));
  return out;
}

std::vector<Segment> shrink_segments(std::span<const Segment> segments) {
  // Smallest parameter distance of a proper crossing from a segment end.
  std::optional<Scalar> margin;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      const auto at = crossing_point(segments[i], segments[j]);
      if (!at) continue;
      for (const Segment* s : {&segments[i], &segments[j]}) {
        const bool use_x = s->p.x != s->q.x;
        const Scalar u = use_x ? (at->x - s->p.x) / (s->q.x - s->p.x) : (at->y - s->p.y) / (s->q.y - s->p.y);
        const Scalar m = std::min(u, Scalar(1) - u);
        if (!margin || m < *margin) margin = m;
      }
    }
  }
  const Scalar lambda = margin ? power_of_two_below(*margin / Scalar(2)) : Scalar::ratio(1, 4);
  std::vector<Segment> out;
  out.reserve(segments.size());
  for (const Segment& s : segments) out.push_back(scaled(s, -lambda));
  return out;
}

std::vector<Segment> shear_segments(std::span<const Segment> segments, const Scalar& delta) {
  std::vector<Segment> out;
  out.reserve(segments.size());
  for (const Segment& s : segments) {
    out.push_back(Segment{s.id, Point2{s.p.x + delta * s.p.y, s.p.y}, Point2{s.q.x + delta * s.q.y, s.q.y}});
  }
  return out;
}

std::optional<std::vector<Segment>> general_position_form(std::span<const Segment> segments, SegmentMode mode,
                                                          DegeneracyReport* report, bool* rewritten) {
  DegeneracyReport first = degeneracy_scan(segments, mode);
  if (rewritten) *rewritten = false;
  const bool clean = first.empty();
  const bool fixable = first.fixable();
  const bool touching = first.has(DegeneracyKind::kEndpointOnSegment) || first.has(DegeneracyKind::kSharedEndpoint);
  if (report) *report = std::move(first);
  if (clean) return std::vector<Segment>(segments.begin(), segments.end());
  if (!fixable) return std::nullopt;

  std::vector<Segment> fixed(segments.begin(), segments.end());
  if (touching) {
    fixed = mode == SegmentMode::kClosed ? lengthen_segments(fixed) : shrink_segments(fixed);
    const DegeneracyReport again = degeneracy_scan(fixed, mode);
    if (!again.fixable() || again.has(DegeneracyKind::kEndpointOnSegment) ||
        again.has(DegeneracyKind::kSharedEndpoint)) {
      return std::nullopt;
    }
    if (again.empty()) {
      if (rewritten) *rewritten = true;
      return fixed;
    }
  }
  // Each bad factor makes two event points or a segment's ends share x; there
  // are finitely many, so a short list of candidates nearly always suffices.
  Scalar delta = Scalar::ratio(1, 9);
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<Segment> sheared = shear_segments(fixed, delta);
    if (degeneracy_scan(sheared, mode).empty()) {
      if (rewritten) *rewritten = true;
      return sheared;
    }
    delta = delta * Scalar::ratio(7, 13);
  }
  return std::nullopt;
}

}  // namespace geobip
