#include "geobip/segment_sweep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "geobip/error.hpp"

namespace geobip {

class SegmentSweep::Order final : public SweepOrder {
 public:
  explicit Order(const SegmentSweep& sweep) : sweep_(sweep) {}
  bool above(SegIndex a, SegIndex b) const override { return sweep_.above(a, b); }
  int compare_to(SegIndex s, const Scalar& y) const override { return sweep_.compare_to(s, y); }
  bool intersects(SegIndex a, SegIndex b) const override { return sweep_.intersects(a, b); }

 private:
  const SegmentSweep& sweep_;
};

namespace {

std::string point_text(const Point2& p) { return "(" + p.x.str() + ", " + p.y.str() + ")"; }

}  // namespace

SegmentSweep::SegmentSweep(std::span<const Segment> segments, SegmentMode mode)
    : set_(segments, mode),
      active_(segments.size(), false),
      y_cache_(segments.size()),
      y_stamp_(segments.size(), 0),
      order_(std::make_unique<Order>(*this)),
      forest_(segments.size()),
      trees_(segments.size()),
      bundles_(segments.size()) {
  segs_.reserve(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    if (s.is_vertical()) {
      throw DegenerateInputError("segment " + std::to_string(s.id) + " is vertical");
    }
    const Point2& l = s.left();
    const Point2& r = s.right();
    segs_.push_back({l, r, (r.y - l.y) / (r.x - l.x)});
  }
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    const auto s = static_cast<SegIndex>(i);
    queue_.push({segs_[i].left, EventKind::kLeftEndpoint, s, kNoSegment});
    queue_.push({segs_[i].right, EventKind::kRightEndpoint, s, kNoSegment});
  }
  if (segs_.empty()) finish_bipartite();
}

// ---------------------------------------------------------------------------
// Order at the current abscissa

const Scalar& SegmentSweep::y_now(SegIndex s) const {
  if (y_stamp_[s] != stamp_) {
    const Oriented& o = segs_[s];
    y_cache_[s] = o.left.y + (x0_ - o.left.x) * o.slope;
    y_stamp_[s] = stamp_;
  }
  return y_cache_[s];
}

Scalar SegmentSweep::y_at_x(SegIndex s, const Scalar& x) const {
  const Oriented& o = segs_[s];
  return o.left.y + (x - o.left.x) * o.slope;
}

bool SegmentSweep::above(SegIndex a, SegIndex b) const {
  if (a == b) return false;
  const auto c = y_now(a) <=> y_now(b);
  if (c != 0) return c > 0;
  // Meeting on the sweep line: just to the left, the flatter one is higher.
  const auto slope = segs_[a].slope <=> segs_[b].slope;
  if (slope == 0) {
    throw DegenerateInputError("segments " + std::to_string(set_.id(a)) + " and " + std::to_string(set_.id(b)) +
                               " overlap on the sweep line");
  }
  return slope < 0;
}

int SegmentSweep::compare_to(SegIndex s, const Scalar& y) const {
  const auto c = y_now(s) <=> y;
  if (c == 0) {
    throw DegenerateInputError("an endpoint lies on segment " + std::to_string(set_.id(s)) + " at x = " +
                               x0_.str());
  }
  return c > 0 ? 1 : -1;
}

bool SegmentSweep::intersects(SegIndex a, SegIndex b) const {
  return set_.intersects(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
}

// ---------------------------------------------------------------------------
// Helpers

ParityForest::Node SegmentSweep::component(BundleTree::BundleId b) {
  for (const BoundaryPair& pair : bundles_[b].sets) {
    if (!pair.empty()) return forest_.find(static_cast<ParityForest::Node>(pair.top));
  }
  throw InvariantError("sweep: bundle without boundary segments");
}

bool SegmentSweep::same_component(BundleTree::BundleId a, BundleTree::BundleId b) {
  return component(a) == component(b);
}

ColorTrees::Tree SegmentSweep::tree_of(SegIndex s) {
  const auto node = static_cast<ParityForest::Node>(s);
  return trees_.of_root(forest_.find(node))[forest_.parity_of(node)];
}

void SegmentSweep::drop_events(BundleTree::BundleId b) {
  for (EventQueue::Handle h : bundles_[b].events_below) queue_.remove(h);
  bundles_[b].events_below.clear();
}

void SegmentSweep::touch(BundleTree::BundleId b) {
  if (b == BundleTree::kNone) return;
  dirty_.push_back(b);
  const BundleTree::BundleId up = bundles_.above(b);
  if (up != BundleTree::kNone) dirty_.push_back(up);
}

// Recomputes queued crossings between each dirty bundle and the one below.
void SegmentSweep::refresh() {
  std::sort(dirty_.begin(), dirty_.end());
  dirty_.erase(std::unique(dirty_.begin(), dirty_.end()), dirty_.end());
  // Drop first: after a split, a pair's event may still sit with the part
  // that no longer borders it.
  for (BundleTree::BundleId b : dirty_) {
    if (bundles_.alive(b)) drop_events(b);
  }
  for (BundleTree::BundleId b : dirty_) {
    if (!bundles_.alive(b)) continue;
    const BundleTree::BundleId below = bundles_.below(b);
    if (below == BundleTree::kNone) continue;

    std::vector<SegIndex> upper;
    std::vector<SegIndex> lower;
    for (const BoundaryPair& pair : bundles_[b].sets) {
      if (pair.empty()) continue;
      upper.push_back(pair.top);
      if (pair.bottom != pair.top) upper.push_back(pair.bottom);
    }
    for (const BoundaryPair& pair : bundles_[below].sets) {
      if (pair.empty()) continue;
      lower.push_back(pair.top);
      if (pair.bottom != pair.top) lower.push_back(pair.bottom);
    }
    for (SegIndex u : upper) {
      for (SegIndex l : lower) {
        const auto at = crossing_point(set_.segment(u), set_.segment(l));
        if (!at) continue;
        if (at->x < x0_) {
          throw InvariantError("sweep: missed crossing of " + std::to_string(set_.id(u)) + " and " +
                               std::to_string(set_.id(l)) + " at " + point_text(*at));
        }
        if (at->x == x0_) {
          throw DegenerateInputError("crossing at " + point_text(*at) + " shares its x with another event");
        }
        bundles_[b].events_below.push_back(queue_.push({*at, EventKind::kCrossing, u, l}));
      }
    }
  }
  dirty_.clear();
  stats_.max_bundles = std::max(stats_.max_bundles, bundles_.size());
}

void SegmentSweep::odd_cycle(SegIndex u, SegIndex v) {
  const auto nu = static_cast<ParityForest::Node>(u);
  const auto nv = static_cast<ParityForest::Node>(v);
  if (!forest_.same_tree(nu, nv) || forest_.parity_of(nu) != forest_.parity_of(nv) || !intersects(u, v)) {
    throw InvariantError("sweep: violating pair does not close an odd cycle");
  }
  OddCycle cycle;
  for (ParityForest::Node node : forest_.forest_path(nu, nv)) cycle.cycle.push_back(set_.id(node));
  result_ = Verdict{std::move(cycle), Provenance::kSweep};
}

void SegmentSweep::finish_bipartite() {
  Bipartite b;
  b.coloring.reserve(segs_.size());
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    const int parity = forest_.parity_of(static_cast<ParityForest::Node>(i));
    b.coloring.emplace_back(set_.id(i), parity == 0 ? Color::kRed : Color::kBlue);
  }
  result_ = Verdict{std::move(b), Provenance::kSweep};
}

// ---------------------------------------------------------------------------
// Events

bool SegmentSweep::step() {
  if (result_) return false;
  if (queue_.empty()) {
    finish_bipartite();
    return false;
  }
  const Event e = queue_.peek();
  if (started_ && e.at.x == x0_) {
    throw DegenerateInputError("two events share x = " + x0_.str() + " (at " + point_text(e.at) + ")");
  }
  x0_ = e.at.x;
  started_ = true;
  ++stamp_;

  ++stats_.events;
  if (stats_.events > 3 * segs_.size() - 1) throw InvariantError("sweep: more than 3n-1 events");

  switch (e.kind) {
    case EventKind::kLeftEndpoint:
      queue_.pop_min();
      ++stats_.left;
      on_left(e.a);
      break;
    case EventKind::kRightEndpoint:
      queue_.pop_min();
      ++stats_.right;
      on_right(e.a);
      break;
    case EventKind::kCrossing:
      ++stats_.crossings;
      on_crossing(e);
      break;
  }
  if (result_) return false;
  refresh();
  return true;
}

const Verdict& SegmentSweep::run() {
  while (step()) {
  }
  return *result_;
}

void SegmentSweep::on_left(SegIndex s) {
  active_[s] = true;
  const Scalar& y0 = segs_[s].left.y;
  const Boundaries single{BoundaryPair{s, s}, BoundaryPair{}};
  const BundleTree::Location loc = bundles_.locate(y0, *order_);

  BundleTree::BundleId fresh;
  if (loc.inside != BundleTree::kNone) {
    const BundleTree::BundleId b = loc.inside;
    Boundaries upper{};
    Boundaries lower{};
    for (int c = 0; c < 2; ++c) {
      const BoundaryPair pair = bundles_[b].sets[c];
      if (pair.empty()) continue;
      if (compare_to(pair.top, y0) < 0) {
        lower[c] = pair;
      } else if (compare_to(pair.bottom, y0) > 0) {
        upper[c] = pair;
      } else {
        const SegIndex succ = trees_.first_below(tree_of(pair.top), y0, *order_);
        upper[c] = {pair.top, trees_.prev(succ)};
        lower[c] = {succ, pair.bottom};
      }
    }
    const auto [top_part, bottom_part] = bundles_.split(b, upper, lower);
    fresh = bundles_.insert_between(top_part, bottom_part, single);
    touch(top_part);
    touch(bottom_part);
  } else {
    fresh = bundles_.insert_between(loc.above, loc.below, single);
  }
  touch(fresh);
  trees_.create(s, forest_);
}

void SegmentSweep::on_right(SegIndex s) {
  const BundleTree::BundleId b = bundles_.bundle_of(s);
  if (b != BundleTree::kNone) {
    Boundaries sets = bundles_[b].sets;
    const bool alone = (sets[0] == BoundaryPair{s, s} && sets[1].empty()) ||
                       (sets[1] == BoundaryPair{s, s} && sets[0].empty());
    if (alone) {
      const BundleTree::BundleId up = bundles_.above(b);
      const BundleTree::BundleId down = bundles_.below(b);
      drop_events(b);
      bundles_.remove(b);
      if (up != BundleTree::kNone && down != BundleTree::kNone && same_component(up, down)) {
        drop_events(down);
        auto color = [this](SegIndex v) { return forest_.parity_of(static_cast<ParityForest::Node>(v)); };
        bundles_.merge(up, down, color);
      }
      touch(up);
    } else {
      for (BoundaryPair& pair : sets) {
        if (pair.empty()) continue;
        if (pair.top == s && pair.bottom == s) {
          pair = BoundaryPair{};
        } else if (pair.top == s) {
          pair.top = trees_.next(s);
        } else if (pair.bottom == s) {
          pair.bottom = trees_.prev(s);
        }
      }
      bundles_.set_boundaries(b, sets);
      touch(b);
    }
  }

  const auto violation = trees_.remove(s, forest_, *order_);
  active_[s] = false;
  if (violation) odd_cycle(violation->first, violation->second);
}

void SegmentSweep::on_crossing(const Event& e) {
  const BundleTree::BundleId upper = bundles_.bundle_of(e.a);
  const BundleTree::BundleId lower = bundles_.bundle_of(e.b);
  if (upper == BundleTree::kNone || lower == BundleTree::kNone || bundles_.below(upper) != lower) {
    throw InvariantError("sweep: crossing event between non-adjacent bundles");
  }
  const auto& pending = bundles_[upper].events_below;
  const bool owned = std::any_of(pending.begin(), pending.end(),
                                 [&](EventQueue::Handle h) { return &*h == &queue_.peek(); });
  if (!owned) throw InvariantError("sweep: crossing event not owned by its bundle");
  drop_events(upper);  // includes the event being processed
  drop_events(lower);

  const auto [s, t] = std::minmax(e.a, e.b);
  const ColorTrees::MergeResult merged = trees_.merge(forest_, s, t, *order_);
  if (merged.violation) {
    odd_cycle(merged.violation->first, merged.violation->second);
    return;
  }

  auto color = [this](SegIndex v) { return forest_.parity_of(static_cast<ParityForest::Node>(v)); };
  BundleTree::BundleId m = bundles_.merge(upper, lower, color);
  // At most one more adjacent pair now shares a component.
  for (BundleTree::BundleId up = bundles_.above(m); up != BundleTree::kNone && same_component(up, m);
       up = bundles_.above(m)) {
    drop_events(up);
    m = bundles_.merge(up, m, color);
  }
  for (BundleTree::BundleId down = bundles_.below(m); down != BundleTree::kNone && same_component(m, down);
       down = bundles_.below(m)) {
    drop_events(down);
    m = bundles_.merge(m, down, color);
  }
  touch(m);
}

// ---------------------------------------------------------------------------
// Inspection

std::vector<Boundaries> SegmentSweep::bundles() const {
  std::vector<Boundaries> out;
  for (BundleTree::BundleId b : bundles_.in_order()) out.push_back(bundles_[b].sets);
  return out;
}

std::vector<std::vector<ObjectId>> SegmentSweep::components() {
  if (!result_ || !result_->is_bipartite()) {
    throw std::logic_error("components are only defined after a bipartite verdict");
  }
  std::map<ParityForest::Node, std::vector<ObjectId>> groups;
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    groups[forest_.find(static_cast<ParityForest::Node>(i))].push_back(set_.id(i));
  }
  std::vector<std::vector<ObjectId>> out;
  for (auto& [root, ids] : groups) {
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<ObjectId, ObjectId>> SegmentSweep::forest_edges() const {
  std::vector<std::pair<ObjectId, ObjectId>> out;
  for (const auto& [a, b] : forest_.edges()) out.emplace_back(set_.id(a), set_.id(b));
  return out;
}

ValidationResult SegmentSweep::check_invariants(bool color_order) {
  auto fail = [](std::string m) { return ValidationResult{false, std::move(m)}; };
  if (stats_.events > 3 * segs_.size()) return fail("event count above 3n-1");

  std::vector<SegIndex> live;
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    if (active_[i]) live.push_back(static_cast<SegIndex>(i));
  }
  const std::vector<BundleTree::BundleId> order = bundles_.in_order();
  if (live.empty()) {
    if (!order.empty()) return fail("bundles remain on an empty sweep line");
    return {};
  }
  if (queue_.empty()) return fail("live segments but no pending right endpoint");

  // Strictly between the current event and the next one, nothing ties.
  const Scalar probe = (x0_ + queue_.peek().at.x) / Scalar(2);
  std::vector<std::pair<Scalar, SegIndex>> line;
  for (SegIndex s : live) line.emplace_back(y_at_x(s, probe), s);
  std::sort(line.begin(), line.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 1; i < line.size(); ++i) {
    if (line[i - 1].first == line[i].first) return fail("two live segments meet between events");
  }

  // Maximal same-component runs.
  std::vector<std::vector<SegIndex>> runs;
  ParityForest::Node last = ~ParityForest::Node{0};
  for (const auto& [y, s] : line) {
    const ParityForest::Node root = forest_.find(static_cast<ParityForest::Node>(s));
    if (runs.empty() || root != last) runs.emplace_back();
    runs.back().push_back(s);
    last = root;
  }
  if (runs.size() != order.size()) {
    return fail("bundle count " + std::to_string(order.size()) + " differs from run count " +
                std::to_string(runs.size()));
  }

  auto parity = [this](SegIndex s) { return forest_.parity_of(static_cast<ParityForest::Node>(s)); };
  for (std::size_t k = 0; k < runs.size(); ++k) {
    std::array<BoundaryPair, 2> expected{};
    for (SegIndex s : runs[k]) {
      BoundaryPair& pair = expected[parity(s)];
      if (pair.empty()) pair.top = s;
      pair.bottom = s;
    }
    std::array<BoundaryPair, 2> actual{};
    int present = 0;
    for (const BoundaryPair& pair : bundles_[order[k]].sets) {
      if (pair.empty()) continue;
      ++present;
      if (pair.bottom == kNoSegment || parity(pair.top) != parity(pair.bottom)) {
        return fail("bundle " + std::to_string(k) + " has a mixed-color boundary pair");
      }
      if (!actual[parity(pair.top)].empty()) return fail("bundle " + std::to_string(k) + " repeats a color");
      actual[parity(pair.top)] = pair;
    }
    if (present == 0) return fail("bundle " + std::to_string(k) + " is empty");
    if (actual != expected) return fail("bundle " + std::to_string(k) + " has wrong boundary segments");
    for (const BoundaryPair& pair : actual) {
      if (pair.empty()) continue;
      if (bundles_.bundle_of(pair.top) != order[k] || bundles_.bundle_of(pair.bottom) != order[k]) {
        return fail("boundary index out of date for bundle " + std::to_string(k));
      }
    }
  }

  // Color trees hold exactly the live members of each color class.
  std::map<std::pair<ParityForest::Node, int>, std::vector<SegIndex>> classes;
  for (const auto& [y, s] : line) {
    classes[{forest_.find(static_cast<ParityForest::Node>(s)), parity(s)}].push_back(s);
  }
  std::set<ParityForest::Node> roots;
  for (const auto& [key, members] : classes) roots.insert(key.first);
  for (ParityForest::Node root : roots) {
    for (int p = 0; p < 2; ++p) {
      std::vector<SegIndex> stored = trees_.sequence(trees_.of_root(root)[p]);
      const auto it = classes.find({root, p});
      std::vector<SegIndex> wanted = it == classes.end() ? std::vector<SegIndex>{} : it->second;
      for (std::size_t i = 1; i < stored.size(); ++i) {
        if (intersects(stored[i - 1], stored[i])) return fail("adjacent color tree members cross");
      }
      if (!color_order) {
        std::sort(stored.begin(), stored.end());
        std::sort(wanted.begin(), wanted.end());
      }
      if (stored != wanted) return fail("color tree differs from its color class");
    }
  }

  // Queue: crossings right of the sweep line between boundaries of adjacent
  // bundles, and nothing else.
  std::set<std::pair<SegIndex, SegIndex>> expected_events;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    for (const BoundaryPair& up : bundles_[order[k]].sets) {
      for (const BoundaryPair& down : bundles_[order[k + 1]].sets) {
        if (up.empty() || down.empty()) continue;
        for (SegIndex u : {up.top, up.bottom}) {
          for (SegIndex l : {down.top, down.bottom}) {
            const auto at = crossing_point(set_.segment(u), set_.segment(l));
            if (at && at->x > x0_) expected_events.insert({u, l});
          }
        }
      }
    }
  }
  std::set<std::pair<SegIndex, SegIndex>> queued;
  for (const Event& e : queue_.crossings()) queued.insert({e.a, e.b});
  if (queued != expected_events) return fail("queued crossing events differ from adjacent boundary crossings");
  return {};
}

Verdict sweep_bipartiteness(std::span<const Segment> segments, SegmentMode mode) {
  SegmentSweep sweep(segments, mode);
  return sweep.run();
}

}  // namespace geobip
