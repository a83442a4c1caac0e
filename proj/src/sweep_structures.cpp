#include "geobip/sweep_structures.hpp"

#include <stdexcept>

#include "geobip/error.hpp"

namespace geobip {

// ---------------------------------------------------------------------------
// EventQueue

EventQueue::Handle EventQueue::push(Event e) {
  auto [it, inserted] = events_.insert(std::move(e));
  if (!inserted) throw DegenerateInputError("two sweep events share the point (" + it->at.x.str() + ", " +
                                            it->at.y.str() + ")");
  return it;
}

Event EventQueue::pop_min() {
  if (events_.empty()) throw std::out_of_range("event queue is empty");
  Event e = *events_.begin();
  events_.erase(events_.begin());
  return e;
}

std::vector<Event> EventQueue::crossings() const {
  std::vector<Event> out;
  for (const Event& e : events_) {
    if (e.kind == EventKind::kCrossing) out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// BundleTree

BundleTree::BundleTree(std::size_t segments) : owner_(segments, kNone) {}

BundleTree::BundleId BundleTree::make(const Boundaries& sets) {
  const BundleId b = forest_.allocate();
  if (static_cast<std::size_t>(b) >= bundles_.size()) {
    bundles_.resize(b + 1);
    alive_.resize(b + 1, false);
  }
  bundles_[b] = Bundle{};
  bundles_[b].sets = sets;
  alive_[b] = true;
  claim(b);
  return b;
}

void BundleTree::claim(BundleId b) {
  for (const BoundaryPair& pair : bundles_[b].sets) {
    if (pair.empty()) continue;
    owner_[pair.top] = b;
    owner_[pair.bottom] = b;
  }
}

void BundleTree::release_boundaries(BundleId b) {
  for (const BoundaryPair& pair : bundles_[b].sets) {
    if (pair.empty()) continue;
    if (owner_[pair.top] == b) owner_[pair.top] = kNone;
    if (owner_[pair.bottom] == b) owner_[pair.bottom] = kNone;
  }
}

BundleTree::BundleId BundleTree::insert_between(BundleId upper, BundleId lower, const Boundaries& sets) {
  const BundleId expected = upper == kNone ? top() : below(upper);
  if (expected != lower) throw std::logic_error("bundle tree: insert between non-adjacent bundles");
  const BundleId b = make(sets);
  const std::size_t k = upper == kNone ? 0 : forest_.rank(upper) + 1;
  auto [head, tail] = forest_.split(root_, k);
  root_ = forest_.concat(forest_.concat(head, b), tail);
  return b;
}

void BundleTree::remove(BundleId b) {
  if (!alive(b)) throw std::logic_error("bundle tree: removing a dead bundle");
  release_boundaries(b);
  root_ = forest_.erase(b);
  alive_[b] = false;
  bundles_[b] = Bundle{};
  forest_.release(b);
}

std::pair<BundleTree::BundleId, BundleTree::BundleId> BundleTree::split(BundleId b, const Boundaries& upper,
                                                                         const Boundaries& lower) {
  const BundleId successor = below(b);
  set_boundaries(b, upper);
  const BundleId c = insert_between(b, successor, lower);
  return {b, c};
}

BundleTree::BundleId BundleTree::merge(BundleId upper, BundleId lower,
                                       const std::function<int(SegIndex)>& color_of) {
  if (!alive(upper) || !alive(lower) || below(upper) != lower) {
    throw std::logic_error("bundle tree: merging non-adjacent bundles");
  }
  std::array<BoundaryPair, 2> up{};
  std::array<BoundaryPair, 2> down{};
  for (const BoundaryPair& pair : bundles_[upper].sets) {
    if (!pair.empty()) up[color_of(pair.top)] = pair;
  }
  for (const BoundaryPair& pair : bundles_[lower].sets) {
    if (!pair.empty()) down[color_of(pair.top)] = pair;
  }
  Boundaries combined;
  for (int c = 0; c < 2; ++c) {
    combined[c].top = !up[c].empty() ? up[c].top : down[c].top;
    combined[c].bottom = !down[c].empty() ? down[c].bottom : up[c].bottom;
  }
  remove(lower);
  set_boundaries(upper, combined);
  return upper;
}

void BundleTree::set_boundaries(BundleId b, const Boundaries& sets) {
  release_boundaries(b);
  bundles_[b].sets = sets;
  claim(b);
}

BundleTree::Location BundleTree::locate(const Scalar& y, const SweepOrder& order) const {
  const auto d = forest_.descend(root_, [&](BundleId b) {
    bool below_every_top = true;
    bool above_every_bottom = true;
    for (const BoundaryPair& pair : bundles_[b].sets) {
      if (pair.empty()) continue;
      if (order.compare_to(pair.top, y) > 0) below_every_top = false;
      if (order.compare_to(pair.bottom, y) < 0) above_every_bottom = false;
    }
    if (below_every_top) return -1;  // y is above the whole bundle
    if (above_every_bottom) return 1;
    return 0;
  });
  return {d.match, d.before, d.after};
}

// ---------------------------------------------------------------------------
// ColorTrees

ColorTrees::ColorTrees(std::size_t segments) : trees_(segments, {kEmpty, kEmpty}) {
  forest_.reserve_nodes(segments);
}

ColorTrees::Tree ColorTrees::create(SegIndex s, ParityForest& forest) {
  const ParityForest::Node root = forest.find(static_cast<ParityForest::Node>(s));
  if (trees_[root][0] != kEmpty || trees_[root][1] != kEmpty) {
    throw std::logic_error("color trees: segment does not form its own component");
  }
  trees_[root][forest.parity_of(static_cast<ParityForest::Node>(s))] = s;
  return s;
}

std::optional<ColorTrees::Pair> ColorTrees::remove(SegIndex s, ParityForest& forest, const SweepOrder& order) {
  const auto node = static_cast<ParityForest::Node>(s);
  const ParityForest::Node root = forest.find(node);
  const int parity = forest.parity_of(node);
  if (forest_.root_of(s) != trees_[root][parity]) throw std::logic_error("color trees: segment not in its tree");

  const SegIndex up = forest_.prev(s);
  const SegIndex down = forest_.next(s);
  if (up != kNoSegment && down != kNoSegment && order.intersects(up, down)) return Pair{up, down};
  trees_[root][parity] = forest_.erase(s);
  return std::nullopt;
}

SegIndex ColorTrees::first_below(Tree t, const Scalar& y, const SweepOrder& order) const {
  return forest_.lower_bound(t, [&](SegIndex v) { return order.compare_to(v, y) < 0; });
}

ColorTrees::MergeResult ColorTrees::merge(ParityForest& forest, SegIndex s, SegIndex t, const SweepOrder& order) {
  const auto ns = static_cast<ParityForest::Node>(s);
  const auto nt = static_cast<ParityForest::Node>(t);
  const ParityForest::Node rs = forest.find(ns);
  const ParityForest::Node rt = forest.find(nt);
  if (rs == rt) throw std::logic_error("color trees: merging a component with itself");

  using Trees = std::array<Tree, 2>;
  const Trees one = trees_[rs];
  const Trees two = trees_[rt];
  trees_[rs] = {kEmpty, kEmpty};
  trees_[rt] = {kEmpty, kEmpty};
  forest.link(ns, nt);
  const ParityForest::Node root = forest.find(ns);

  auto extreme = [&](const Trees& trees, bool top) {
    SegIndex best = kNoSegment;
    for (Tree tree : trees) {
      if (tree == kEmpty) continue;
      const SegIndex cand = top ? forest_.first(tree) : forest_.last(tree);
      if (best == kNoSegment || (top ? order.above(cand, best) : order.above(best, cand))) best = cand;
    }
    return best;
  };
  const SegIndex top1 = extreme(one, true);
  const SegIndex bottom1 = extreme(one, false);
  const SegIndex top2 = extreme(two, true);
  const SegIndex bottom2 = extreme(two, false);

  // Runs of the restricted crossing sequence, top to bottom.
  std::vector<Trees> runs;
  if (order.above(bottom1, top2)) {
    runs = {one, two};
  } else if (order.above(bottom2, top1)) {
    runs = {two, one};
  } else {
    const bool one_outer = order.above(top1, top2);
    const Trees& outer = one_outer ? one : two;
    const Trees& inner = one_outer ? two : one;
    const SegIndex inner_top = one_outer ? top2 : top1;
    const SegIndex inner_bottom = one_outer ? bottom2 : bottom1;
    const SegIndex outer_bottom = one_outer ? bottom1 : bottom2;
    if (!order.above(inner_bottom, outer_bottom)) {
      throw InvariantError("color trees: components interleave in more than three runs");
    }
    Trees upper{kEmpty, kEmpty};
    Trees lower{kEmpty, kEmpty};
    for (int c = 0; c < 2; ++c) {
      if (outer[c] == kEmpty) continue;
      const SegIndex cut = forest_.lower_bound(outer[c], [&](SegIndex v) { return order.above(inner_top, v); });
      if (cut == kNoSegment) {
        upper[c] = outer[c];
      } else {
        std::tie(upper[c], lower[c]) = forest_.split_before(cut);
      }
    }
    runs = {upper, inner, lower};
  }

  MergeResult result;
  Trees merged{kEmpty, kEmpty};
  for (const Trees& run : runs) {
    for (Tree piece : run) {
      if (piece == kEmpty) continue;
      const SegIndex head = forest_.first(piece);
      const SegIndex tail = forest_.last(piece);
      result.touched.push_back(head);
      if (tail != head) result.touched.push_back(tail);
      const int color = forest.parity_of(static_cast<ParityForest::Node>(head));
      if (merged[color] != kEmpty) {
        const SegIndex joint = forest_.last(merged[color]);
        if (!result.violation && order.intersects(joint, head)) result.violation = Pair{joint, head};
      }
      merged[color] = forest_.concat(merged[color], piece);
    }
  }
  trees_[root] = merged;
  return result;
}

}  // namespace geobip
