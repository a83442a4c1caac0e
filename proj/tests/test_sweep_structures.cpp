#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "geobip/error.hpp"
#include "geobip/sweep_structures.hpp"

using namespace geobip;

namespace {

// Sweep-line order given directly by a height per segment.
class FixedOrder final : public SweepOrder {
 public:
  explicit FixedOrder(std::vector<Scalar> y) : y_(std::move(y)) {}
  bool above(SegIndex a, SegIndex b) const override { return y_[a] > y_[b]; }
  int compare_to(SegIndex s, const Scalar& y) const override { return (y_[s] - y).sign(); }
  bool intersects(SegIndex a, SegIndex b) const override { return crossing_.count({std::min(a, b), std::max(a, b)}) > 0; }
  void cross(SegIndex a, SegIndex b) { crossing_.insert({std::min(a, b), std::max(a, b)}); }

 private:
  std::vector<Scalar> y_;
  std::set<std::pair<SegIndex, SegIndex>> crossing_;
};

std::vector<Scalar> heights(std::initializer_list<int> ys) { return {ys.begin(), ys.end()}; }

}  // namespace

// ---------------------------------------------------------------------------
// SequenceForest

TEST(SequenceForest, RandomScriptMatchesVectors) {
  std::mt19937_64 rng(77);
  constexpr int kNodes = 300;
  SequenceForest f;
  f.reserve_nodes(kNodes);
  // Oracle: each node's sequence as a vector; a node maps to its sequence.
  std::vector<std::vector<SequenceForest::Handle>> seqs;
  for (int v = 0; v < kNodes; ++v) seqs.push_back({v});
  auto find_seq = [&](SequenceForest::Handle v) {
    for (std::size_t k = 0; k < seqs.size(); ++k) {
      if (std::find(seqs[k].begin(), seqs[k].end(), v) != seqs[k].end()) return k;
    }
    return seqs.size();
  };
  for (int step = 0; step < 3000; ++step) {
    const int op = static_cast<int>(rng() % 3);
    if (op == 0 && seqs.size() > 1) {
      const std::size_t a = rng() % seqs.size();
      std::size_t b = rng() % seqs.size();
      if (a == b) continue;
      const auto root = f.concat(f.root_of(seqs[a].front()), f.root_of(seqs[b].front()));
      seqs[a].insert(seqs[a].end(), seqs[b].begin(), seqs[b].end());
      seqs.erase(seqs.begin() + static_cast<long>(b));
      ASSERT_EQ(f.to_vector(root), seqs[a < b ? a : a - 1]);
    } else if (op == 1) {
      const std::size_t a = rng() % seqs.size();
      if (seqs[a].size() < 2) continue;
      const std::size_t k = 1 + rng() % (seqs[a].size() - 1);
      auto [left, right] = f.split(f.root_of(seqs[a].front()), k);
      std::vector<SequenceForest::Handle> tail(seqs[a].begin() + static_cast<long>(k), seqs[a].end());
      seqs[a].resize(k);
      ASSERT_EQ(f.to_vector(left), seqs[a]);
      ASSERT_EQ(f.to_vector(right), tail);
      seqs.push_back(std::move(tail));
    } else {
      const SequenceForest::Handle v = static_cast<SequenceForest::Handle>(rng() % kNodes);
      const std::size_t a = find_seq(v);
      auto& s = seqs[a];
      const std::size_t pos = static_cast<std::size_t>(std::find(s.begin(), s.end(), v) - s.begin());
      ASSERT_EQ(f.rank(v), pos);
      ASSERT_EQ(f.at(f.root_of(v), pos), v);
      ASSERT_EQ(f.prev(v), pos == 0 ? SequenceForest::kNil : s[pos - 1]);
      ASSERT_EQ(f.next(v), pos + 1 == s.size() ? SequenceForest::kNil : s[pos + 1]);
      ASSERT_EQ(f.first(f.root_of(v)), s.front());
      ASSERT_EQ(f.last(f.root_of(v)), s.back());
      if (s.size() > 1 && rng() % 2) {
        const auto root = f.erase(v);
        s.erase(s.begin() + static_cast<long>(pos));
        ASSERT_EQ(f.to_vector(root), s);
        seqs.push_back({v});
      }
    }
  }
}

TEST(SequenceForest, LowerBoundAndDescend) {
  SequenceForest f;
  f.reserve_nodes(10);
  SequenceForest::Handle root = SequenceForest::kNil;
  for (int v = 0; v < 10; ++v) root = f.concat(root, v);
  EXPECT_EQ(f.lower_bound(root, [](int v) { return v >= 4; }), 4);
  EXPECT_EQ(f.lower_bound(root, [](int) { return false; }), SequenceForest::kNil);
  auto d = f.descend(root, [](int v) { return v == 6 ? 0 : (6 < v ? -1 : 1); });
  EXPECT_EQ(d.match, 6);
  // Searching for 6.5: falls between 6 and 7.
  d = f.descend(root, [](int v) { return 6.5 < v ? -1 : 1; });
  EXPECT_EQ(d.match, SequenceForest::kNil);
  EXPECT_EQ(d.before, 6);
  EXPECT_EQ(d.after, 7);
}

// ---------------------------------------------------------------------------
// EventQueue

TEST(EventQueue, PopsInLexicographicOrder) {
  EventQueue q;
  q.push({{2, 1}, EventKind::kLeftEndpoint, 0});
  q.push({{1, 3}, EventKind::kLeftEndpoint, 1});
  q.push({{1, 2}, EventKind::kLeftEndpoint, 2});
  EXPECT_EQ(q.pop_min().at, (Point2{1, 2}));
  EXPECT_EQ(q.pop_min().at, (Point2{1, 3}));
  EXPECT_EQ(q.pop_min().at, (Point2{2, 1}));
  EXPECT_THROW(q.pop_min(), std::out_of_range);
}

TEST(EventQueue, RemoveAndDuplicates) {
  EventQueue q;
  q.push({{5, 0}, EventKind::kRightEndpoint, 0});
  const auto h = q.push({{3, 1}, EventKind::kCrossing, 1, 2});
  EXPECT_EQ(q.crossings().size(), 1u);
  q.remove(h);
  EXPECT_TRUE(q.crossings().empty());
  EXPECT_EQ(q.pop_min().at, (Point2{5, 0}));
  q.push({{1, 1}, EventKind::kLeftEndpoint, 3});
  EXPECT_THROW(q.push({{1, 1}, EventKind::kCrossing, 4, 5}), DegenerateInputError);
}

TEST(EventQueue, RandomScriptMatchesSortedList) {
  std::mt19937_64 rng(1000);
  EventQueue q;
  std::vector<std::pair<Point2, EventQueue::Handle>> live;
  std::vector<Point2> popped, expected;
  std::set<Point2> used;
  for (int step = 0; step < 1000; ++step) {
    const int op = static_cast<int>(rng() % 4);
    if (op <= 1) {
      Point2 p{Scalar::ratio(static_cast<long>(rng() % 500), 7), Scalar(static_cast<long>(rng() % 500))};
      if (!used.insert(p).second) continue;
      live.push_back({p, q.push({p, EventKind::kCrossing, 0, 1})});
    } else if (op == 2 && !live.empty()) {
      const std::size_t k = rng() % live.size();
      q.remove(live[k].second);
      live.erase(live.begin() + static_cast<long>(k));
    } else if (!live.empty()) {
      auto it = std::min_element(live.begin(), live.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      expected.push_back(it->first);
      live.erase(it);
      popped.push_back(q.pop_min().at);
    }
    ASSERT_EQ(q.size(), live.size());
  }
  EXPECT_EQ(popped, expected);
}

// ---------------------------------------------------------------------------
// BundleTree

namespace {

// Each bundle gets fresh segments; slot 0 and slot 1 carry opposite colors,
// and the slot of a color is shuffled per bundle.
struct BundleScript {
  std::mt19937_64& rng;
  std::vector<int> color;
  SegIndex next = 0;

  Boundaries fresh() {
    Boundaries b;
    const int first = static_cast<int>(rng() % 2);
    const int pairs = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < pairs; ++k) {
      b[k] = {next, next + 1};
      color[next] = color[next + 1] = (first + k) % 2;
      next += 2;
    }
    return b;
  }
};

Boundaries combine(const Boundaries& up, const Boundaries& down, const std::vector<int>& color) {
  std::array<BoundaryPair, 2> u{}, d{};
  for (const auto& p : up) if (!p.empty()) u[color[p.top]] = p;
  for (const auto& p : down) if (!p.empty()) d[color[p.top]] = p;
  Boundaries out;
  for (int c = 0; c < 2; ++c) {
    out[c].top = !u[c].empty() ? u[c].top : d[c].top;
    out[c].bottom = !d[c].empty() ? d[c].bottom : u[c].bottom;
  }
  return out;
}

}  // namespace

TEST(BundleTree, SplitThenMergeRestoresExtent) {
  BundleTree t(8);
  const Boundaries whole{{BoundaryPair{0, 3}, BoundaryPair{1, 2}}};
  const auto b = t.insert_between(BundleTree::kNone, BundleTree::kNone, whole);
  std::vector<int> color{0, 1, 1, 0};
  auto [up, down] = t.split(b, {{BoundaryPair{0, 0}, BoundaryPair{1, 1}}}, {{BoundaryPair{3, 3}, BoundaryPair{2, 2}}});
  EXPECT_EQ(t.in_order(), (std::vector<BundleTree::BundleId>{up, down}));
  const auto merged = t.merge(up, down, [&](SegIndex s) { return color[s]; });
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(t[merged].sets[0], (BoundaryPair{0, 3}));
  EXPECT_EQ(t[merged].sets[1], (BoundaryPair{1, 2}));
  EXPECT_EQ(t.bundle_of(3), merged);
}

TEST(BundleTree, RejectsNonAdjacent) {
  BundleTree t(6);
  const auto a = t.insert_between(BundleTree::kNone, BundleTree::kNone, {{BoundaryPair{0, 0}, {}}});
  const auto b = t.insert_between(a, BundleTree::kNone, {{BoundaryPair{1, 1}, {}}});
  const auto c = t.insert_between(b, BundleTree::kNone, {{BoundaryPair{2, 2}, {}}});
  EXPECT_THROW(t.merge(a, c, [](SegIndex) { return 0; }), std::logic_error);
  EXPECT_THROW(t.insert_between(a, c, {{BoundaryPair{3, 3}, {}}}), std::logic_error);
}

TEST(BundleTree, RandomScriptMatchesListOracle) {
  std::mt19937_64 rng(42);
  constexpr std::size_t kSegs = 4000;
  BundleTree t(kSegs);
  BundleScript script{rng, std::vector<int>(kSegs, 0)};
  std::vector<std::pair<BundleTree::BundleId, Boundaries>> oracle;
  auto color_of = [&](SegIndex s) { return script.color[s]; };
  for (int step = 0; step < 400 && script.next + 8 < static_cast<SegIndex>(kSegs); ++step) {
    const int op = static_cast<int>(rng() % 5);
    if (op == 0 || oracle.size() < 2) {
      const std::size_t k = rng() % (oracle.size() + 1);
      const auto upper = k == 0 ? BundleTree::kNone : oracle[k - 1].first;
      const auto lower = k == oracle.size() ? BundleTree::kNone : oracle[k].first;
      const Boundaries sets = script.fresh();
      oracle.insert(oracle.begin() + static_cast<long>(k), {t.insert_between(upper, lower, sets), sets});
    } else if (op == 1) {
      const std::size_t k = rng() % oracle.size();
      t.remove(oracle[k].first);
      oracle.erase(oracle.begin() + static_cast<long>(k));
    } else if (op == 2) {
      const std::size_t k = rng() % oracle.size();
      const Boundaries up = script.fresh(), down = script.fresh();
      const auto [a, b] = t.split(oracle[k].first, up, down);
      ASSERT_EQ(a, oracle[k].first);
      oracle[k].second = up;
      oracle.insert(oracle.begin() + static_cast<long>(k) + 1, {b, down});
    } else if (op == 3) {
      const std::size_t k = rng() % (oracle.size() - 1);
      const Boundaries sets = combine(oracle[k].second, oracle[k + 1].second, script.color);
      ASSERT_EQ(t.merge(oracle[k].first, oracle[k + 1].first, color_of), oracle[k].first);
      oracle[k].second = sets;
      oracle.erase(oracle.begin() + static_cast<long>(k) + 1);
    } else {
      const std::size_t k = rng() % oracle.size();
      const Boundaries sets = script.fresh();
      t.set_boundaries(oracle[k].first, sets);
      oracle[k].second = sets;
    }
    std::vector<BundleTree::BundleId> ids;
    std::map<SegIndex, BundleTree::BundleId> owner;
    for (const auto& [id, sets] : oracle) {
      ids.push_back(id);
      ASSERT_TRUE(t.alive(id));
      ASSERT_EQ(t[id].sets, sets);
      for (const auto& p : sets) {
        if (p.empty()) continue;
        owner[p.top] = id;
        owner[p.bottom] = id;
      }
    }
    ASSERT_EQ(t.in_order(), ids);
    for (SegIndex s = 0; s < script.next; ++s) {
      const auto it = owner.find(s);
      ASSERT_EQ(t.bundle_of(s), it == owner.end() ? BundleTree::kNone : it->second) << "segment " << s;
    }
  }
}

TEST(BundleTree, LocateMatchesLinearScan) {
  std::mt19937_64 rng(50);
  // 50 bundles, each spanning the height interval between two segments.
  std::vector<Scalar> y(100);
  for (int k = 0; k < 100; ++k) y[k] = Scalar(1000 - 10 * k);
  const FixedOrder order(y);
  BundleTree t(100);
  EXPECT_EQ(t.locate(Scalar(3), order).inside, BundleTree::kNone);
  std::vector<BundleTree::BundleId> ids;
  auto upper = BundleTree::kNone;
  for (SegIndex k = 0; k < 50; ++k) {
    const bool two = k % 3 != 0;
    Boundaries sets{{BoundaryPair{2 * k, 2 * k + 1}, {}}};
    if (!two) sets[0] = {2 * k, 2 * k};  // single segment bundle
    upper = t.insert_between(upper, BundleTree::kNone, sets);
    ids.push_back(upper);
  }
  for (int q = 0; q < 100; ++q) {
    const Scalar probe = Scalar::ratio(static_cast<long>(rng() % 21000) - 500, 20) + Scalar::ratio(1, 7);
    BundleTree::Location want;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      const auto& p = t[ids[k]].sets[0];
      if (y[p.top] > probe && probe > y[p.bottom]) want.inside = ids[k];
      if (y[p.bottom] > probe) want.above = ids[k];
      if (y[p.top] < probe && want.below == BundleTree::kNone) want.below = ids[k];
    }
    const auto got = t.locate(probe, order);
    ASSERT_EQ(got.inside, want.inside);
    if (want.inside == BundleTree::kNone) {
      ASSERT_EQ(got.above, want.above);
      ASSERT_EQ(got.below, want.below);
    }
  }
}

// ---------------------------------------------------------------------------
// ColorTrees

TEST(ColorTrees, CreateAndRemoveSingleton) {
  ParityForest forest(1);
  ColorTrees trees(1);
  const FixedOrder order(heights({0}));
  trees.create(0, forest);
  EXPECT_EQ(trees.sequence(trees.of_root(0)[0]), std::vector<SegIndex>{0});
  EXPECT_EQ(trees.of_root(0)[1], ColorTrees::kEmpty);
  EXPECT_FALSE(trees.remove(0, forest, order));
  EXPECT_EQ(trees.of_root(0)[0], ColorTrees::kEmpty);
}

namespace {

// Segment 3 crosses 0, 1 and 2, which lie above it: one component whose
// color class {0, 1, 2} is held top to bottom.
void build_fan(ParityForest& forest, ColorTrees& trees, const FixedOrder& order) {
  for (SegIndex s = 0; s < 4; ++s) trees.create(s, forest);
  for (SegIndex s : {0, 1, 2}) ASSERT_FALSE(trees.merge(forest, 3, s, order).violation);
}

}  // namespace

TEST(ColorTrees, RemoveChecksNewNeighbors) {
  {
    ParityForest forest(4);
    ColorTrees trees(4);
    const FixedOrder order(heights({3, 2, 1, 0}));
    build_fan(forest, trees, order);
    const int p = forest.parity_of(0);
    EXPECT_EQ(trees.sequence(trees.of_root(forest.find(0))[p]), (std::vector<SegIndex>{0, 1, 2}));
    EXPECT_FALSE(trees.remove(1, forest, order));
    EXPECT_EQ(trees.sequence(trees.of_root(forest.find(0))[p]), (std::vector<SegIndex>{0, 2}));
  }
  {
    ParityForest forest(4);
    ColorTrees trees(4);
    FixedOrder order(heights({3, 2, 1, 0}));
    order.cross(0, 2);
    build_fan(forest, trees, order);
    const auto v = trees.remove(1, forest, order);
    ASSERT_TRUE(v);
    EXPECT_EQ(*v, (ColorTrees::Pair{0, 2}));
    // Unchanged on violation.
    EXPECT_EQ(trees.sequence(trees.of_root(forest.find(0))[forest.parity_of(0)]), (std::vector<SegIndex>{0, 1, 2}));
  }
}

TEST(ColorTrees, MergeSingletons) {
  ParityForest forest(2);
  ColorTrees trees(2);
  const FixedOrder order(heights({1, 0}));
  trees.create(0, forest);
  trees.create(1, forest);
  const auto r = trees.merge(forest, 0, 1, order);
  EXPECT_FALSE(r.violation);
  EXPECT_NE(forest.parity_of(0), forest.parity_of(1));
  const auto& pair = trees.of_root(forest.find(0));
  EXPECT_EQ(trees.sequence(pair[forest.parity_of(0)]), std::vector<SegIndex>{0});
  EXPECT_EQ(trees.sequence(pair[forest.parity_of(1)]), std::vector<SegIndex>{1});
  EXPECT_THROW(trees.merge(forest, 0, 1, order), std::logic_error);
}

TEST(ColorTrees, NestedMergeKeepsHeightOrder) {
  // Outer component: 0 (top) and 1 (bottom) joined through 5; inner
  // component 2, 3, 4 joined through 6, sitting between them.
  //   heights: 0:100 2:80 6:70 3:60 4:40 1:10 5:5
  ParityForest forest(7);
  ColorTrees trees(7);
  std::vector<Scalar> y(7);
  const int h[] = {100, 10, 80, 60, 40, 5, 70};
  for (int k = 0; k < 7; ++k) y[k] = h[k];
  const FixedOrder order(y);
  for (SegIndex s = 0; s < 7; ++s) trees.create(s, forest);
  ASSERT_FALSE(trees.merge(forest, 5, 0, order).violation);
  ASSERT_FALSE(trees.merge(forest, 5, 1, order).violation);
  for (SegIndex s : {2, 3, 4}) ASSERT_FALSE(trees.merge(forest, 6, s, order).violation);
  ASSERT_FALSE(trees.merge(forest, 0, 6, order).violation);

  const auto root = forest.find(0);
  std::vector<SegIndex> all;
  for (int c = 0; c < 2; ++c) {
    const std::vector<SegIndex> seq = trees.sequence(trees.of_root(root)[c]);
    // Oracle: members of this parity sorted by height.
    std::vector<SegIndex> want;
    for (SegIndex s = 0; s < 7; ++s) {
      if (forest.parity_of(s) == c) want.push_back(s);
    }
    std::sort(want.begin(), want.end(), [&](SegIndex a, SegIndex b) { return y[a] > y[b]; });
    EXPECT_EQ(seq, want);
    all.insert(all.end(), seq.begin(), seq.end());
  }
  EXPECT_EQ(all.size(), 7u);
}

TEST(ColorTrees, MergeReportsCrossingSameColorNeighbors) {
  // 1 and 2 are linked; merging 0 with 2 puts 0 next to 1 in one class.
  ParityForest forest(3);
  ColorTrees trees(3);
  FixedOrder order(heights({3, 2, 1}));
  order.cross(0, 1);
  for (SegIndex s = 0; s < 3; ++s) trees.create(s, forest);
  ASSERT_FALSE(trees.merge(forest, 1, 2, order).violation);
  const auto r = trees.merge(forest, 0, 2, order);
  ASSERT_TRUE(r.violation);
  EXPECT_EQ(*r.violation, (ColorTrees::Pair{0, 1}));
  EXPECT_TRUE(order.intersects(r.violation->first, r.violation->second));
  EXPECT_EQ(forest.parity_of(0), forest.parity_of(1));
}

TEST(ColorTrees, FirstBelow) {
  ParityForest forest(4);
  ColorTrees trees(4);
  const FixedOrder order(heights({3, 2, 1, 0}));
  build_fan(forest, trees, order);
  const auto tree = trees.of_root(forest.find(0))[forest.parity_of(0)];
  EXPECT_EQ(trees.first_below(tree, Scalar::ratio(5, 2), order), 1);
  EXPECT_EQ(trees.first_below(tree, Scalar(10), order), 0);
  EXPECT_EQ(trees.first_below(tree, Scalar::ratio(1, 2), order), kNoSegment);
}
