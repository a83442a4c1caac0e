#include <gtest/gtest.h>

#include <random>

#include "geobip/error.hpp"
#include "geobip/instance.hpp"
#include "geobip/segment_sweep.hpp"
#include "geobip/solve.hpp"
#include "support.hpp"

using namespace geobip;
using geobip::test::seg;

namespace {

// Pentagram chords v_i v_{i+2} of a convex pentagon, each pulled in by a
// tenth of its length at both ends so that only the proper crossings remain.
std::vector<Segment> pentagram() {
  const Point2 v[5] = {{0, 10}, {10, 3}, {6, -8}, {-6, -8}, {-10, 3}};
  std::vector<Segment> out;
  const Scalar t = Scalar::ratio(1, 10);
  for (int i = 0; i < 5; ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 2) % 5];
    const Scalar dx = b.x - a.x, dy = b.y - a.y;
    out.push_back({i, {a.x + t * dx, a.y + t * dy}, {b.x - t * dx, b.y - t * dy}});
  }
  return out;
}

std::vector<Segment> triangle() {
  return {seg(0, "0", "0", "6", "2"), seg(1, "0", "3", "6", "1"), seg(2, "2.9", "-1", "3.1", "3")};
}

}  // namespace

TEST(SegmentSweep, SingleCrossingInGeneralPosition) {
  const std::vector<Segment> s{seg(0, "0", "0", "2", "2"), seg(1, "0.1", "2", "2.1", "0")};
  const Verdict v = sweep_bipartiteness(s, SegmentMode::kClosed);
  ASSERT_TRUE(v.is_bipartite());
  EXPECT_EQ(v.provenance, Provenance::kSweep);
  const auto& c = v.bipartite().coloring;
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (std::pair<ObjectId, Color>{0, Color::kRed}));
  EXPECT_EQ(c[1], (std::pair<ObjectId, Color>{1, Color::kBlue}));
}

TEST(SegmentSweep, EqualLeftAbscissaeAreRejectedByTheRawSweep) {
  const std::vector<Segment> s{seg(0, "0", "0", "2", "2"), seg(1, "0", "2", "2", "0")};
  EXPECT_THROW(sweep_bipartiteness(s, SegmentMode::kClosed), DegenerateInputError);
  // The driver rewrites to general position and still runs the sweep.
  const SolveReport r = solve_segments(s, SegmentMode::kClosed);
  EXPECT_EQ(r.verdict.provenance, Provenance::kSweep);
  EXPECT_TRUE(r.rewritten);
  ASSERT_TRUE(r.verdict.is_bipartite());
  EXPECT_EQ(r.verdict.bipartite().coloring[0].second, Color::kRed);
  EXPECT_EQ(r.verdict.bipartite().coloring[1].second, Color::kBlue);
}

TEST(SegmentSweep, VerticalSegmentRejected) {
  const std::vector<Segment> s{seg(0, "1", "0", "1", "2"), seg(1, "0", "1", "3", "1.5")};
  EXPECT_THROW(SegmentSweep(s, SegmentMode::kClosed), DegenerateInputError);
}

TEST(SegmentSweep, TriangleGivesOddCycleOfLengthThree) {
  const auto s = triangle();
  const SolveReport r = solve_segments(s, SegmentMode::kClosed);
  ASSERT_FALSE(r.verdict.is_bipartite());
  EXPECT_EQ(r.verdict.provenance, Provenance::kSweep);
  EXPECT_EQ(r.verdict.odd_cycle().cycle, (std::vector<ObjectId>{0, 1, 2}));
  const SegmentSet set(s, SegmentMode::kClosed);
  EXPECT_FALSE(test::brute_bipartite(set));
  EXPECT_EQ(test::check_witness(set, r.verdict), "");
}

TEST(SegmentSweep, PentagramGivesFiveCycle) {
  const auto s = pentagram();
  const SegmentSet set(s, SegmentMode::kClosed);
  // The intersection graph is exactly C5.
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      const std::size_t gap = (j + 5 - i) % 5;
      EXPECT_EQ(set.intersects(i, j), gap == 1 || gap == 4) << i << ' ' << j;
    }
  }
  ASSERT_TRUE(degeneracy_scan(s, SegmentMode::kClosed).empty());
  const Verdict v = sweep_bipartiteness(s, SegmentMode::kClosed);
  ASSERT_FALSE(v.is_bipartite());
  EXPECT_EQ(v.odd_cycle().cycle.size(), 5u);
  EXPECT_EQ(test::check_witness(set, v), "");
}

TEST(SegmentSweep, LeftEndpointInsideBundleSplitsIt) {
  // a and b cross near x = 5.26; c then starts between them, touching
  // neither.
  const std::vector<Segment> s{seg(0, "0", "0", "10", "4"), seg(1, "1", "4", "10.5", "0"),
                               seg(2, "7", "2.5", "9", "2.6")};
  ASSERT_TRUE(degeneracy_scan(s, SegmentMode::kClosed).empty());
  SegmentSweep sweep(s, SegmentMode::kClosed);
  sweep.step();
  EXPECT_EQ(sweep.bundles().size(), 1u);
  sweep.step();
  EXPECT_EQ(sweep.bundles().size(), 2u);  // b starts above a, in a gap
  sweep.step();
  EXPECT_EQ(sweep.bundles().size(), 1u);  // the crossing merges them
  sweep.step();
  const auto bundles = sweep.bundles();
  ASSERT_EQ(bundles.size(), 3u);
  EXPECT_EQ(bundles[1][0], (BoundaryPair{2, 2}));
  EXPECT_TRUE(sweep.check_invariants());
  EXPECT_TRUE(sweep.run().is_bipartite());
  EXPECT_LE(sweep.stats().events, 3 * s.size() - 1);
}

TEST(SegmentSweep, Components) {
  const std::vector<Segment> two{seg(0, "0", "0", "2", "2"), seg(1, "0.1", "2", "2.1", "0"),
                                 seg(2, "5", "0", "7", "2"), seg(3, "5.1", "2", "7.1", "0")};
  SegmentSweep a(two, SegmentMode::kClosed);
  a.run();
  EXPECT_EQ(a.components(), (std::vector<std::vector<ObjectId>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(a.forest_edges().size(), 2u);

  std::vector<Segment> apart;
  for (int i = 0; i < 6; ++i) apart.push_back({i, {i * 3, i}, {i * 3 + 1, i + 1}});
  SegmentSweep b(apart, SegmentMode::kClosed);
  b.run();
  EXPECT_EQ(b.components().size(), 6u);

  SegmentSweep c(pentagram(), SegmentMode::kClosed);
  c.run();
  EXPECT_THROW(c.components(), std::logic_error);
}

TEST(SegmentSweep, RandomBipartiteComponentsMatchOracle) {
  std::mt19937_64 rng(9);
  int bipartite = 0;
  for (int round = 0; round < 40; ++round) {
    const auto s = test::general_position_segments(rng, 60, test::Family::kShort);
    SegmentSweep sweep(s, SegmentMode::kClosed);
    if (!sweep.run().is_bipartite()) continue;
    ++bipartite;
    const SegmentSet set(s, SegmentMode::kClosed);
    EXPECT_EQ(sweep.components(), test::brute_components(set));
    // Every processed crossing merged two components.
    EXPECT_EQ(sweep.stats().crossings, sweep.forest_edges().size());
    EXPECT_EQ(sweep.forest_edges().size(), s.size() - sweep.components().size());
    for (auto [u, v] : sweep.forest_edges()) EXPECT_TRUE(set.intersects(static_cast<std::size_t>(u), static_cast<std::size_t>(v)));
  }
  EXPECT_GT(bipartite, 10);
}

TEST(SegmentSweep, AgreesWithOracleOnRandomInput) {
  std::mt19937_64 rng(2024);
  for (test::Family f : {test::Family::kUniform, test::Family::kShort, test::Family::kLong, test::Family::kLayers,
                         test::Family::kFan}) {
    for (int round = 0; round < 12; ++round) {
      const auto s = test::general_position_segments(rng, 100, f);
      for (SegmentMode m : {SegmentMode::kClosed, SegmentMode::kOpen}) {
        const Verdict v = sweep_bipartiteness(s, m);
        const SegmentSet set(s, m);
        ASSERT_EQ(v.is_bipartite(), test::brute_bipartite(set)) << test::family_name(f) << ' ' << round;
        ASSERT_EQ(test::check_witness(set, v), "");
      }
    }
  }
}

TEST(SegmentSweep, InvariantsHoldAfterEveryEvent) {
  std::mt19937_64 rng(31);
  for (test::Family f : {test::Family::kLayers, test::Family::kShort, test::Family::kUniform}) {
    for (int round = 0; round < 6; ++round) {
      const auto s = test::general_position_segments(rng, 40, f);
      const bool bip = test::brute_bipartite(SegmentSet(s, SegmentMode::kClosed));
      SegmentSweep sweep(s, SegmentMode::kClosed);
      while (sweep.step()) {
        const ValidationResult r = sweep.check_invariants(bip);
        ASSERT_TRUE(r) << test::family_name(f) << ' ' << round << ": " << r.message;
        ASSERT_LE(sweep.stats().events, 3 * s.size() - 1);
      }
    }
  }
}

TEST(SegmentSweep, Deterministic) {
  std::mt19937_64 rng(4);
  const auto s = test::general_position_segments(rng, 80, test::Family::kUniform);
  const Verdict a = sweep_bipartiteness(s, SegmentMode::kClosed);
  const Verdict b = sweep_bipartiteness(s, SegmentMode::kClosed);
  ASSERT_EQ(a.is_bipartite(), b.is_bipartite());
  if (a.is_bipartite()) {
    EXPECT_EQ(a.bipartite().coloring, b.bipartite().coloring);
  } else {
    EXPECT_EQ(a.odd_cycle().cycle, b.odd_cycle().cycle);
  }
}

TEST(SegmentSweep, TwoLayerFamilyIsBipartiteWithinEventBound) {
  GenOptions o;
  o.n = 300;
  o.bipartite = true;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    o.seed = seed;
    const auto s = generate_segments(o);
    SegmentSweep sweep(s, SegmentMode::kClosed);
    ASSERT_TRUE(sweep.run().is_bipartite());
    EXPECT_LE(sweep.stats().events, 3 * s.size() - 1);
  }
}
