#pragma once

// Helpers shared by the test suites. The oracles here are deliberately
// written without the library's graph code: plain adjacency matrices, BFS
// coloring and direct predicate calls.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "geobip/degeneracy.hpp"
#include "geobip/geometry.hpp"
#include "geobip/object_set.hpp"
#include "geobip/verdict.hpp"

namespace geobip::test {

inline Scalar num(std::string_view s) { return Scalar::parse(s); }

inline Point2 pt(std::string_view x, std::string_view y) { return {num(x), num(y)}; }

inline Segment seg(ObjectId id, std::string_view x1, std::string_view y1, std::string_view x2, std::string_view y2) {
  return {id, pt(x1, y1), pt(x2, y2)};
}

inline Ball disk(ObjectId id, std::string_view x, std::string_view y, std::string_view r) {
  return {id, {num(x), num(y)}, num(r)};
}

/// Plain BFS 2-coloring over an adjacency predicate.
inline bool brute_bipartite(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& adjacent) {
  std::vector<int> color(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u || !adjacent(u, v)) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool brute_bipartite(const ObjectSet& objects) {
  return brute_bipartite(objects.size(), [&](std::size_t i, std::size_t j) { return objects.intersects(i, j); });
}

/// Connected components as sorted id lists, ordered by smallest member.
inline std::vector<std::vector<ObjectId>> brute_components(const ObjectSet& objects) {
  const std::size_t n = objects.size();
  std::vector<int> label(n, -1);
  std::vector<std::vector<ObjectId>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    label[s] = static_cast<int>(out.size());
    std::vector<ObjectId> comp;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      comp.push_back(objects.id(u));
      for (std::size_t v = 0; v < n; ++v) {
        if (label[v] < 0 && v != u && objects.intersects(u, v)) {
          label[v] = label[s];
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Families of random segment sets on an integer grid. Every endpoint has a
/// distinct x; callers still filter with degeneracy_scan where general
/// position matters.
enum class Family { kUniform, kShort, kLong, kLayers, kFan };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::kUniform:
      return "uniform";
    case Family::kShort:
      return "short";
    case Family::kLong:
      return "long";
    case Family::kLayers:
      return "layers";
    case Family::kFan:
      return "fan";
  }
  return "?";
}

inline std::vector<Segment> random_segments(std::mt19937_64& rng, std::size_t n, Family family) {
  constexpr std::int64_t kSide = 1000003;
  std::set<std::int64_t> used_x;
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  auto fresh_x = [&](std::int64_t lo, std::int64_t hi) {
    for (;;) {
      const std::int64_t x = draw(lo, hi);
      if (used_x.insert(x).second) return x;
    }
  };
  // Typical length scales with 1/sqrt(n) so that mean degree stays moderate.
  const auto scale = static_cast<std::int64_t>(static_cast<double>(kSide) / std::sqrt(static_cast<double>(n)));
  std::vector<Segment> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t x1, y1, x2, y2;
    switch (family) {
      case Family::kUniform:
      case Family::kShort:
      case Family::kLong: {
        const std::int64_t len = family == Family::kShort ? scale / 2 : (family == Family::kLong ? 3 * scale : scale);
        x1 = fresh_x(0, kSide);
        y1 = draw(0, kSide);
        x2 = fresh_x(x1 - len, x1 + len);
        y2 = y1 + draw(-len, len);
        break;
      }
      case Family::kLayers: {
        // Near-horizontal and near-vertical with jitter, so same-layer
        // crossings are possible but rare.
        if (i % 2 == 0) {
          x1 = fresh_x(0, kSide / 4);
          x2 = fresh_x(3 * kSide / 4, kSide);
          y1 = draw(0, kSide);
          y2 = y1 + draw(-scale / 4, scale / 4);
        } else {
          x1 = fresh_x(kSide / 4, 3 * kSide / 4);
          x2 = fresh_x(x1 - scale / 8, x1 + scale / 8);
          y1 = draw(0, kSide / 4);
          y2 = draw(3 * kSide / 4, kSide);
        }
        break;
      }
      case Family::kFan: {
        // Segments through a common neighborhood: dense, mostly nonbipartite.
        x1 = fresh_x(0, kSide / 3);
        y1 = draw(0, kSide);
        x2 = fresh_x(2 * kSide / 3, kSide);
        y2 = draw(0, kSide);
        break;
      }
    }
    out.push_back({static_cast<ObjectId>(i), {Scalar(x1), Scalar(y1)}, {Scalar(x2), Scalar(y2)}});
  }
  return out;
}

/// Random general-position instance of the family, redrawn until the exact
/// scan is clean.
inline std::vector<Segment> general_position_segments(std::mt19937_64& rng, std::size_t n, Family family,
                                                      SegmentMode mode = SegmentMode::kClosed) {
  for (;;) {
    std::vector<Segment> s = random_segments(rng, n, family);
    if (degeneracy_scan(s, mode).empty()) return s;
  }
}

/// Test-side witness check, independent of validate().
inline std::string check_witness(const ObjectSet& objects, const Verdict& v) {
  auto index = [&](ObjectId id) -> long {
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (objects.id(i) == id) return static_cast<long>(i);
    }
    return -1;
  };
  if (v.is_bipartite()) {
    const auto& col = v.bipartite().coloring;
    if (col.size() != objects.size()) return "coloring size mismatch";
    std::vector<int> c(objects.size(), -1);
    for (const auto& [id, color] : col) {
      const long i = index(id);
      if (i < 0 || c[i] >= 0) return "bad or repeated id in coloring";
      c[i] = color == Color::kRed ? 0 : 1;
    }
    for (std::size_t i = 0; i < objects.size(); ++i) {
      for (std::size_t j = i + 1; j < objects.size(); ++j) {
        if (c[i] == c[j] && objects.intersects(i, j)) return "monochromatic edge";
      }
    }
    return "";
  }
  const auto& cyc = v.odd_cycle().cycle;
  if (cyc.size() < 3 || cyc.size() % 2 == 0) return "cycle length " + std::to_string(cyc.size());
  std::set<ObjectId> distinct(cyc.begin(), cyc.end());
  if (distinct.size() != cyc.size()) return "repeated id in cycle";
  for (std::size_t k = 0; k < cyc.size(); ++k) {
    const long a = index(cyc[k]);
    const long b = index(cyc[(k + 1) % cyc.size()]);
    if (a < 0 || b < 0) return "unknown id in cycle";
    if (!objects.intersects(a, b)) return "cycle pair does not intersect";
  }
  return "";
}

}  // namespace geobip::test
