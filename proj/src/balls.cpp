#include "geobip/balls.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <gmpxx.h>

#include "geobip/error.hpp"
#include "geobip/oracle.hpp"

namespace geobip {

std::uint64_t degree_cap(int d) {
  if (d < 1) throw std::invalid_argument("degree_cap: dimension must be at least 1");
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 5, static_cast<unsigned long>(d));
  bound *= 4;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), bound.get_mpz_t());
  if (!root.fits_ulong_p()) throw std::invalid_argument("degree_cap: dimension too large");
  return root.get_ui();
}

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

// Calls visit(i, j) for every intersecting pair until it returns false.
template <class Visit>
void for_each_edge(const BallSet& balls, bool prune, Visit&& visit) {
  const std::size_t n = balls.size();
  if (!prune) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (balls.intersects(i, j) && !visit(i, j)) return;
      }
    }
    return;
  }
  std::vector<Box> boxes(n);
  for (std::size_t i = 0; i < n; ++i) boxes[i] = balls.bounds(i);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return boxes[a].lo[0] < boxes[b].lo[0] || (boxes[a].lo[0] == boxes[b].lo[0] && a < b);
  });
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = order[a];
    for (std::size_t b = a + 1; b < n && boxes[order[b]].lo[0] <= boxes[i].hi[0]; ++b) {
      const std::size_t j = order[b];
      if (balls.intersects(i, j) && !visit(std::min(i, j), std::max(i, j))) return;
    }
  }
}

}  // namespace

Verdict balls_bipartiteness(const BallSet& balls, const BallsOptions& options, BallsStats* stats) {
  const std::size_t n = balls.size();
  BallsStats local;
  BallsStats& st = stats ? *stats : local;
  st = BallsStats{};
  if (n == 0) return {Bipartite{}, Provenance::kBallsCap};

  const std::uint64_t cap = degree_cap(static_cast<int>(balls.dim()));

  // Rank by (radius, id): an edge points from lower to higher rank.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto c = balls.ball(a).radius <=> balls.ball(b).radius;
    return c != 0 ? c < 0 : balls.id(a) < balls.id(b);
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[order[k]] = k;

  std::vector<std::vector<std::uint32_t>> larger(n);
  std::vector<Pair> edges;
  std::optional<std::size_t> overfull;
  for_each_edge(balls, options.prune, [&](std::size_t i, std::size_t j) {
    const std::size_t small = rank[i] < rank[j] ? i : j;
    const std::size_t big = small == i ? j : i;
    larger[small].push_back(static_cast<std::uint32_t>(big));
    edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    st.max_larger = std::max(st.max_larger, larger[small].size());
    if (larger[small].size() > cap) {
      overfull = small;
      return false;
    }
    return true;
  });
  st.edges = edges.size();

  if (overfull) {
    st.capped = true;
    const auto& s = larger[*overfull];
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (balls.intersects(s[a], s[b])) {
          OddCycle cycle{{balls.id(*overfull), balls.id(s[a]), balls.id(s[b])}};
          return {std::move(cycle), Provenance::kBallsCap};
        }
      }
    }
    throw InvariantError("balls: more than degree_cap pairwise disjoint larger neighbors");
  }

  std::vector<ObjectId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = balls.id(i);
  return bfs_bipartiteness(graph_from_edges(std::move(ids), edges), Provenance::kBallsCap);
}

Verdict balls_bipartiteness(std::span<const Ball> balls, const BallsOptions& options) {
  const BallSet set(balls);
  return balls_bipartiteness(set, options);
}

DiskAudit bipartite_disk_edge_audit(const BallSet& disks, const Verdict& verdict) {
  if (!verdict.is_bipartite()) throw std::logic_error("disk audit needs a bipartite verdict");
  if (disks.size() > 0 && disks.dim() != 2) throw std::logic_error("disk audit needs dimension 2");

  DiskAudit audit;
  audit.n = disks.size();
  const IntersectionGraph g = build_graph(disks);
  audit.edges = g.edges;

  // Larger intersecting neighbors per disk.
  for (std::size_t i = 0; i < audit.n; ++i) {
    std::size_t count = 0;
    for (std::uint32_t j : g.adjacency[i]) {
      const auto c = disks.ball(j).radius <=> disks.ball(i).radius;
      if (c > 0 || (c == 0 && disks.id(j) > disks.id(i))) ++count;
    }
    audit.max_larger = std::max(audit.max_larger, count);
  }
  audit.cap_ok = audit.max_larger <= degree_cap(2);
  audit.linear_ok = audit.edges <= 10 * audit.n;
  audit.planar_count_ok = audit.n < 3 || audit.edges + 4 <= 2 * audit.n;

  auto center = [&](std::size_t i) { return Point2{disks.ball(i).center[0], disks.ball(i).center[1]}; };
  std::vector<Point2> centers;
  for (std::size_t i = 0; i < audit.n; ++i) centers.push_back(center(i));
  {
    std::vector<Point2> sorted = centers;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      audit.detail = "two disks share a center; drawing not checked";
      return audit;
    }
  }
  audit.drawing_checked = true;

  std::vector<Pair> edges;
  for (std::uint32_t i = 0; i < audit.n; ++i) {
    for (std::uint32_t j : g.adjacency[i]) {
      if (i < j) edges.emplace_back(i, j);
    }
  }
  // Exact tests only for pairs whose outward-rounded boxes overlap, found by
  // sweeping the boxes in order of their left side.
  struct EdgeBox {
    double lo_x, hi_x, lo_y, hi_y;
  };
  std::vector<EdgeBox> boxes;
  boxes.reserve(edges.size());
  for (const auto& [p, q] : edges) {
    boxes.push_back({std::min(round_down(centers[p].x), round_down(centers[q].x)),
                     std::max(round_up(centers[p].x), round_up(centers[q].x)),
                     std::min(round_down(centers[p].y), round_down(centers[q].y)),
                     std::max(round_up(centers[p].y), round_up(centers[q].y))});
  }
  std::vector<std::size_t> order(edges.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return boxes[l].lo_x < boxes[r].lo_x; });

  for (std::size_t ia = 0; ia < order.size() && audit.crossing_free; ++ia) {
    const std::size_t a = order[ia];
    for (std::size_t ib = ia + 1; ib < order.size() && boxes[order[ib]].lo_x <= boxes[a].hi_x; ++ib) {
      const std::size_t b = order[ib];
      if (boxes[b].lo_y > boxes[a].hi_y || boxes[a].lo_y > boxes[b].hi_y) continue;
      const auto [p, q] = edges[a];
      const auto [r, s] = edges[b];
      bool bad;
      if (p == r || p == s || q == r || q == s) {
        // Common end v: they may only overlap if collinear and on one side.
        const std::uint32_t v = (p == r || p == s) ? p : q;
        const std::uint32_t x = v == p ? q : p;
        const std::uint32_t y = (v == r) ? s : r;
        const Point2& o = centers[v];
        bad = orientation(o, centers[x], centers[y]) == 0 &&
              ((centers[x].x - o.x) * (centers[y].x - o.x) + (centers[x].y - o.y) * (centers[y].y - o.y)).sign() > 0;
      } else {
        bad = segments_intersect(Segment{0, centers[p], centers[q]}, Segment{1, centers[r], centers[s]},
                                 SegmentMode::kClosed);
      }
      if (bad) {
        audit.crossing_free = false;
        audit.detail = "edges " + std::to_string(disks.id(p)) + "-" + std::to_string(disks.id(q)) + " and " +
                       std::to_string(disks.id(r)) + "-" + std::to_string(disks.id(s)) + " cross";
        break;
      }
    }
  }
  return audit;
}

}  // namespace geobip
