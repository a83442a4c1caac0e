#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geobip/geometry.hpp"
#include "geobip/object_set.hpp"
#include "geobip/verdict.hpp"

namespace geobip {

/// floor(2 * 5^(d/2)): the most pairwise-disjoint balls, each at least as
/// large as a ball A, that can all meet A. Exact: largest k with k^2 <= 4*5^d.
/// Throws std::invalid_argument for d < 1 or when the value exceeds 64 bits.
std::uint64_t degree_cap(int d);

struct BallsOptions {
  /// Enumerate candidate pairs by sweep-and-prune on the first axis instead
  /// of scanning all pairs.
  bool prune = true;
};

struct BallsStats {
  std::size_t edges = 0;             // edges collected before stopping
  std::size_t max_larger = 0;        // most larger neighbors seen at one ball
  bool capped = false;               // stopped at cap + 1 larger neighbors
};

/// Each ball collects its larger intersecting neighbors (radius, then id),
/// stopping at degree_cap(d) + 1. Reaching that many means two of them meet,
/// and the three balls form a triangle. Otherwise the graph has at most
/// cap * n edges and is 2-colored by BFS.
Verdict balls_bipartiteness(const BallSet& balls, const BallsOptions& options = {}, BallsStats* stats = nullptr);
Verdict balls_bipartiteness(std::span<const Ball> balls, const BallsOptions& options = {});

/// Sparsity and planarity checks for a bipartite disk graph.
struct DiskAudit {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t max_larger = 0;
  bool cap_ok = true;          // max_larger <= degree_cap(2)
  bool linear_ok = true;       // edges <= 10 n
  bool planar_count_ok = true;  // edges <= 2n - 4 when n >= 3
  bool drawing_checked = false;  // false when two disks share a center
  bool crossing_free = true;
  std::string detail;

  bool ok() const { return cap_ok && linear_ok && planar_count_ok && crossing_free; }
};

/// Requires dimension 2 and a bipartite verdict (std::logic_error otherwise).
/// The drawing puts each disk at its center with straight edges; two edges
/// may meet only at a shared end.
DiskAudit bipartite_disk_edge_audit(const BallSet& disks, const Verdict& verdict);

}  // namespace geobip
