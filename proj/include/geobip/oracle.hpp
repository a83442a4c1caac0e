#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "geobip/object_set.hpp"
#include "geobip/verdict.hpp"

namespace geobip {

/// Explicit intersection graph over object indices 0..n-1.
struct IntersectionGraph {
  std::vector<ObjectId> ids;
  std::vector<std::vector<std::uint32_t>> adjacency;
  std::size_t edges = 0;

  std::size_t size() const { return ids.size(); }
};

/// All pairs, exact predicates. Quadratic.
IntersectionGraph build_graph(const ObjectSet& objects);

/// Graph over ids with the given undirected edges (indices), deduplicated.
IntersectionGraph graph_from_edges(std::vector<ObjectId> ids,
                                   const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

/// BFS 2-coloring. On a monochromatic edge uv the cycle is the tree path
/// u..lca..v closed by uv.
Verdict bfs_bipartiteness(const IntersectionGraph& graph, Provenance provenance = Provenance::kOracle);

/// build_graph followed by bfs_bipartiteness.
Verdict oracle_bipartiteness(const ObjectSet& objects, Provenance provenance = Provenance::kOracle);

}  // namespace geobip
