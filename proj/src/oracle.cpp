#include "geobip/oracle.hpp"

#include <algorithm>
#include <queue>

namespace geobip {

IntersectionGraph build_graph(const ObjectSet& objects) {
  IntersectionGraph g;
  const std::size_t n = objects.size();
  g.ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g.ids.push_back(objects.id(i));
  g.adjacency.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!objects.intersects(i, j)) continue;
      g.adjacency[i].push_back(static_cast<std::uint32_t>(j));
      g.adjacency[j].push_back(static_cast<std::uint32_t>(i));
      ++g.edges;
    }
  }
  return g;
}

IntersectionGraph graph_from_edges(std::vector<ObjectId> ids,
                                   const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  IntersectionGraph g;
  g.ids = std::move(ids);
  g.adjacency.resize(g.ids.size());
  for (auto [u, v] : edges) {
    if (u == v) continue;
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& list : g.adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.edges += list.size();
  }
  g.edges /= 2;
  return g;
}

Verdict bfs_bipartiteness(const IntersectionGraph& graph, Provenance provenance) {
  const std::size_t n = graph.size();
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> parent(n, kNone);
  std::vector<std::uint32_t> depth(n, 0);
  std::vector<bool> seen(n, false);

  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::queue<std::uint32_t> frontier;
    frontier.push(static_cast<std::uint32_t>(start));
    while (!frontier.empty()) {
      const std::uint32_t u = frontier.front();
      frontier.pop();
      for (std::uint32_t v : graph.adjacency[u]) {
        if (!seen[v]) {
          seen[v] = true;
          parent[v] = u;
          depth[v] = depth[u] + 1;
          frontier.push(v);
        } else if (depth[v] % 2 == depth[u] % 2) {
          // Walk both ends up to their common ancestor.
          std::vector<std::uint32_t> left{u};
          std::vector<std::uint32_t> right{v};
          std::uint32_t a = u;
          std::uint32_t b = v;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          OddCycle cycle;
          for (std::uint32_t x : left) cycle.cycle.push_back(graph.ids[x]);
          for (auto it = right.rbegin(); it != right.rend(); ++it) cycle.cycle.push_back(graph.ids[*it]);
          return {std::move(cycle), provenance};
        }
      }
    }
  }
  Bipartite b;
  b.coloring.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.coloring.emplace_back(graph.ids[i], depth[i] % 2 == 0 ? Color::kRed : Color::kBlue);
  }
  return {std::move(b), provenance};
}

Verdict oracle_bipartiteness(const ObjectSet& objects, Provenance provenance) {
  return bfs_bipartiteness(build_graph(objects), provenance);
}

}  // namespace geobip
