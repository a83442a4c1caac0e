#include "geobip/parity_forest.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace geobip {

ParityForest::ParityForest(std::size_t nodes) {
  parent_.reserve(nodes);
  bit_.reserve(nodes);
  size_.reserve(nodes);
  for (std::size_t i = 0; i < nodes; ++i) make_node();
}

ParityForest::Node ParityForest::make_node() {
  const auto id = static_cast<Node>(parent_.size());
  parent_.push_back(id);
  bit_.push_back(0);
  size_.push_back(1);
  return id;
}

void ParityForest::check(Node x) const {
  if (x >= parent_.size()) throw std::out_of_range("parity forest: unknown node " + std::to_string(x));
}

ParityForest::Node ParityForest::compress(Node x) {
  scratch_.clear();
  Node root = x;
  while (parent_[root] != root) {
    scratch_.push_back(root);
    root = parent_[root];
  }
  // Walk back from the node nearest the root, accumulating path parity.
  std::uint8_t acc = 0;
  for (auto it = scratch_.rbegin(); it != scratch_.rend(); ++it) {
    acc ^= bit_[*it];
    bit_[*it] = acc;
    parent_[*it] = root;
  }
  return root;
}

ParityForest::Node ParityForest::find(Node x) {
  check(x);
  return compress(x);
}

bool ParityForest::same_tree(Node x, Node y) {
  check(x);
  check(y);
  return compress(x) == compress(y);
}

int ParityForest::parity_of(Node x) {
  check(x);
  compress(x);
  return bit_[x];
}

void ParityForest::link(Node x, Node y) {
  check(x);
  check(y);
  Node rx = compress(x);
  Node ry = compress(y);
  if (rx == ry) throw std::logic_error("parity forest: link within one tree");
  const std::uint8_t px = bit_[x];
  const std::uint8_t py = bit_[y];
  if (size_[ry] > size_[rx]) std::swap(rx, ry);
  // ry (the smaller or tied second root) hangs below rx. Its bit flips the
  // whole subtree exactly when x and y would otherwise share a parity.
  parent_[ry] = rx;
  bit_[ry] = static_cast<std::uint8_t>(px ^ py ^ 1U);
  size_[rx] += size_[ry];
  edges_.emplace_back(x, y);
}

std::vector<ParityForest::Node> ParityForest::forest_path(Node x, Node y) const {
  check(x);
  check(y);
  if (x == y) return {x};

  const std::size_t n = parent_.size();
  std::vector<std::vector<Node>> adjacency(n);
  for (const auto& [a, b] : edges_) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  constexpr Node kUnseen = ~Node{0};
  std::vector<Node> previous(n, kUnseen);
  std::queue<Node> frontier;
  frontier.push(x);
  previous[x] = x;
  while (!frontier.empty() && previous[y] == kUnseen) {
    const Node u = frontier.front();
    frontier.pop();
    for (Node v : adjacency[u]) {
      if (previous[v] == kUnseen) {
        previous[v] = u;
        frontier.push(v);
      }
    }
  }
  if (previous[y] == kUnseen) throw std::logic_error("parity forest: nodes lie in different trees");

  std::vector<Node> path{y};
  while (path.back() != x) path.push_back(previous[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace geobip
