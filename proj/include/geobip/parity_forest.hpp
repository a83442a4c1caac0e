#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace geobip {

/// Union-find with a parity bit per node.
///
/// Each union-find tree mirrors one tree of a logical forest whose edges are
/// recorded verbatim by link(). parity_of(x) is the parity of the path from x
/// to its union-find root, which equals the 2-coloring of the logical tree up
/// to a global swap. Root bits are always zero; path compression rewrites the
/// bits of compressed nodes so that every parity is preserved.
class ParityForest {
 public:
  using Node = std::uint32_t;
  using Edge = std::pair<Node, Node>;

  ParityForest() = default;
  explicit ParityForest(std::size_t nodes);

  /// Fresh singleton tree with even parity.
  Node make_node();

  std::size_t size() const { return parent_.size(); }
  std::size_t tree_count() const { return parent_.size() - edges_.size(); }

  /// Union-find representative of x's tree.
  Node find(Node x);

  bool same_tree(Node x, Node y);

  /// 0 = even, 1 = odd.
  int parity_of(Node x);

  /// Adds the logical edge (x, y) between two different trees, merging them by
  /// size (ties keep x's root) so that afterwards parity_of(x) != parity_of(y).
  /// Throws std::logic_error when x and y already share a tree.
  void link(Node x, Node y);

  /// Logical edges in insertion order.
  std::span<const Edge> edges() const { return edges_; }

  /// Unique simple path x ... y through the logical edges. Throws
  /// std::logic_error when x and y lie in different trees.
  std::vector<Node> forest_path(Node x, Node y) const;

 private:
  void check(Node x) const;
  // Root of x with path compression; parity of x is returned via the bit.
  Node compress(Node x);

  std::vector<Node> parent_;
  std::vector<std::uint8_t> bit_;
  std::vector<std::uint32_t> size_;
  std::vector<Edge> edges_;
  std::vector<Node> scratch_;
};

}  // namespace geobip
