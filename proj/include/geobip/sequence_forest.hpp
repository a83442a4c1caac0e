#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace geobip {

/// A pool of randomized balanced search trees (treaps) over node handles,
/// ordered by position only. Every node belongs to at most one sequence; a
/// sequence is named by its root handle, which changes under mutation.
///
/// Split and concatenate run in expected O(log n), as do rank, root lookup
/// and neighbor queries through parent links. Priorities derive from the node
/// handle, so behavior is deterministic.
class SequenceForest {
 public:
  using Handle = std::int32_t;
  static constexpr Handle kNil = -1;

  /// Ensures handles [0, count) exist; new handles start detached.
  void reserve_nodes(std::size_t count);
  /// Allocates a fresh detached handle (reusing released ones).
  Handle allocate();
  /// Returns a detached handle to the pool.
  void release(Handle v);

  std::size_t size(Handle root) const { return root == kNil ? 0 : nodes_[root].size; }
  Handle root_of(Handle v) const;
  bool detached(Handle v) const { return nodes_[v].parent == kNil && size(v) == 1; }

  Handle first(Handle root) const;
  Handle last(Handle root) const;
  Handle next(Handle v) const;
  Handle prev(Handle v) const;
  /// 0-based position of v within its sequence.
  std::size_t rank(Handle v) const;
  Handle at(Handle root, std::size_t k) const;

  /// First k elements and the rest.
  std::pair<Handle, Handle> split(Handle root, std::size_t k);
  /// Elements strictly before v, and v onward.
  std::pair<Handle, Handle> split_before(Handle v);
  Handle concat(Handle left, Handle right);

  /// Removes v from its sequence and returns the new root of that sequence.
  Handle erase(Handle v);

  /// First element for which pred holds, assuming pred is false on a prefix
  /// and true on the remaining suffix; kNil when it never holds.
  template <class Pred>
  Handle lower_bound(Handle root, Pred&& pred) const {
    Handle found = kNil;
    Handle v = root;
    while (v != kNil) {
      if (pred(v)) {
        found = v;
        v = nodes_[v].left;
      } else {
        v = nodes_[v].right;
      }
    }
    return found;
  }

  /// Binary descent: cmp(v) < 0 goes left, > 0 goes right, 0 stops at v.
  /// Also reports the last node left of the stop point and the first right of
  /// it when no node matches.
  struct Descent {
    Handle match = kNil;
    Handle before = kNil;
    Handle after = kNil;
  };
  template <class Cmp>
  Descent descend(Handle root, Cmp&& cmp) const {
    Descent d;
    Handle v = root;
    while (v != kNil) {
      const int c = cmp(v);
      if (c == 0) {
        d.match = v;
        return d;
      }
      if (c < 0) {
        d.after = v;
        v = nodes_[v].left;
      } else {
        d.before = v;
        v = nodes_[v].right;
      }
    }
    return d;
  }

  std::vector<Handle> to_vector(Handle root) const;

 private:
  struct Node {
    Handle left = kNil;
    Handle right = kNil;
    Handle parent = kNil;
    std::uint32_t size = 1;
    std::uint64_t priority = 0;
  };

  void pull(Handle v);
  Handle merge_rec(Handle a, Handle b);
  std::pair<Handle, Handle> split_rec(Handle v, std::size_t k);

  std::vector<Node> nodes_;
  std::vector<Handle> free_;
};

}  // namespace geobip
