#include "geobip/sequence_forest.hpp"

#include <cassert>

namespace geobip {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

void SequenceForest::reserve_nodes(std::size_t count) {
  while (nodes_.size() < count) {
    Node n;
    n.priority = mix(nodes_.size());
    nodes_.push_back(n);
  }
}

SequenceForest::Handle SequenceForest::allocate() {
  if (!free_.empty()) {
    const Handle v = free_.back();
    free_.pop_back();
    return v;
  }
  const auto v = static_cast<Handle>(nodes_.size());
  reserve_nodes(nodes_.size() + 1);
  return v;
}

void SequenceForest::release(Handle v) {
  assert(detached(v));
  free_.push_back(v);
}

void SequenceForest::pull(Handle v) {
  Node& n = nodes_[v];
  n.size = 1 + size(n.left) + size(n.right);
  if (n.left != kNil) nodes_[n.left].parent = v;
  if (n.right != kNil) nodes_[n.right].parent = v;
}

SequenceForest::Handle SequenceForest::root_of(Handle v) const {
  while (nodes_[v].parent != kNil) v = nodes_[v].parent;
  return v;
}

SequenceForest::Handle SequenceForest::first(Handle root) const {
  if (root == kNil) return kNil;
  while (nodes_[root].left != kNil) root = nodes_[root].left;
  return root;
}

SequenceForest::Handle SequenceForest::last(Handle root) const {
  if (root == kNil) return kNil;
  while (nodes_[root].right != kNil) root = nodes_[root].right;
  return root;
}

SequenceForest::Handle SequenceForest::next(Handle v) const {
  if (nodes_[v].right != kNil) return first(nodes_[v].right);
  Handle p = nodes_[v].parent;
  while (p != kNil && nodes_[p].right == v) {
    v = p;
    p = nodes_[p].parent;
  }
  return p;
}

SequenceForest::Handle SequenceForest::prev(Handle v) const {
  if (nodes_[v].left != kNil) return last(nodes_[v].left);
  Handle p = nodes_[v].parent;
  while (p != kNil && nodes_[p].left == v) {
    v = p;
    p = nodes_[p].parent;
  }
  return p;
}

std::size_t SequenceForest::rank(Handle v) const {
  std::size_t r = size(nodes_[v].left);
  while (nodes_[v].parent != kNil) {
    const Handle p = nodes_[v].parent;
    if (nodes_[p].right == v) r += size(nodes_[p].left) + 1;
    v = p;
  }
  return r;
}

SequenceForest::Handle SequenceForest::at(Handle root, std::size_t k) const {
  Handle v = root;
  while (v != kNil) {
    const std::size_t left = size(nodes_[v].left);
    if (k < left) {
      v = nodes_[v].left;
    } else if (k == left) {
      return v;
    } else {
      k -= left + 1;
      v = nodes_[v].right;
    }
  }
  return kNil;
}

SequenceForest::Handle SequenceForest::merge_rec(Handle a, Handle b) {
  if (a == kNil) return b;
  if (b == kNil) return a;
  if (nodes_[a].priority > nodes_[b].priority) {
    nodes_[a].right = merge_rec(nodes_[a].right, b);
    pull(a);
    return a;
  }
  nodes_[b].left = merge_rec(a, nodes_[b].left);
  pull(b);
  return b;
}

std::pair<SequenceForest::Handle, SequenceForest::Handle> SequenceForest::split_rec(Handle v, std::size_t k) {
  if (v == kNil) return {kNil, kNil};
  const std::size_t left = size(nodes_[v].left);
  if (k <= left) {
    auto [a, b] = split_rec(nodes_[v].left, k);
    nodes_[v].left = b;
    pull(v);
    if (a != kNil) nodes_[a].parent = kNil;
    return {a, v};
  }
  auto [a, b] = split_rec(nodes_[v].right, k - left - 1);
  nodes_[v].right = a;
  pull(v);
  if (b != kNil) nodes_[b].parent = kNil;
  return {v, b};
}

std::pair<SequenceForest::Handle, SequenceForest::Handle> SequenceForest::split(Handle root, std::size_t k) {
  if (root == kNil) return {kNil, kNil};
  assert(nodes_[root].parent == kNil);
  auto parts = split_rec(root, k);
  if (parts.first != kNil) nodes_[parts.first].parent = kNil;
  if (parts.second != kNil) nodes_[parts.second].parent = kNil;
  return parts;
}

std::pair<SequenceForest::Handle, SequenceForest::Handle> SequenceForest::split_before(Handle v) {
  return split(root_of(v), rank(v));
}

SequenceForest::Handle SequenceForest::concat(Handle left, Handle right) {
  assert(left == kNil || nodes_[left].parent == kNil);
  assert(right == kNil || nodes_[right].parent == kNil);
  const Handle root = merge_rec(left, right);
  if (root != kNil) nodes_[root].parent = kNil;
  return root;
}

SequenceForest::Handle SequenceForest::erase(Handle v) {
  auto [before, rest] = split_before(v);
  auto [self, after] = split(rest, 1);
  assert(self == v);
  (void)self;
  return concat(before, after);
}

std::vector<SequenceForest::Handle> SequenceForest::to_vector(Handle root) const {
  std::vector<Handle> out;
  out.reserve(size(root));
  for (Handle v = first(root); v != kNil; v = next(v)) out.push_back(v);
  return out;
}

}  // namespace geobip
