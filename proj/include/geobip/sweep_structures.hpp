#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "geobip/geometry.hpp"
#include "geobip/parity_forest.hpp"
#include "geobip/sequence_forest.hpp"

namespace geobip {

/// Index of a segment inside one sweep run (0..n-1), not its public id.
using SegIndex = std::int32_t;
inline constexpr SegIndex kNoSegment = -1;

/// Vertical order of segments at the current sweep abscissa, supplied by the
/// sweep driver to the containers below.
class SweepOrder {
 public:
  virtual ~SweepOrder() = default;
  /// a lies strictly above b immediately left of the current abscissa.
  virtual bool above(SegIndex a, SegIndex b) const = 0;
  /// Sign of (y of s at the current abscissa) - y.
  virtual int compare_to(SegIndex s, const Scalar& y) const = 0;
  virtual bool intersects(SegIndex a, SegIndex b) const = 0;
};

// ---------------------------------------------------------------------------
// Event queue

enum class EventKind { kLeftEndpoint, kRightEndpoint, kCrossing };

struct Event {
  Point2 at;
  EventKind kind = EventKind::kLeftEndpoint;
  SegIndex a = kNoSegment;  // the segment, or the upper segment of a crossing
  SegIndex b = kNoSegment;  // the lower segment of a crossing
};

/// Min-priority queue over event points, lexicographic in (x, y), with
/// removal of specific events through handles. Distinct events must have
/// distinct points.
class EventQueue {
  struct ByPoint {
    bool operator()(const Event& l, const Event& r) const { return l.at < r.at; }
  };
  using Storage = std::set<Event, ByPoint>;

 public:
  using Handle = Storage::const_iterator;

  /// Throws DegenerateInputError when another event already sits at e.at.
  Handle push(Event e);
  /// Throws std::out_of_range when empty.
  Event pop_min();
  void remove(Handle h) { events_.erase(h); }

  bool empty() const { return events_.empty(); }
  std::size_t size() const { return events_.size(); }
  const Event& peek() const { return *events_.begin(); }
  /// Every queued crossing event, in queue order.
  std::vector<Event> crossings() const;

 private:
  Storage events_;
};

// ---------------------------------------------------------------------------
// Bundle tree

struct BoundaryPair {
  SegIndex top = kNoSegment;
  SegIndex bottom = kNoSegment;

  bool empty() const { return top == kNoSegment; }
  friend bool operator==(const BoundaryPair&, const BoundaryPair&) = default;
};

/// The topmost and bottommost segment of each of the two color sets of a
/// bundle. Which set carries which color is resolved through the parity
/// forest, never by slot position.
using Boundaries = std::array<BoundaryPair, 2>;

struct Bundle {
  Boundaries sets;
  /// Queued crossing events between this bundle and the one below it.
  std::vector<EventQueue::Handle> events_below;
};

/// Balanced search tree of bundles in top-to-bottom sweep-line order.
/// Also indexes which bundle each boundary segment currently belongs to.
class BundleTree {
 public:
  using BundleId = SequenceForest::Handle;
  static constexpr BundleId kNone = SequenceForest::kNil;

  explicit BundleTree(std::size_t segments);

  std::size_t size() const { return forest_.size(root_); }
  bool alive(BundleId b) const { return b >= 0 && static_cast<std::size_t>(b) < alive_.size() && alive_[b]; }
  BundleId top() const { return forest_.first(root_); }
  BundleId above(BundleId b) const { return forest_.prev(b); }
  BundleId below(BundleId b) const { return forest_.next(b); }
  std::vector<BundleId> in_order() const { return forest_.to_vector(root_); }

  const Bundle& operator[](BundleId b) const { return bundles_[b]; }
  Bundle& operator[](BundleId b) { return bundles_[b]; }

  /// Bundle whose boundary set contains s, or kNone.
  BundleId bundle_of(SegIndex s) const { return owner_[s]; }

  /// Inserts a bundle right below `upper` (at the top when kNone). `lower`
  /// must be the current successor of `upper`; it is checked.
  BundleId insert_between(BundleId upper, BundleId lower, const Boundaries& sets);
  void remove(BundleId b);
  /// Replaces b by two adjacent bundles; b keeps the upper part.
  std::pair<BundleId, BundleId> split(BundleId b, const Boundaries& upper, const Boundaries& lower);
  /// Merges two adjacent bundles (upper directly above lower) of one
  /// component, per color: outermost top from the upper bundle, outermost
  /// bottom from the lower one. Throws std::logic_error if not adjacent.
  BundleId merge(BundleId upper, BundleId lower, const std::function<int(SegIndex)>& color_of);
  void set_boundaries(BundleId b, const Boundaries& sets);

  struct Location {
    BundleId inside = kNone;
    BundleId above = kNone;  // nearest bundle above a gap
    BundleId below = kNone;  // nearest bundle below a gap
  };
  /// Binary search for height y on the sweep line using boundary segments.
  Location locate(const Scalar& y, const SweepOrder& order) const;

 private:
  BundleId make(const Boundaries& sets);
  void claim(BundleId b);
  void release_boundaries(BundleId b);

  SequenceForest forest_;
  SequenceForest::Handle root_ = SequenceForest::kNil;
  std::vector<Bundle> bundles_;
  std::vector<bool> alive_;
  std::vector<BundleId> owner_;
};

// ---------------------------------------------------------------------------
// Color trees

/// Search trees over the segments of one color class of one component of the
/// truncated arrangement, in top-to-bottom order. Every parity-forest root
/// owns two trees indexed by parity relative to that root.
class ColorTrees {
 public:
  using Tree = SequenceForest::Handle;
  static constexpr Tree kEmpty = SequenceForest::kNil;
  using Pair = std::pair<SegIndex, SegIndex>;

  explicit ColorTrees(std::size_t segments);

  /// Trees of the component whose union-find root is `root`.
  const std::array<Tree, 2>& of_root(ParityForest::Node root) const { return trees_[root]; }

  /// Singleton tree for a segment that forms its own component.
  Tree create(SegIndex s, ParityForest& forest);

  /// Removes s after checking that its two neighbors in its tree are disjoint.
  /// On a crossing neighbor pair nothing is changed and the pair is returned.
  std::optional<Pair> remove(SegIndex s, ParityForest& forest, const SweepOrder& order);

  struct MergeResult {
    std::optional<Pair> violation;
    /// Extremes of every piece that was concatenated: the segments whose tree
    /// neighbors may now come from the other component.
    std::vector<SegIndex> touched;
  };
  /// Merges the components of s and t, which cross at the current event, and
  /// links s-t in the forest. Uses the at-most-three-run nesting of the two
  /// components to split one of them and concatenate at most six pieces.
  MergeResult merge(ParityForest& forest, SegIndex s, SegIndex t, const SweepOrder& order);

  SegIndex first(Tree t) const { return forest_.first(t); }
  SegIndex last(Tree t) const { return forest_.last(t); }
  SegIndex next(SegIndex s) const { return forest_.next(s); }
  SegIndex prev(SegIndex s) const { return forest_.prev(s); }
  std::vector<SegIndex> sequence(Tree t) const { return forest_.to_vector(t); }

  /// First member of t lying strictly below height y.
  SegIndex first_below(Tree t, const Scalar& y, const SweepOrder& order) const;

 private:
  SequenceForest forest_;
  std::vector<std::array<Tree, 2>> trees_;
};

}  // namespace geobip
