#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "geobip/object_set.hpp"
#include "geobip/verdict.hpp"

namespace geobip {

/// Decremental intersection detection over a subset S of an ObjectSet.
///
/// query(x) returns some live member of S intersecting object x, or nothing
/// iff no live member does. Removed members are never returned. There is no
/// reinsertion. Objects are addressed by their index in the ObjectSet.
///
/// Cost model: Q(n) per query, T(n) to build and then remove every member.
class DecrementalDetector {
 public:
  virtual ~DecrementalDetector() = default;
  virtual std::optional<std::size_t> query(std::size_t probe) = 0;
  virtual void remove(std::size_t member) = 0;
  virtual std::size_t live() const = 0;
};

using DetectorFactory =
    std::function<std::unique_ptr<DecrementalDetector>(const ObjectSet&, std::span<const std::size_t> members)>;

/// Linear scan over live members. Q = O(n), T = O(n^2).
std::unique_ptr<DecrementalDetector> make_naive_detector(const ObjectSet& objects,
                                                         std::span<const std::size_t> members);

/// Uniform grid on the first (up to three) coordinates of the outward-rounded
/// bounding boxes. Cell side is the median member extent, doubled while the
/// grid would exceed 64 cells per member; members covering too many cells are
/// kept in a list that every query scans. Same answers as the naive detector;
/// speed depends on the input.
std::unique_ptr<DecrementalDetector> make_grid_detector(const ObjectSet& objects,
                                                        std::span<const std::size_t> members);

DetectorFactory naive_detector_factory();
DetectorFactory grid_detector_factory();

/// Depth-first spanning forest of the intersection graph restricted to
/// `members`, each tree rooted at its first member in input order.
struct SpanningForest {
  static constexpr std::uint32_t kRoot = ~std::uint32_t{0};

  std::vector<std::size_t> members;
  /// Indexed like the ObjectSet; meaningful for members only.
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> depth;
  /// (parent, child) object indices in discovery order.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t queries = 0;

  std::size_t tree_count() const { return members.size() - edges.size(); }
  /// Object indices on the tree path from a to b (same tree required).
  std::vector<std::size_t> path(std::size_t a, std::size_t b) const;
};

/// Every member is removed from the detector when first visited, so fewer
/// than 2|members| queries are issued (checked; InvariantError otherwise).
SpanningForest spanning_forest(const ObjectSet& objects, std::span<const std::size_t> members,
                               const DetectorFactory& factory);
SpanningForest spanning_forest(const ObjectSet& objects, const DetectorFactory& factory);

struct GenericStats {
  /// Queries of the full pass and of the two color-class passes.
  std::array<std::size_t, 3> queries{};
  std::size_t objects = 0;
};

/// Three spanning-forest passes: over all objects, then over each class of
/// the depth-parity coloring of the first forest. An edge inside a class
/// closes an odd cycle with the even forest path between its ends.
Verdict generic_bipartiteness(const ObjectSet& objects, const DetectorFactory& factory,
                              GenericStats* stats = nullptr);

}  // namespace geobip
