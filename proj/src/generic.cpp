#include "geobip/generic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "geobip/error.hpp"

namespace geobip {

namespace {

class NaiveDetector final : public DecrementalDetector {
 public:
  NaiveDetector(const ObjectSet& objects, std::span<const std::size_t> members)
      : objects_(objects), members_(members.begin(), members.end()) {
    slot_.assign(objects.size(), kAbsent);
    for (std::size_t k = 0; k < members_.size(); ++k) slot_[members_[k]] = k;
  }

  std::optional<std::size_t> query(std::size_t probe) override {
    for (std::size_t m : members_) {
      if (m != probe && objects_.intersects(probe, m)) return m;
    }
    return std::nullopt;
  }

  void remove(std::size_t member) override {
    const std::size_t k = slot_[member];
    if (k == kAbsent) return;
    // Swap-pop keeps the live list dense.
    slot_[members_.back()] = k;
    std::swap(members_[k], members_.back());
    members_.pop_back();
    slot_[member] = kAbsent;
  }

  std::size_t live() const override { return members_.size(); }

 private:
  static constexpr std::size_t kAbsent = ~std::size_t{0};
  const ObjectSet& objects_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> slot_;
};

class GridDetector final : public DecrementalDetector {
 public:
  GridDetector(const ObjectSet& objects, std::span<const std::size_t> members)
      : objects_(objects), alive_(objects.size(), false), seen_(objects.size(), 0) {
    if (members.empty()) return;
    boxes_.resize(objects.size());
    std::vector<double> extents;
    extents.reserve(members.size());
    for (std::size_t m : members) {
      Box box = objects.bounds(m);
      dims_ = std::min<std::size_t>(box.lo.size(), 3);
      double extent = 0;
      for (std::size_t k = 0; k < dims_; ++k) extent = std::max(extent, box.hi[k] - box.lo[k]);
      extents.push_back(extent);
      for (std::size_t k = 0; k < dims_; ++k) {
        lo_[k] = std::min(lo_[k], box.lo[k]);
        hi_[k] = std::max(hi_[k], box.hi[k]);
      }
      boxes_[m] = std::move(box);
    }
    std::nth_element(extents.begin(), extents.begin() + extents.size() / 2, extents.end());
    cell_ = extents[extents.size() / 2];
    double span = 0;
    for (std::size_t k = 0; k < dims_; ++k) span = std::max(span, hi_[k] - lo_[k]);
    if (!(cell_ > 0)) cell_ = span > 0 ? span : 1.0;
    auto total_cells = [&] {
      double cells = 1;
      for (std::size_t k = 0; k < dims_; ++k) cells *= std::floor((hi_[k] - lo_[k]) / cell_) + 1;
      return cells;
    };
    while (total_cells() > 64.0 * static_cast<double>(members.size())) cell_ *= 2;

    for (std::size_t m : members) {
      alive_[m] = true;
      ++live_;
      const Range r = range(boxes_[m]);
      if (r.cells > kWideCells) {
        wide_.push_back(m);
        continue;
      }
      for_each_cell(r, [&](const Key& key) { cells_[key].push_back(m); });
    }
  }

  std::optional<std::size_t> query(std::size_t probe) override {
    if (live_ == 0) return std::nullopt;
    ++stamp_;
    std::optional<std::size_t> found;
    auto test = [&](std::size_t m) {
      if (found || m == probe || seen_[m] == stamp_) return;
      seen_[m] = stamp_;
      if (objects_.intersects(probe, m)) found = m;
    };
    compact(wide_);
    for (std::size_t m : wide_) test(m);
    if (found) return found;

    const Box box = objects_.bounds(probe);
    const Range r = range(box);
    if (r.cells > static_cast<double>(cells_.size())) {
      for (auto& [key, bucket] : cells_) {
        compact(bucket);
        for (std::size_t m : bucket) test(m);
        if (found) return found;
      }
      return found;
    }
    for_each_cell(r, [&](const Key& key) {
      if (found) return;
      const auto it = cells_.find(key);
      if (it == cells_.end()) return;
      compact(it->second);
      for (std::size_t m : it->second) test(m);
    });
    return found;
  }

  void remove(std::size_t member) override {
    if (!alive_[member]) return;
    alive_[member] = false;
    --live_;
  }

  std::size_t live() const override { return live_; }

 private:
  static constexpr double kWideCells = 4096;

  struct Key {
    std::array<std::int64_t, 3> c{};
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = 1469598103934665603ULL;
      for (std::int64_t v : k.c) {
        h ^= static_cast<std::uint64_t>(v) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };
  struct Range {
    std::array<std::int64_t, 3> lo{};
    std::array<std::int64_t, 3> hi{};
    double cells = 1;
  };

  std::int64_t cell_index(double v, std::size_t k) const {
    const double c = std::floor((v - lo_[k]) / cell_);
    return static_cast<std::int64_t>(std::clamp(c, -1e15, 1e15));
  }

  Range range(const Box& box) const {
    Range r;
    for (std::size_t k = 0; k < dims_; ++k) {
      r.lo[k] = cell_index(box.lo[k], k);
      r.hi[k] = cell_index(box.hi[k], k);
      r.cells *= static_cast<double>(r.hi[k] - r.lo[k] + 1);
    }
    return r;
  }

  template <class F>
  void for_each_cell(const Range& r, F&& f) const {
    Key key;
    const std::int64_t z_hi = dims_ > 2 ? r.hi[2] : 0;
    const std::int64_t y_hi = dims_ > 1 ? r.hi[1] : 0;
    for (std::int64_t z = dims_ > 2 ? r.lo[2] : 0; z <= z_hi; ++z) {
      for (std::int64_t y = dims_ > 1 ? r.lo[1] : 0; y <= y_hi; ++y) {
        for (std::int64_t x = r.lo[0]; x <= r.hi[0]; ++x) {
          key.c = {x, y, z};
          f(key);
        }
      }
    }
  }

  void compact(std::vector<std::size_t>& bucket) {
    std::erase_if(bucket, [&](std::size_t m) { return !alive_[m]; });
  }

  const ObjectSet& objects_;
  std::size_t dims_ = 1;
  std::array<double, 3> lo_{HUGE_VAL, HUGE_VAL, HUGE_VAL};
  std::array<double, 3> hi_{-HUGE_VAL, -HUGE_VAL, -HUGE_VAL};
  double cell_ = 1;
  std::vector<Box> boxes_;
  std::unordered_map<Key, std::vector<std::size_t>, KeyHash> cells_;
  std::vector<std::size_t> wide_;
  std::vector<bool> alive_;
  std::vector<std::uint64_t> seen_;
  std::uint64_t stamp_ = 0;
  std::size_t live_ = 0;
};

}  // namespace

std::unique_ptr<DecrementalDetector> make_naive_detector(const ObjectSet& objects,
                                                         std::span<const std::size_t> members) {
  return std::make_unique<NaiveDetector>(objects, members);
}

std::unique_ptr<DecrementalDetector> make_grid_detector(const ObjectSet& objects,
                                                        std::span<const std::size_t> members) {
  return std::make_unique<GridDetector>(objects, members);
}

DetectorFactory naive_detector_factory() { return make_naive_detector; }
DetectorFactory grid_detector_factory() { return make_grid_detector; }

// ---------------------------------------------------------------------------
// Spanning forest

std::vector<std::size_t> SpanningForest::path(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> left{a};
  std::vector<std::size_t> right{b};
  while (depth[a] > depth[b]) left.push_back(a = parent[a]);
  while (depth[b] > depth[a]) right.push_back(b = parent[b]);
  while (a != b) {
    if (parent[a] == kRoot || parent[b] == kRoot) throw std::logic_error("spanning forest: nodes in different trees");
    left.push_back(a = parent[a]);
    right.push_back(b = parent[b]);
  }
  right.pop_back();
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

SpanningForest spanning_forest(const ObjectSet& objects, std::span<const std::size_t> members,
                               const DetectorFactory& factory) {
  SpanningForest f;
  f.members.assign(members.begin(), members.end());
  f.parent.assign(objects.size(), SpanningForest::kRoot);
  f.depth.assign(objects.size(), 0);
  std::vector<bool> visited(objects.size(), false);

  std::unique_ptr<DecrementalDetector> detector = factory(objects, members);
  std::vector<std::size_t> stack;
  for (std::size_t root : members) {
    if (visited[root]) continue;
    visited[root] = true;
    detector->remove(root);
    stack.push_back(root);
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      ++f.queries;
      const std::optional<std::size_t> y = detector->query(x);
      if (!y) {
        stack.pop_back();
        continue;
      }
      if (visited[*y]) throw InvariantError("detector returned a removed object");
      visited[*y] = true;
      detector->remove(*y);
      f.parent[*y] = static_cast<std::uint32_t>(x);
      f.depth[*y] = f.depth[x] + 1;
      f.edges.emplace_back(x, *y);
      stack.push_back(*y);
    }
  }
  if (!members.empty() && f.queries >= 2 * members.size()) {
    throw InvariantError("spanning forest issued " + std::to_string(f.queries) + " queries for " +
                         std::to_string(members.size()) + " objects");
  }
  return f;
}

SpanningForest spanning_forest(const ObjectSet& objects, const DetectorFactory& factory) {
  std::vector<std::size_t> all(objects.size());
  std::iota(all.begin(), all.end(), 0);
  return spanning_forest(objects, all, factory);
}

Verdict generic_bipartiteness(const ObjectSet& objects, const DetectorFactory& factory, GenericStats* stats) {
  const SpanningForest forest = spanning_forest(objects, factory);
  if (stats) {
    *stats = GenericStats{};
    stats->objects = objects.size();
    stats->queries[0] = forest.queries;
  }

  std::array<std::vector<std::size_t>, 2> classes;
  for (std::size_t i = 0; i < objects.size(); ++i) classes[forest.depth[i] % 2].push_back(i);

  for (int c = 0; c < 2; ++c) {
    const SpanningForest inner = spanning_forest(objects, classes[c], factory);
    if (stats) stats->queries[1 + c] = inner.queries;
    if (inner.edges.empty()) continue;
    const auto [x, y] = inner.edges.front();
    OddCycle cycle;
    for (std::size_t v : forest.path(x, y)) cycle.cycle.push_back(objects.id(v));
    return {std::move(cycle), Provenance::kGeneric};
  }

  Bipartite b;
  b.coloring.reserve(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i) {
    b.coloring.emplace_back(objects.id(i), forest.depth[i] % 2 == 0 ? Color::kRed : Color::kBlue);
  }
  return {std::move(b), Provenance::kGeneric};
}

}  // namespace geobip
