#include "geobip/verdict.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace geobip {

OddCycle canonical(OddCycle c) {
  auto& v = c.cycle;
  if (v.size() < 3) return c;
  std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
  if (v.back() < v[1]) std::reverse(v.begin() + 1, v.end());
  return c;
}

std::string_view to_string(Color c) { return c == Color::kRed ? "red" : "blue"; }

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kSweep:
      return "sweep";
    case Provenance::kGeneric:
      return "generic";
    case Provenance::kBallsCap:
      return "balls-cap";
    case Provenance::kOracle:
      return "oracle";
    case Provenance::kOracleFallback:
      return "oracle-fallback";
  }
  return "unknown";
}

namespace {

ValidationResult fail(std::string message) { return {false, std::move(message)}; }

}  // namespace

ValidationResult validate(const ObjectSet& objects, const Verdict& verdict) {
  std::unordered_map<ObjectId, std::size_t> index;
  index.reserve(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (!index.emplace(objects.id(i), i).second) {
      return fail("duplicate object id " + std::to_string(objects.id(i)));
    }
  }

  if (verdict.is_bipartite()) {
    const auto& coloring = verdict.bipartite().coloring;
    if (coloring.size() != objects.size()) return fail("coloring does not cover every object");
    std::vector<int> color(objects.size(), -1);
    for (const auto& [id, c] : coloring) {
      auto it = index.find(id);
      if (it == index.end()) return fail("coloring names unknown id " + std::to_string(id));
      if (color[it->second] != -1) return fail("id colored twice: " + std::to_string(id));
      color[it->second] = c == Color::kRed ? 0 : 1;
    }
    for (std::size_t i = 0; i < objects.size(); ++i) {
      for (std::size_t j = i + 1; j < objects.size(); ++j) {
        if (color[i] == color[j] && objects.intersects(i, j)) {
          return fail("same-colored objects " + std::to_string(objects.id(i)) + " and " +
                      std::to_string(objects.id(j)) + " intersect");
        }
      }
    }
    return {};
  }

  const auto& cycle = verdict.odd_cycle().cycle;
  if (cycle.size() < 3) return fail("odd cycle shorter than 3");
  if (cycle.size() % 2 == 0) return fail("cycle has even length " + std::to_string(cycle.size()));
  std::unordered_set<ObjectId> seen;
  std::vector<std::size_t> members;
  members.reserve(cycle.size());
  for (ObjectId id : cycle) {
    auto it = index.find(id);
    if (it == index.end()) return fail("cycle names unknown id " + std::to_string(id));
    if (!seen.insert(id).second) return fail("cycle repeats id " + std::to_string(id));
    members.push_back(it->second);
  }
  for (std::size_t k = 0; k < members.size(); ++k) {
    const std::size_t a = members[k];
    const std::size_t b = members[(k + 1) % members.size()];
    if (!objects.intersects(a, b)) {
      return fail("cycle objects " + std::to_string(objects.id(a)) + " and " + std::to_string(objects.id(b)) +
                  " do not intersect");
    }
  }
  return {};
}

}  // namespace geobip
