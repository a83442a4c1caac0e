#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "geobip/geometry.hpp"
#include "geobip/object_set.hpp"

namespace geobip {

enum class Color { kRed, kBlue };

/// Which code path produced a verdict.
enum class Provenance { kSweep, kGeneric, kBallsCap, kOracle, kOracleFallback };

std::string_view to_string(Color c);
std::string_view to_string(Provenance p);

/// Proper 2-coloring, one entry per object in input order.
struct Bipartite {
  std::vector<std::pair<ObjectId, Color>> coloring;
};

/// Cyclic sequence of pairwise-consecutive intersecting objects of odd length.
struct OddCycle {
  std::vector<ObjectId> cycle;
};

/// The same cycle rotated to start at its smallest id and oriented toward
/// the smaller of that id's two neighbors.
OddCycle canonical(OddCycle c);

/// Witnessed answer to "is the intersection graph bipartite?".
struct Verdict {
  std::variant<Bipartite, OddCycle> witness;
  Provenance provenance = Provenance::kOracle;

  bool is_bipartite() const { return std::holds_alternative<Bipartite>(witness); }
  const Bipartite& bipartite() const { return std::get<Bipartite>(witness); }
  const OddCycle& odd_cycle() const { return std::get<OddCycle>(witness); }
};

struct ValidationResult {
  bool ok = true;
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Re-checks a witness against the objects with exact predicates only.
///
/// Bipartite: every object colored exactly once and no intersecting pair
/// shares a color (all pairs are examined). OddCycle: odd length >= 3,
/// distinct known ids, consecutive and wraparound pairs intersect.
ValidationResult validate(const ObjectSet& objects, const Verdict& verdict);

}  // namespace geobip
