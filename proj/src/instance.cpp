#include "geobip/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "geobip/error.hpp"

namespace geobip {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string_view to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kSegments:
      return "segments";
    case InstanceKind::kDisks:
      return "disks";
    case InstanceKind::kBalls:
      return "balls";
  }
  return "unknown";
}

std::string_view to_string(SegmentMode mode) { return mode == SegmentMode::kClosed ? "closed" : "open"; }

SegmentMode parse_mode(std::string_view text) {
  if (text == "closed") return SegmentMode::kClosed;
  if (text == "open") return SegmentMode::kOpen;
  throw ParseError("unknown segment mode '" + std::string(text) + "'");
}

namespace {

// DOM builder that keeps every non-integer number as its source text, so
// "0.1" and 0.1 both reach Scalar::parse unchanged. Integers too wide for
// 64 bits arrive here as well.
class ExactSax : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<json>;
  using Base::Base;

  bool number_float(number_float_t /*value*/, const string_t& text) {
    string_t copy = text;
    return Base::string(copy);
  }
};

json parse_exact(std::string_view text) {
  json root;
  ExactSax sax(root, true);
  try {
    if (!json::sax_parse(text.begin(), text.end(), &sax)) throw ParseError("malformed JSON document");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
  return root;
}

Scalar scalar_of(const json& v, const char* what) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(mpq_class(v.dump()));
  throw ParseError(std::string(what) + ": expected a number or a decimal string");
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

ObjectId id_of(const json& item) {
  const json& v = field(item, "id");
  if (!v.is_number_integer()) throw ParseError("item id must be an integer");
  return v.get<ObjectId>();
}

Point2 point_of(const json& v) {
  if (!v.is_array() || v.size() != 2) throw ParseError("a point is an array of two coordinates");
  return {scalar_of(v[0], "coordinate"), scalar_of(v[1], "coordinate")};
}

}  // namespace

Instance parse_instance(std::string_view json_text) {
  const json doc = parse_exact(json_text);
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  Instance inst;
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) throw ParseError("'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "segments") {
    inst.kind = InstanceKind::kSegments;
  } else if (k == "disks") {
    inst.kind = InstanceKind::kDisks;
  } else if (k == "balls") {
    inst.kind = InstanceKind::kBalls;
  } else {
    throw ParseError("unknown kind '" + k + "'");
  }
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw ParseError("'mode' must be a string");
    inst.mode = parse_mode(doc["mode"].get<std::string>());
  }
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0) {
      throw ParseError("'dim' must be a positive integer");
    }
    inst.dim = doc["dim"].get<std::size_t>();
    if (inst.kind == InstanceKind::kDisks && inst.dim != 2) throw ParseError("disks have dimension 2");
  } else if (inst.kind == InstanceKind::kBalls) {
    throw ParseError("balls need 'dim'");
  }

  const json& items = field(doc, "items");
  if (!items.is_array()) throw ParseError("'items' must be an array");
  std::set<ObjectId> seen;
  for (const json& item : items) {
    const ObjectId id = id_of(item);
    if (!seen.insert(id).second) throw ParseError("duplicate id " + std::to_string(id));
    if (inst.kind == InstanceKind::kSegments) {
      Segment s{id, point_of(field(item, "p")), point_of(field(item, "q"))};
      if (s.p == s.q) throw ParseError("segment " + std::to_string(id) + " has zero length");
      inst.segments.push_back(std::move(s));
    } else {
      const json& c = field(item, "c");
      if (!c.is_array() || c.size() != inst.dim) {
        throw ParseError("ball " + std::to_string(id) + " center must have " + std::to_string(inst.dim) +
                         " coordinates");
      }
      Ball b{id, {}, scalar_of(field(item, "r"), "radius")};
      for (const json& x : c) b.center.push_back(scalar_of(x, "coordinate"));
      if (b.radius.sign() <= 0) throw ParseError("ball " + std::to_string(id) + " radius must be positive");
      inst.balls.push_back(std::move(b));
    }
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance(text.str());
}

std::string instance_to_json(const Instance& instance) {
  ordered_json doc;
  doc["kind"] = to_string(instance.kind);
  if (instance.kind == InstanceKind::kSegments) doc["mode"] = to_string(instance.mode);
  if (instance.kind == InstanceKind::kBalls) doc["dim"] = instance.dim;
  ordered_json items = ordered_json::array();
  if (instance.kind == InstanceKind::kSegments) {
    for (const Segment& s : instance.segments) {
      items.push_back({{"id", s.id},
                       {"p", {s.p.x.decimal_str(), s.p.y.decimal_str()}},
                       {"q", {s.q.x.decimal_str(), s.q.y.decimal_str()}}});
    }
  } else {
    for (const Ball& b : instance.balls) {
      ordered_json c = ordered_json::array();
      for (const Scalar& x : b.center) c.push_back(x.decimal_str());
      items.push_back({{"id", b.id}, {"c", std::move(c)}, {"r", b.radius.decimal_str()}});
    }
  }
  doc["items"] = std::move(items);
  return doc.dump();
}

std::string verdict_to_json(const Verdict& verdict) {
  ordered_json doc;
  if (verdict.is_bipartite()) {
    doc["result"] = "bipartite";
    ordered_json colors = ordered_json::object();
    for (const auto& [id, color] : verdict.bipartite().coloring) colors[std::to_string(id)] = to_string(color);
    doc["colors"] = std::move(colors);
  } else {
    doc["result"] = "odd_cycle";
    doc["cycle"] = verdict.odd_cycle().cycle;
  }
  doc["provenance"] = to_string(verdict.provenance);
  return doc.dump();
}

Verdict parse_verdict(std::string_view json_text) {
  const json doc = parse_exact(json_text);
  Verdict v;
  const std::string prov = field(doc, "provenance").get<std::string>();
  bool known = false;
  for (Provenance p : {Provenance::kSweep, Provenance::kGeneric, Provenance::kBallsCap, Provenance::kOracle,
                       Provenance::kOracleFallback}) {
    if (to_string(p) == prov) {
      v.provenance = p;
      known = true;
    }
  }
  if (!known) throw ParseError("unknown provenance '" + prov + "'");
  const std::string result = field(doc, "result").get<std::string>();
  if (result == "bipartite") {
    Bipartite b;
    // Object keys come back sorted; restore numeric id order.
    for (const auto& [key, color] : field(doc, "colors").items()) {
      const std::string c = color.get<std::string>();
      if (c != "red" && c != "blue") throw ParseError("unknown color '" + c + "'");
      b.coloring.emplace_back(std::stoll(key), c == "red" ? Color::kRed : Color::kBlue);
    }
    std::sort(b.coloring.begin(), b.coloring.end());
    v.witness = std::move(b);
  } else if (result == "odd_cycle") {
    v.witness = OddCycle{field(doc, "cycle").get<std::vector<ObjectId>>()};
  } else {
    throw ParseError("unknown result '" + result + "'");
  }
  return v;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

// Only bit-exact operations, so every platform produces the same stream.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(integer(0, i - 1))]);
  }

 private:
  std::mt19937_64 rng_;
};

constexpr std::int64_t kNano = 1000000000;

Scalar nano(std::int64_t v) { return Scalar::ratio(v, kNano); }
std::int64_t to_nano(double v) { return std::llround(v * static_cast<double>(kNano)); }

constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::vector<Segment> generate_segments(const GenOptions& o) {
  Draw draw(o.seed);
  std::vector<Segment> out;
  out.reserve(o.n);
  // Endpoint abscissae are kept pairwise distinct.
  std::unordered_set<std::int64_t> used;
  auto fresh = [&](std::int64_t a, std::int64_t b) {
    if (a == b || used.count(a) || used.count(b)) return false;
    used.insert(a);
    used.insert(b);
    return true;
  };
  if (o.bipartite) {
    // Layer A runs right with slope 1/80, layer B runs up with run 1/80.
    // Every A spans x in [0.1, 0.8] at heights in [0.3, 0.71]; every B spans
    // y in [0.1, 0.8] at abscissae in [0.3, 0.71]; so all cross-layer pairs
    // cross and each layer consists of parallel translates.
    const std::size_t na = o.n / 2;
    for (std::size_t i = 0; i < o.n; ++i) {
      const auto id = static_cast<ObjectId>(i);
      const bool in_a = i < na;
      const std::int64_t dx = in_a ? 8 * kNano / 10 : kNano / 100;
      const std::int64_t dy = in_a ? kNano / 100 : 8 * kNano / 10;
      std::int64_t x;
      std::int64_t y;
      do {
        x = in_a ? draw.integer(0, kNano / 10) : draw.integer(3 * kNano / 10, 7 * kNano / 10);
        y = in_a ? draw.integer(3 * kNano / 10, 7 * kNano / 10) : draw.integer(0, kNano / 10);
      } while (!fresh(x, x + dx));
      out.push_back({id, {nano(x), nano(y)}, {nano(x + dx), nano(y + dy)}});
    }
    return out;
  }
  // Two random segments of length L in the unit square cross with
  // probability about 2 L^2 / pi.
  const double n = static_cast<double>(std::max<std::size_t>(o.n, 2));
  const double length = std::min(0.5, std::sqrt(kPi * o.degree / (2.0 * n)));
  for (std::size_t i = 0; i < o.n; ++i) {
    std::int64_t px, py, qx, qy;
    do {
      double dx;
      double dy;
      do {
        dx = draw.uniform(-1, 1);
        dy = draw.uniform(-1, 1);
      } while (dx * dx + dy * dy > 1 || dx * dx + dy * dy < 1e-4);
      const double norm = std::sqrt(dx * dx + dy * dy);
      const double half = 0.5 * length * draw.uniform(0.5, 1.5) / norm;
      const double cx = draw.uniform(0.05, 0.95);
      const double cy = draw.uniform(0.05, 0.95);
      px = to_nano(cx - half * dx);
      qx = to_nano(cx + half * dx);
      py = to_nano(cy - half * dy);
      qy = to_nano(cy + half * dy);
    } while (!fresh(px, qx));
    out.push_back({static_cast<ObjectId>(i), {nano(px), nano(py)}, {nano(qx), nano(qy)}});
  }
  return out;
}

std::vector<Ball> generate_disks(const GenOptions& o) {
  Draw draw(o.seed);
  std::vector<Ball> out;
  out.reserve(o.n);
  if (o.bipartite) {
    // Packing A at cell centers, packing B at cell corners. Jitter of 5% of
    // the spacing and radii of at most 40% keep each packing disjoint;
    // diagonal A-B distance is about 71% of the spacing, so most neighbors
    // across packings overlap.
    const std::size_t na = o.n / 2;
    const std::size_t nb = o.n - na;
    const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(std::max(na, nb)) / 0.7)));
    const double s = 1.0 / static_cast<double>(std::max<std::size_t>(side, 1));
    std::vector<std::size_t> cells_a(side * side);
    std::vector<std::size_t> cells_b(side * side);
    for (std::size_t c = 0; c < cells_a.size(); ++c) cells_a[c] = cells_b[c] = c;
    draw.shuffle(cells_a);
    draw.shuffle(cells_b);
    for (std::size_t i = 0; i < o.n; ++i) {
      const bool in_a = i < na;
      const std::size_t cell = in_a ? cells_a[i] : cells_b[i - na];
      const double offset = in_a ? 0.5 : 1.0;
      const double cx = (static_cast<double>(cell % side) + offset) * s + draw.uniform(-0.05, 0.05) * s;
      const double cy = (static_cast<double>(cell / side) + offset) * s + draw.uniform(-0.05, 0.05) * s;
      const double r = draw.uniform(0.36, 0.4) * s;
      out.push_back({static_cast<ObjectId>(i), {nano(to_nano(cx)), nano(to_nano(cy))}, nano(std::max<std::int64_t>(to_nano(r), 1))});
    }
    return out;
  }
  // Expected degree n * pi * (2r)^2 for uniform centers.
  const double n = static_cast<double>(std::max<std::size_t>(o.n, 1));
  const double radius = std::sqrt(o.degree / (4.0 * kPi * n));
  for (std::size_t i = 0; i < o.n; ++i) {
    const double cx = draw.unit();
    const double cy = draw.unit();
    const double r = radius * draw.uniform(0.5, 1.5);
    out.push_back({static_cast<ObjectId>(i), {nano(to_nano(cx)), nano(to_nano(cy))}, nano(std::max<std::int64_t>(to_nano(r), 1))});
  }
  return out;
}

}  // namespace geobip
