#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "geobip/balls.hpp"
#include "geobip/error.hpp"
#include "geobip/instance.hpp"
#include "geobip/solve.hpp"
#include "geobip/svg.hpp"

namespace py = pybind11;
using namespace geobip;

namespace {

// Numbers travel as their decimal (or p/q) text, so Python ints, strings and
// Fractions are exact. Floats go through repr().
Scalar scalar(const py::handle& v) {
  if (py::isinstance<py::str>(v)) return Scalar::parse(v.cast<std::string>());
  if (py::isinstance<py::float_>(v)) return Scalar::parse(py::repr(v).cast<std::string>());
  return Scalar::parse(py::str(v).cast<std::string>());
}

py::dict to_dict(const SolveReport& r) {
  py::dict d;
  const Verdict& v = r.verdict;
  d["provenance"] = std::string(to_string(v.provenance));
  if (v.is_bipartite()) {
    d["result"] = "bipartite";
    py::dict colors;
    for (const auto& [id, c] : v.bipartite().coloring) colors[py::int_(id)] = std::string(to_string(c));
    d["colors"] = colors;
  } else {
    d["result"] = "odd_cycle";
    d["cycle"] = v.odd_cycle().cycle;
  }
  d["degeneracies"] = r.degeneracies.empty() ? std::string() : r.degeneracies.summary();
  d["rewritten"] = r.rewritten;
  return d;
}

SolveReport solve(const Instance& in, const std::string& algo) {
  const Algorithm a = parse_algorithm(algo);
  if (in.kind == InstanceKind::kSegments) return solve_segments(in.segments, in.mode, a);
  return solve_balls(in.balls, a);
}

Instance segments_instance(const py::iterable& items, const std::string& mode) {
  Instance in;
  in.mode = parse_mode(mode);
  for (const py::handle& item : items) {
    const py::tuple t = py::reinterpret_borrow<py::object>(item).cast<py::tuple>();
    if (t.size() != 5) throw ParseError("segment items are (id, x1, y1, x2, y2)");
    in.segments.push_back(
        {t[0].cast<ObjectId>(), {scalar(t[1]), scalar(t[2])}, {scalar(t[3]), scalar(t[4])}});
  }
  return in;
}

Instance balls_instance(const py::iterable& items) {
  Instance in;
  in.kind = InstanceKind::kBalls;
  for (const py::handle& item : items) {
    const py::tuple t = py::reinterpret_borrow<py::object>(item).cast<py::tuple>();
    if (t.size() != 3) throw ParseError("ball items are (id, center, radius)");
    Ball b{t[0].cast<ObjectId>(), {}, scalar(t[2])};
    for (const py::handle& c : t[1].cast<py::iterable>()) b.center.push_back(scalar(c));
    in.balls.push_back(std::move(b));
  }
  if (!in.balls.empty()) in.dim = in.balls.front().center.size();
  if (in.dim == 2) in.kind = InstanceKind::kDisks;
  return in;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bipartiteness of segment and ball intersection graphs with checkable witnesses";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  m.def(
      "check_json", [](const std::string& text, const std::string& algo) { return to_dict(solve(parse_instance(text), algo)); },
      py::arg("instance"), py::arg("algo") = "auto");
  m.def(
      "check_segments",
      [](const py::iterable& items, const std::string& mode, const std::string& algo) {
        return to_dict(solve(segments_instance(items, mode), algo));
      },
      py::arg("segments"), py::arg("mode") = "closed", py::arg("algo") = "auto");
  m.def(
      "check_balls",
      [](const py::iterable& items, const std::string& algo) { return to_dict(solve(balls_instance(items), algo)); },
      py::arg("balls"), py::arg("algo") = "auto");
  m.def(
      "generate",
      [](const std::string& kind, std::size_t n, std::uint64_t seed, bool bipartite, double degree) {
        const GenOptions o{n, seed, bipartite, degree};
        Instance in;
        if (kind == "segments") {
          in.segments = generate_segments(o);
        } else if (kind == "disks") {
          in.kind = InstanceKind::kDisks;
          in.balls = generate_disks(o);
        } else {
          throw ParseError("unknown kind '" + kind + "'");
        }
        return instance_to_json(in);
      },
      py::arg("kind"), py::arg("n"), py::arg("seed") = 1, py::arg("bipartite") = false, py::arg("degree") = 1.5);
  m.def(
      "svg",
      [](const std::string& text, bool with_verdict) {
        const Instance in = parse_instance(text);
        if (!with_verdict) return render_svg(in);
        return render_svg(in, solve(in, "auto").verdict);
      },
      py::arg("instance"), py::arg("with_verdict") = true);
  m.def("degree_cap", &degree_cap, py::arg("d"));
}
