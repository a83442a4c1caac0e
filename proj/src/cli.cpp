#include "geobip/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "geobip/error.hpp"
#include "geobip/instance.hpp"
#include "geobip/oracle.hpp"
#include "geobip/solve.hpp"
#include "geobip/svg.hpp"

namespace geobip {

namespace {

constexpr int kExitBipartite = 0;
constexpr int kExitOddCycle = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::unique_ptr<ObjectSet> objects_of(const Instance& inst) {
  if (inst.kind == InstanceKind::kSegments) return std::make_unique<SegmentSet>(inst.segments, inst.mode);
  return std::make_unique<BallSet>(inst.balls);
}

SolveReport solve(const Instance& inst, Algorithm algo) {
  if (inst.kind == InstanceKind::kSegments) return solve_segments(inst.segments, inst.mode, algo);
  return solve_balls(inst.balls, algo);
}

struct CheckArgs {
  std::string file;
  std::string algo = "auto";
  std::string mode;
  std::string format = "json";
  bool verify = false;
};

int do_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  Instance inst = load_instance(a.file);
  if (!a.mode.empty()) {
    if (inst.kind != InstanceKind::kSegments) throw std::invalid_argument("--mode applies to segments only");
    inst.mode = parse_mode(a.mode);
  }
  const SolveReport report = solve(inst, parse_algorithm(a.algo));
  if (!report.degeneracies.empty()) {
    err << "note: " << report.degeneracies.summary()
        << (report.rewritten ? " (resolved by an exact rewrite)" : "") << '\n';
  }
  if (a.verify) {
    const ValidationResult v = validate(*objects_of(inst), report.verdict);
    if (!v) {
      err << "verify failed: " << v.message << '\n';
      return kExitInternal;
    }
    err << "verify: ok\n";
  }
  if (a.format == "svg") {
    out << render_svg(inst, report.verdict);
  } else {
    out << verdict_to_json(report.verdict) << '\n';
  }
  return report.verdict.is_bipartite() ? kExitBipartite : kExitOddCycle;
}

struct GenArgs {
  std::string kind;
  std::size_t n = 0;
  bool bipartite = false;
  std::uint64_t seed = 1;
  double degree = 1.5;
  std::string mode = "closed";
  std::string output;
};

Instance generate(const std::string& kind, const GenOptions& o) {
  Instance inst;
  if (kind == "segments") {
    inst.kind = InstanceKind::kSegments;
    inst.segments = generate_segments(o);
  } else if (kind == "disks") {
    inst.kind = InstanceKind::kDisks;
    inst.balls = generate_disks(o);
  } else {
    throw ParseError("gen: unknown kind '" + kind + "'");
  }
  return inst;
}

int do_gen(const GenArgs& a, std::ostream& out) {
  Instance inst = generate(a.kind, GenOptions{a.n, a.seed, a.bipartite, a.degree});
  inst.mode = parse_mode(a.mode);
  const std::string text = instance_to_json(inst) + "\n";
  if (a.output.empty()) {
    out << text;
  } else {
    std::ofstream file(a.output, std::ios::binary);
    if (!file) throw ParseError("cannot write '" + a.output + "'");
    file << text;
  }
  return 0;
}

// gen:segments:2000[:bipartite][:seed=S][:degree=D]
Instance bench_instance(const std::string& source) {
  if (source.rfind("gen:", 0) != 0) return load_instance(source);
  std::vector<std::string> parts;
  std::stringstream ss(source.substr(4));
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() < 2) throw ParseError("bench: expected gen:KIND:N[:bipartite][:seed=S][:degree=D]");
  GenOptions o;
  try {
    o.n = std::stoul(parts[1]);
    for (std::size_t k = 2; k < parts.size(); ++k) {
      const std::string& p = parts[k];
      if (p == "bipartite") {
        o.bipartite = true;
      } else if (p.rfind("seed=", 0) == 0) {
        o.seed = std::stoull(p.substr(5));
      } else if (p.rfind("degree=", 0) == 0) {
        o.degree = std::stod(p.substr(7));
      } else {
        throw ParseError("bench: unknown generator option '" + p + "'");
      }
    }
  } catch (const std::logic_error&) {
    throw ParseError("bench: malformed generator string '" + source + "'");
  }
  return generate(parts[0], o);
}

int do_bench(const std::string& source, std::vector<std::string> algos, std::ostream& out) {
  const Instance inst = bench_instance(source);
  const bool segments = inst.kind == InstanceKind::kSegments;
  if (algos.empty()) algos = segments ? std::vector<std::string>{"sweep", "generic", "oracle"}
                                      : std::vector<std::string>{"balls", "generic", "oracle"};
  out << "instance: " << to_string(inst.kind) << " n=" << inst.size() << '\n';
  const std::unique_ptr<ObjectSet> objects = objects_of(inst);

  for (const std::string& name : algos) {
    const Algorithm algo = parse_algorithm(name);
    std::string result;
    std::string counters;
    const auto start = std::chrono::steady_clock::now();
    try {
      if (segments && algo == Algorithm::kSweep) {
        // The raw sweep, without the quadratic degeneracy scan in front.
        SegmentSweep sweep(inst.segments, inst.mode);
        result = sweep.run().is_bipartite() ? "bipartite" : "odd_cycle";
        counters = " events=" + std::to_string(sweep.stats().events) +
                   " crossings=" + std::to_string(sweep.stats().crossings) +
                   " max_bundles=" + std::to_string(sweep.stats().max_bundles);
      } else if (algo == Algorithm::kGeneric) {
        GenericStats st;
        result = generic_bipartiteness(*objects, grid_detector_factory(), &st).is_bipartite() ? "bipartite" : "odd_cycle";
        counters = " queries=" + std::to_string(st.queries[0] + st.queries[1] + st.queries[2]);
      } else if (algo == Algorithm::kOracle) {
        const IntersectionGraph g = build_graph(*objects);
        result = bfs_bipartiteness(g).is_bipartite() ? "bipartite" : "odd_cycle";
        counters = " edges=" + std::to_string(g.edges);
      } else {
        const SolveReport r = solve(inst, algo);
        result = r.verdict.is_bipartite() ? "bipartite" : "odd_cycle";
        if (r.balls) counters = " edges=" + std::to_string(r.balls->edges);
      }
    } catch (const DegenerateInputError& e) {
      result = "degenerate";
      counters = std::string(" (") + e.what() + ")";
    } catch (const std::invalid_argument& e) {
      result = "unsupported";
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    char time[32];
    std::snprintf(time, sizeof time, "%.3f", ms);
    out << to_string(algo) << ": " << result << counters << " ms=" << time << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartiteness of geometric intersection graphs with checkable witnesses", "geobip"};
  app.require_subcommand(1);

  CheckArgs check;
  CLI::App* check_cmd = app.add_subcommand("check", "Decide bipartiteness of an instance file");
  check_cmd->add_option("file", check.file, "Instance JSON")->required();
  check_cmd->add_option("--algo", check.algo, "auto|sweep|generic|balls|oracle")
      ->check(CLI::IsMember({"auto", "sweep", "generic", "balls", "oracle"}));
  check_cmd->add_option("--mode", check.mode, "Override segment mode")->check(CLI::IsMember({"closed", "open"}));
  check_cmd->add_option("--out", check.format, "json|svg")->check(CLI::IsMember({"json", "svg"}));
  check_cmd->add_flag("--verify", check.verify, "Re-check the witness with exact predicates");

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a pseudo-random instance");
  gen_cmd->add_option("kind", gen.kind, "segments|disks")->required()->check(CLI::IsMember({"segments", "disks"}));
  gen_cmd->add_option("n", gen.n, "Number of objects")->required();
  gen_cmd->add_flag("--bipartite", gen.bipartite, "Two layers that only intersect across");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--degree", gen.degree, "Target mean degree (unconstrained generators)");
  gen_cmd->add_option("--mode", gen.mode, "Segment mode written to the file")->check(CLI::IsMember({"closed", "open"}));
  gen_cmd->add_option("-o,--output", gen.output, "Write to a file instead of stdout");

  std::string bench_source;
  std::vector<std::string> bench_algos;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time the algorithms on one instance");
  bench_cmd->add_option("source", bench_source, "Instance JSON or gen:KIND:N[:bipartite][:seed=S][:degree=D]")
      ->required();
  bench_cmd->add_option("--algo", bench_algos, "Algorithms to run (repeatable)")
      ->check(CLI::IsMember({"auto", "sweep", "generic", "balls", "oracle"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return do_check(check, out, err);
    if (gen_cmd->parsed()) return do_gen(gen, out);
    return do_bench(bench_source, bench_algos, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateInputError& e) {
    err << "error: degenerate input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace geobip
