#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "geobip/cli.hpp"
#include "geobip/instance.hpp"
#include "geobip/solve.hpp"

using namespace geobip;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "geobip");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(GEOBIP_DATA_DIR) + "/" + name; }

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "geobip_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST(Cli, TwoCrossing) {
  const Outcome r = run({"check", data("two_crossing.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"result\":\"bipartite\",\"colors\":{\"0\":\"red\",\"1\":\"blue\"},\"provenance\":\"sweep\"}\n");
}

TEST(Cli, Triangle) {
  const Outcome r = run({"check", data("triangle.json"), "--verify"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "{\"result\":\"odd_cycle\",\"cycle\":[0,1,2],\"provenance\":\"sweep\"}\n");
  EXPECT_NE(r.err.find("verify: ok"), std::string::npos);
}

TEST(Cli, BadInputIsUsageError) {
  EXPECT_EQ(run({"check", data("bad.json")}).code, 2);
  EXPECT_EQ(run({"check", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"check", data("two_crossing.json"), "--algo", "fast"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check", data("disks_path.json"), "--algo", "sweep"}).code, 2);
  EXPECT_EQ(run({"check", data("disks_path.json"), "--mode", "open"}).code, 2);
}

TEST(Cli, Algorithms) {
  for (const char* algo : {"auto", "sweep", "generic", "oracle"}) {
    const Outcome r = run({"check", data("triangle.json"), "--algo", algo, "--verify"});
    EXPECT_EQ(r.code, 1) << algo;
  }
  EXPECT_EQ(run({"check", data("disks_path.json"), "--algo", "balls"}).code, 0);
  EXPECT_EQ(run({"check", data("balls3.json"), "--verify"}).code, 1);
}

TEST(Cli, DegenerateInputs) {
  const Outcome touch = run({"check", data("touching_triangle.json")});
  EXPECT_EQ(touch.code, 1);
  EXPECT_NE(touch.out.find("\"provenance\":\"sweep\""), std::string::npos);
  EXPECT_NE(touch.err.find("resolved by an exact rewrite"), std::string::npos);
  EXPECT_EQ(run({"check", data("touching_triangle.json"), "--mode", "open"}).code, 0);

  const Outcome conc = run({"check", data("concurrent.json"), "--verify"});
  EXPECT_EQ(conc.code, 1);
  EXPECT_NE(conc.out.find("oracle-fallback"), std::string::npos);
  EXPECT_EQ(run({"check", data("concurrent.json"), "--algo", "sweep"}).code, 2);
}

TEST(Cli, Svg) {
  const Outcome r = run({"check", data("triangle.json"), "--out", "svg"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
  EXPECT_NE(r.out.find("#ff8c00"), std::string::npos);
  const Outcome b = run({"check", data("two_crossing.json"), "--out", "svg"});
  EXPECT_NE(b.out.find("#d62728"), std::string::npos);
  EXPECT_NE(b.out.find("#1f4fd6"), std::string::npos);
}

TEST(Cli, GenIsDeterministic) {
  const Outcome a = run({"gen", "segments", "50", "--seed", "9"});
  const Outcome b = run({"gen", "segments", "50", "--seed", "9"});
  const Outcome c = run({"gen", "segments", "50", "--seed", "10"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(parse_instance(a.out).size(), 50u);
}

// Every verdict the tool emits passes its own --verify, and the emitted JSON
// re-parses and re-validates.
TEST(Cli, VerifyAcrossGeneratedCorpus) {
  int runs = 0;
  for (const char* kind : {"segments", "disks"}) {
    for (const char* bip : {"", "--bipartite"}) {
      for (int seed = 1; seed <= 6; ++seed) {
        const std::string file = scratch(std::string(kind) + bip + std::to_string(seed) + ".json");
        std::vector<std::string> args{"gen", kind, "120", "--seed", std::to_string(seed), "-o", file};
        if (*bip) args.push_back(bip);
        ASSERT_EQ(run(args).code, 0);
        for (const char* algo : {"auto", "generic", "oracle"}) {
          const Outcome r = run({"check", file, "--algo", algo, "--verify"});
          ASSERT_TRUE(r.code == 0 || r.code == 1) << file << ' ' << algo << ": " << r.err;
          if (*bip) {
            EXPECT_EQ(r.code, 0);
          }
          const Verdict v = parse_verdict(r.out);
          const Instance inst = load_instance(file);
          if (inst.kind == InstanceKind::kSegments) {
            EXPECT_TRUE(validate(SegmentSet(inst.segments, inst.mode), v));
          } else {
            EXPECT_TRUE(validate(BallSet(inst.balls), v));
          }
          ++runs;
        }
      }
    }
  }
  EXPECT_EQ(runs, 72);
}

TEST(Cli, Bench) {
  const Outcome r = run({"bench", "gen:segments:200:bipartite:seed=3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("instance: segments n=200"), std::string::npos);
  EXPECT_NE(r.out.find("sweep: bipartite events="), std::string::npos);
  EXPECT_NE(r.out.find("generic: bipartite queries="), std::string::npos);
  EXPECT_NE(r.out.find("oracle: bipartite edges="), std::string::npos);
  const Outcome d = run({"bench", data("disks_path.json"), "--algo", "balls"});
  EXPECT_NE(d.out.find("balls: bipartite"), std::string::npos);
  EXPECT_EQ(run({"bench", "gen:segments"}).code, 2);
  EXPECT_EQ(run({"bench", "gen:segments:x"}).code, 2);
}
