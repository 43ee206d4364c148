#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

std::string write_input(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("treesym_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

Result run(const std::string& args) {
  Result r;
  std::string cmd = std::string(TREESYM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

const std::string kK1 = write_input("k1", "1\n");
const std::string kK2 = write_input("k2", "2\n0 1\n");
const std::string kP3 = write_input("p3", "3\n0 1\n1 2\n");
const std::string kClaw = write_input("claw", "4\n0 1\n0 2\n0 3\n");
const std::string kC4 = write_input("c4", "4\n0 1\n1 2\n2 3\n3 0\n");
const std::string kBad = write_input("bad", "3\n0 1\n1 7\n");

}  // namespace

TEST(Analyze, Path3) {
  auto r = run("analyze --json " + kP3);
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["a"], "2");
  EXPECT_EQ(j["motion"], 2);
  EXPECT_EQ(j["aut_order"], "2");
}

TEST(Analyze, SingleVertex) {
  auto j = json::parse(run("analyze --json " + kK1).out);
  EXPECT_EQ(j["a"], "2");
  EXPECT_EQ(j["motion"], "asymmetric");
}

TEST(Analyze, ClawNotDistinguishable) {
  auto j = json::parse(run("analyze --json " + kClaw).out);
  EXPECT_EQ(j["distinguishable"], false);
  EXPECT_TRUE(j["cameron"].is_null());
}

TEST(Analyze, Roots) {
  auto j = json::parse(run("analyze --json --all-roots " + kP3).out);
  ASSERT_EQ(j["roots"].size(), 3u);
  EXPECT_EQ(j["roots"][1]["a"], "2");
  EXPECT_EQ(j["roots"][0]["a"], "8");
  EXPECT_EQ(run("analyze --root 9 " + kP3).status, 2);
}

TEST(Analyze, ReadsStandardInput) {
  auto r = run("analyze --json - < " + kK2);
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["a"], "1");
}

TEST(Analyze, ByteStable) { EXPECT_EQ(run("analyze --json " + kP3).out, run("analyze --json " + kP3).out); }

TEST(Analyze, ParseErrorExitsTwo) {
  EXPECT_EQ(run("analyze " + kBad).status, 2);
  EXPECT_EQ(run("analyze /nonexistent/file").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(Color, SingleEdge) {
  auto r = run("color --index 0 " + kK2);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "10\n");
}

TEST(Color, Claw) { EXPECT_EQ(run("color " + kClaw).status, 3); }

TEST(Color, TwoColoringsOfPath3) {
  auto r = run("color --count 2 " + kP3);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "110\n100\n");
  EXPECT_EQ(run("verify --coloring 110 " + kP3).status, 0);
  EXPECT_EQ(run("verify --coloring 100 " + kP3).status, 0);
}

TEST(Color, IndexOutOfRange) {
  EXPECT_EQ(run("color --index 2 " + kP3).status, 3);
  EXPECT_EQ(run("color --count 3 " + kP3).status, 3);
  EXPECT_EQ(run("color --index x " + kP3).status, 2);
  EXPECT_EQ(run("color --root 0 --index 7 " + kP3).status, 0);
}

TEST(Color, Dot) {
  auto r = run("color --dot " + kK2);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("graph T {"), std::string::npos);
}

TEST(Verify, Verdicts) {
  auto ok = run("verify --coloring 10 " + kK2);
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(ok.out, "true\n");
  auto bad = run("verify --coloring 11 " + kK2);
  EXPECT_EQ(bad.status, 4);
  EXPECT_EQ(bad.out, "false\n");
  EXPECT_EQ(run("verify --coloring 010 " + kP3).status, 4);
  EXPECT_EQ(run("verify --coloring 000 --pin 0 " + kP3).status, 0);
}

TEST(Verify, MalformedBits) {
  EXPECT_EQ(run("verify --coloring 1x " + kK2).status, 2);
  EXPECT_EQ(run("verify --coloring 101 " + kK2).status, 2);
}

TEST(Oracle, Path3) {
  auto r = run("oracle --json " + kP3);
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["orbit_count"], "2");
  EXPECT_EQ(j["distinguishing_count"], "4");
  EXPECT_EQ(j["regular_action"], true);
  EXPECT_EQ(json::parse(run("analyze --json " + kP3).out)["a"], j["orbit_count"]);
}

TEST(Corpus, AllTreesCheck) {
  auto r = run("corpus --all-trees 8 --check --json");
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["suite"]["trees"], 23);
  EXPECT_EQ(j["suite"]["failed"], 0);
  EXPECT_TRUE(j["conjecture"]["counterexamples"].empty());
}

TEST(Corpus, SeededOutputIsStable) {
  auto a = run("corpus --family random-prufer --n 12 --count 5 --seed 9 --json");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, run("corpus --family random-prufer --n 12 --count 5 --seed 9 --json").out);
  EXPECT_EQ(json::parse(a.out)["trees"].size(), 5u);
}

TEST(Corpus, BadSpec) {
  EXPECT_EQ(run("corpus --family lobed-extremal --m 3").status, 2);
  EXPECT_EQ(run("corpus --family nope").status, 2);
  EXPECT_EQ(run("corpus --all-trees 13").status, 2);
}

TEST(Treelike, Cycle) {
  auto r = run("treelike --json --root 0 " + kC4);
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["forest_edges"], json::parse("[[0,1],[0,3]]"));
  EXPECT_EQ(j["treelike"], false);
}
