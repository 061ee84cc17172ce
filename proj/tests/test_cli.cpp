#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "vtypes/constructions.hpp"
#include "vtypes/graph6.hpp"
#include "vtypes/primitives.hpp"

namespace vtypes {
namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through /bin/sh with stderr discarded.
Run run(const std::string& args, const std::string& input_lines = "") {
  std::string cmd = std::string(VTYPES_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!input_lines.empty()) cmd = "printf '%s\\n' " + input_lines + " | " + cmd;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tuple_field(const std::string& json_line) {
  const auto at = json_line.find("\"tuple\":");
  return json_line.substr(at, json_line.find(']', at) - at + 1);
}

TEST(Cli, ClassifyCompleteGraph) {
  const auto r = run("classify", "'C~'");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "{\"graph6\":\"C~\",\"order\":4,\"degree_sequence\":[3,3,3,3],"
            "\"types\":[\"R\",\"R\",\"R\",\"R\"],\"tuple\":[0,0,4,0,0,0,0],\"pantypical\":false}\n");
}

TEST(Cli, ClassifyStarAndExtremal) {
  const auto star = emit_graph6(star_graph(3));
  const auto ext = emit_graph6(t_extremal(9));
  const auto r = run("classify", "'" + star + "' '" + ext + "'");
  ASSERT_EQ(r.exit_code, 0);
  const auto nl = r.out.find('\n');
  EXPECT_EQ(tuple_field(r.out.substr(0, nl)), "\"tuple\":[1,0,0,0,0,0,3]");
  EXPECT_EQ(tuple_field(r.out.substr(nl + 1)), "\"tuple\":[1,0,0,0,7,0,1]");
}

TEST(Cli, ClassifyContinuesPastBadLines) {
  const auto r = run("classify", "'C~' 'bad line' '@'");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
}

TEST(Cli, ClassifyEdgeList) {
  const auto r = run("classify --format edge-list", "'4 0 1 1 2 2 3'");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"types\":[\"VW\",\"S\",\"S\",\"VW\"]"), std::string::npos);
}

TEST(Cli, ConstructWithCheck) {
  auto r = run("construct t 9 --check");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, emit_graph6(t_extremal(9)) + "\ntypical=7\n");
  r = run("construct vt 12 --check");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, emit_graph6(vt_extremal(12)) + "\nvery_typical=10\n");
  r = run("construct pantypical 150 --check");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("pantypical=true"), std::string::npos);
}

TEST(Cli, ConstructOutOfRange) {
  EXPECT_EQ(run("construct pantypical 8").exit_code, 2);
  EXPECT_EQ(run("construct vt 4").exit_code, 2);
  EXPECT_EQ(run("construct vt 300").exit_code, 2);
  EXPECT_EQ(run("construct nope 9").exit_code, 2);
}

TEST(Cli, EnumerateCountsAndStreams) {
  EXPECT_EQ(run("enumerate 6 --count").out, "156\n");
  EXPECT_EQ(run("enumerate 6 --min-degree 1 --max-degree 2 --count").out, "8\n");
  const auto stream = run("enumerate 4");
  EXPECT_EQ(std::count(stream.out.begin(), stream.out.end(), '\n'), 11);
  // Piping an enumeration into classify.
  const auto piped = run("enumerate 5 | " + std::string(VTYPES_CLI_PATH) + " classify");
  EXPECT_EQ(std::count(piped.out.begin(), piped.out.end(), '\n'), 34);
}

TEST(Cli, GuardNeedsAcknowledgment) {
  EXPECT_EQ(run("enumerate 11 --count").exit_code, 2);
  EXPECT_EQ(run("enumerate 3 --guard 11 --count").exit_code, 2);
  EXPECT_EQ(run("enumerate 3 --guard 11 --allow-large-guard --count").out, "4\n");
}

TEST(Cli, VerifyExitCodes) {
  auto r = run("verify theorem1 --n-max 7");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2 * 7 + 2);
  EXPECT_EQ(run("verify theorem3 --n-max 8").exit_code, 0);
  EXPECT_EQ(run("verify figure1").exit_code, 0);
  // The all-graphs minimum pantypical size at order 9 is 10, not 11.
  r = run("verify pansize");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("\"claim\":\"pansize\",\"n\":9,\"found\":10,\"expected\":11"),
            std::string::npos);
  EXPECT_EQ(run("verify nonsense").exit_code, 2);
  EXPECT_EQ(run("verify theorem1 --n-max 11").exit_code, 2);
}

TEST(Cli, OutputIsDeterministic) {
  const auto a = run("verify theorem1 --n-max 6");
  const auto b = run("verify theorem1 --n-max 6");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("enumerate 6 --jobs 3").out, run("enumerate 6").out);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "vtypes_cli_test.g6";
  ASSERT_EQ(run("construct vt 20 --output " + path.string()).exit_code, 0);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, emit_graph6(vt_extremal(20)));
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("construct").exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}

}  // namespace
}  // namespace vtypes
