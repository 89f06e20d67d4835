#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "metdim/cli.hpp"
#include "metdim/constructions.hpp"
#include "metdim/graph.hpp"

using namespace metdim;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("metdim_test_" + name);
}

}  // namespace

TEST(Cli, DimJsonForCompleteSubdivision) {
  const auto r = run({"dim", "subdiv(complete(5))", "--certify", "--json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dimension"], 3);
  EXPECT_EQ(j["certificate"], "certified");
}

TEST(Cli, DeterministicJsonIsByteIdentical) {
  const std::vector<std::string> args{"dim", "torus(4,4)", "--edge", "--json", "--deterministic"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["dimension"], 3);
}

TEST(Cli, ChainRangeIsUsageError) {
  const auto r = run({"dim", "chain(3,5)"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("4 <= c1"), std::string::npos);
}

TEST(Cli, UnknownConstructorShowsOffset) {
  const auto r = run({"dim", "subdiv(frobnicate(3))"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("offset 7"), std::string::npos);
}

TEST(Cli, ChainUsesPieces) {
  const auto r = run({"dim", "chain(4,6)", "--json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["dimension"], 6);
}

TEST(Cli, BudgetExhaustionIsFailure) {
  const auto r = run({"dim", "subdiv(complete(8))", "--budget", "10"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.out.find("upper_bound_only"), std::string::npos);
}

TEST(Cli, CheckFileFirstThenSpec) {
  const auto path = temp_file("k4.txt");
  {
    std::ofstream f(path);
    f << serialize_edge_list(subdivide(complete(4)).graph);
  }
  const auto pass = run({"check", path.string(), "--set", "0,1,2"});
  EXPECT_EQ(pass.code, kExitOk);
  EXPECT_NE(pass.out.find("pass"), std::string::npos);

  const auto fail = run({"check", path.string(), "--set", "0,1", "--edge"});
  EXPECT_EQ(fail.code, kExitFailure);
  EXPECT_NE(fail.out.find("does not resolve edge"), std::string::npos);

  const auto spec = run({"check", "subdiv(complete(4))", "--set", "0,1,2"});
  EXPECT_EQ(spec.code, kExitOk);
  std::filesystem::remove(path);
}

TEST(Cli, CheckRejectsBadSets) {
  EXPECT_EQ(run({"check", "path(3)", "--set", "0,9"}).code, kExitUsage);
  EXPECT_EQ(run({"check", "path(3)", "--set", "0,x"}).code, kExitUsage);
  EXPECT_EQ(run({"check", "path(3)", "--set", "1,1"}).code, kExitUsage);
}

TEST(Cli, BadEdgeListFileReportsLine) {
  const auto path = temp_file("bad.txt");
  {
    std::ofstream f(path);
    f << "3 2\n0 1\n1 1\n";
  }
  const auto r = run({"dim", path.string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, DisconnectedInputIsUsageError) {
  const auto path = temp_file("split.txt");
  {
    std::ofstream f(path);
    f << "4 2\n0 1\n2 3\n";
  }
  EXPECT_EQ(run({"dim", path.string()}).code, kExitUsage);
  std::filesystem::remove(path);
}

TEST(Cli, ConstructWritesEdgeList) {
  const auto r = run({"construct", "subdiv(complete(4))"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(parse_edge_list(r.out), subdivide(complete(4)).graph);

  const auto path = temp_file("cmm.txt");
  EXPECT_EQ(run({"construct", "cmm(7,1)", "-o", path.string()}).code, kExitOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(parse_edge_list(buf.str()).size(), 20u);
  std::filesystem::remove(path);
}

TEST(Cli, VerifySuite) {
  const auto r = run({"verify", "torus", "--json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "torus");
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(run({"verify", "nope"}).code, kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"dim"}).code, kExitUsage);
  EXPECT_EQ(run({"dim", "path(3)", "--pieces", "some"}).code, kExitUsage);
  EXPECT_EQ(run({"frob"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}
