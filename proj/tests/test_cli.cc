#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.h"

namespace glp::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "glp");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("glp_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    write("f1.glg", "group cyclic 3\narc s t 0\narc s u 0\narc u t 1\n");
    write("f3.glg", "group cyclic 3\narc x y 0\narc x y 1\n");
    write("s3.glg", "group symmetric 3\narc s t (1,2)\narc s u id\narc u t (1,3)\n");
    write("k4.glg", "edge a b\nedge a c\nedge a d\nedge b c\nedge b d\nedge c d\n");
    write("line.glg", "edge a b\nedge b c\nedge c d\n");
    write("bad.glg", "group cyclic 3\narc u u 1\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  void write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
  }
  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, Labels) {
  Result r = run_cli({"labels", file("f1.glg"), "s", "t"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "two labels: 0, 1\n  0: s,t\n  1: s,u,t\n");
}

TEST_F(Cli, LabelsJson) {
  Result r = run_cli({"labels", file("f1.glg"), "s", "t", "--json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "labels");
  EXPECT_EQ(j["count"], "two");
  EXPECT_EQ(j["labels"], nlohmann::json::array({"0", "1"}));
  ASSERT_EQ(j["witnesses"].size(), 2u);
  EXPECT_EQ(j["witnesses"][1]["vertices"], nlohmann::json::array({"s", "u", "t"}));
  EXPECT_EQ(j["witnesses"][1]["arcs"], nlohmann::json::array({1, 2}));
  EXPECT_EQ(j["witnesses"][1]["label"], "1");
}

TEST_F(Cli, Avoid) {
  Result r = run_cli({"avoid", file("f1.glg"), "s", "t", "--forbid", "0,1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "contained\n");
  r = run_cli({"avoid", file("f1.glg"), "s", "t", "--forbid", "0,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "path with label 1: s,u,t\n");
  r = run_cli({"avoid", file("s3.glg"), "s", "t", "--forbid", "(1,2),(1,3)", "--json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"], "contained");
}

TEST_F(Cli, Balanced) {
  Result r = run_cli({"balanced", file("f3.glg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "unbalanced; witness cycle: x,y,x\n");
}

TEST_F(Cli, Three) {
  Result r = run_cli({"three", file("f1.glg"), "s", "t"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "fewer than three labels\n");
}

TEST_F(Cli, Disjoint) {
  Result r = run_cli({"disjoint2", file("k4.glg"), "a", "b", "c", "d"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("disjoint paths", 0), 0u);
  r = run_cli({"disjoint2", file("line.glg"), "a", "d", "b", "c"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "infeasible\n");
  r = run_cli({"oracle-disjoint", file("line.glg"), "a", "d", "b", "c", "--json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["feasible"], false);
}

TEST_F(Cli, OracleLabels) {
  Result r = run_cli({"oracle-labels", file("f1.glg"), "s", "t", "--json"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["overflow"], false);
  EXPECT_EQ(j["labels"].size(), 2u);
}

TEST_F(Cli, GenIsParseable) {
  Result a = run_cli({"gen", "--seed", "5", "--vertices", "6", "--edges", "9", "--group", "free:a:b"});
  Result b = run_cli({"gen", "--seed", "5", "--vertices", "6", "--edges", "9", "--group", "free:a:b"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  write("gen.glg", a.out);
  Result r = run_cli({"labels", file("gen.glg"), "v0", "v5"});
  EXPECT_EQ(r.code, 0);
}

TEST_F(Cli, Errors) {
  EXPECT_EQ(run_cli({"labels", file("bad.glg"), "s", "t"}).code, 2);
  EXPECT_EQ(run_cli({"labels", file("f1.glg"), "s", "nope"}).code, 2);
  EXPECT_EQ(run_cli({"labels", file("missing.glg"), "s", "t"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"avoid", file("f1.glg"), "s", "t", "--forbid", "1,1"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

}  // namespace
}  // namespace glp::cli
