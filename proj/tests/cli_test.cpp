#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "meyer/cli.hpp"

#ifndef MEYER_FIXTURE_DIR
#error "MEYER_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace meyer {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(MEYER_FIXTURE_DIR) + "/" + name; }

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("meyer_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + std::to_string(counter_++))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

TEST(Cli, TauOfInverseTwist) {
  const auto r = run({"tau", "--a1", fixture("twist_inverse.txt"), "--a2", fixture("twist_inverse.txt")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "-1\n");
  const auto r3 = run({"tau", "--a1", fixture("twist_inverse.txt"), "--a2", fixture("twist_inverse_cubed.txt")});
  EXPECT_EQ(r3.out, "-1\n");
}

TEST(Cli, TauJsonAndMany) {
  const auto j = run({"tau", "--json", "--a1", fixture("twist_inverse.txt"), "--a2", fixture("hyperbolic.txt")});
  EXPECT_EQ(j.code, 0) << j.err;
  EXPECT_NE(j.out.find("\"tau\""), std::string::npos);

  TempDir dir;
  const std::string list = dir.write("pairs.txt", fixture("twist_inverse.txt") + " " + fixture("twist_inverse.txt") +
                                                      "\n\n" + fixture("identity4.txt") + " " + fixture("identity4.txt") +
                                                      "\n" + fixture("twist_inverse.txt") + " " +
                                                      fixture("twist_inverse_cubed.txt") + "\n");
  const auto m = run({"tau", "--many", list});
  EXPECT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(m.out, "-1\n0\n-1\n");
}

TEST(Cli, TauInputErrors) {
  EXPECT_EQ(run({"tau", "--a1", fixture("twist_inverse.txt"), "--a2", fixture("identity4.txt")}).code, 2);
  EXPECT_EQ(run({"tau", "--a1", fixture("missing.txt"), "--a2", fixture("identity4.txt")}).code, 2);
  TempDir dir;
  const std::string bad = dir.write("bad.txt", "2 2\n2 0\n0 1\n");
  const auto r = run({"tau", "--a1", bad, "--a2", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotSymplectic"), std::string::npos);
  EXPECT_EQ(run({"tau", "--a1", fixture("twist_inverse.txt")}).code, 2);
}

TEST(Cli, Phi1) {
  TempDir dir;
  const std::string s = dir.write("s.txt", "2 2\n0 -1\n1 0\n");
  const auto r = run({"phi1", "--matrix", s});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, to_string(phi1(IntMatrix{{0, -1}, {1, 0}})) + "\n");
  const auto w = run({"phi1", "--matrix", fixture("hyperbolic.txt"), "--word", "--reduction", "row"});
  EXPECT_EQ(w.code, 0) << w.err;
  EXPECT_NE(w.out.find("word="), std::string::npos);
  EXPECT_EQ(run({"phi1", "--matrix", fixture("identity4.txt")}).code, 2);
}

TEST(Cli, CompleteIntersection) {
  const auto r = run({"ci", "--m", "1", "--degrees", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "sign=-5 chi=9 deg=3 genus=1\ndeg_DX=12 phi=-2/3 alpha=-8/3 beta=4\n");
  EXPECT_EQ(run({"ci", "--m", "1", "--degrees", "2"}).code, 2);
  EXPECT_EQ(run({"ci", "--m", "1", "--degrees", "x"}).code, 2);
}

TEST(Cli, Veronese) {
  const auto r = run({"veronese", "--m", "0", "--degrees", "", "--n", "4", "--d", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("deg_DX=40 phi=-1/2"), std::string::npos) << r.out;
  const auto j = run({"veronese", "--m", "0", "--degrees", "", "--n", "4", "--d", "2", "--json"});
  EXPECT_EQ(j.code, 0);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["phi"], "-1/2");
  EXPECT_EQ(doc["deg_DX"], "40");
  EXPECT_EQ(run({"veronese", "--m", "0", "--degrees", "", "--n", "2", "--d", "2"}).code, 2);
}

TEST(Cli, LassoPower) {
  EXPECT_EQ(run({"lasso-power", "--phi", "-9/17", "--n", "2"}).out, "-1/17\n");
  EXPECT_EQ(run({"lasso-power", "--phi", "-1/2", "--n", "4"}).out, "1\n");
  EXPECT_EQ(run({"lasso-power", "--phi", "-1/2", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"lasso-power", "--phi", "1/0", "--n", "1"}).code, 2);
}

TEST(Cli, Germ) {
  const auto r = run({"germ", "--name", "R4/F_31"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "phi=28/17 nbhd_sign=-1 sigma=11/17\n");
  EXPECT_EQ(run({"germ", "--name", "NT5/F_I"}).out, "phi=-1/2 nbhd_sign=0 sigma=-1/2\n");
  EXPECT_EQ(run({"germ", "--name", "nope"}).code, 2);
}

TEST(Cli, FibrationSolveAndCheck) {
  const auto s = run({"fibration", "--ledger", fixture("ledger_f31_alpha10.json"), "--solve"});
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.out, "name=R4/F_31 sigma=11/17 phi=28/17\n");
  const auto c = run({"fibration", "--ledger", fixture("ledger_f31_alpha10_closed.json")});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out, "germ_sum=-146 total_sign=-146 residual=0\n");
  // solving a ledger with no unknown is an input error
  EXPECT_EQ(run({"fibration", "--ledger", fixture("ledger_f31_alpha10_closed.json"), "--solve"}).code, 2);
}

TEST(Cli, SolvedValueFedBackBalances) {
  const auto s = run({"fibration", "--ledger", fixture("ledger_f31_alpha10.json"), "--solve", "--json"});
  ASSERT_EQ(s.code, 0) << s.err;
  const auto doc = nlohmann::json::parse(s.out);
  TempDir dir;
  nlohmann::json ledger = {{"total_sign", -146},
                           {"germs",
                            {{{"name", "R4/F_I"}, {"count", 277}},
                             {{"name", "solved"}, {"phi", doc["sigma"]}, {"nbhd_sign", 0}, {"count", 1}}}}};
  const auto c = run({"fibration", "--ledger", dir.write("l.json", ledger.dump())});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("residual=0"), std::string::npos);
}

TEST(Cli, Presets) {
  const auto r = run({"presets"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("segre33"), std::string::npos);
  EXPECT_NE(r.out.find("veronese-p4-d2"), std::string::npos);
  const auto s = run({"presets", "--show", "segre33"});
  EXPECT_EQ(s.out, "sign=0 chi=4 deg=18 genus=4\ndeg_DX=34 phi=-9/17 alpha=-18 beta=34\n");
}

TEST(Cli, UsageErrors) {
  const auto none = run({});
  EXPECT_EQ(none.code, 2);
  EXPECT_FALSE(none.err.empty());
  const auto unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_FALSE(unknown.err.empty());
  EXPECT_EQ(run({"germ"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"veronese", "--m", "1", "--degrees", "3", "--n", "3", "--d", "2"};
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
}  // namespace meyer
