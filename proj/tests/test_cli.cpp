#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ecalc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ecalc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int table_rows(const std::string& md) {
  int rows = 0;
  std::istringstream in(md);
  for (std::string line; std::getline(in, line);)
    if (line.rfind("| e ", 0) == 0 || line.rfind("| w[", 0) == 0) ++rows;
  return rows;
}

}  // namespace

TEST(Cli, QuasiTableHasSixRows) {
  const auto r = run({"table", "--group", "2D4", "--parabolic", "Q", "--point", "1/6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(table_rows(r.out), 6);
}

TEST(Cli, SplitTableHasEightRows) {
  const auto r = run({"table", "--group", "D4", "--parabolic", "Q", "--point", "1/6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(table_rows(r.out), 8);
}

TEST(Cli, G2BorelTableHasTwelveRows) {
  const auto r = run({"table", "--group", "G2", "--parabolic", "borel", "--point", "1/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(table_rows(r.out), 12);
}

TEST(Cli, SplitPPoleOrder) {
  const auto r = run({"poles", "--group", "D4", "--parabolic", "P", "--point", "3/10", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto js = nlohmann::json::parse(r.out);
  EXPECT_EQ(js["order"], 2);
  EXPECT_EQ(js["schema"], ecalc::kJsonSchema);
}

TEST(Cli, SiegelWeilConstant) {
  const auto r = run({"sw", "--group", "2D4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "R/xi_F(2)");
}

TEST(Cli, LFactorOrderAtTwo) {
  const auto r = run({"lfactor", "--source", "Vchi", "--chi", "trivial", "--order-at", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, LFactorText) {
  const auto r = run({"lfactor", "--source", "Vtau"});
  EXPECT_EQ(r.out, "L^S(s,pi,st) = zeta(s-1)*L(s-1/2,tau)*zeta(s)*L(s+1/2,tau)*zeta(s+1)\n");
}

TEST(Cli, Tate) {
  const auto r = run({"tate", "--function", "lattice", "--k", "0", "--z", "2s+3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["local_zeta"], true);
}

TEST(Cli, SharpCheckPasses) {
  const auto r = run({"sharp-check", "--group", "2D4"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, CustomSystemFile) {
  const auto r = run({"poles", "--system", ECALC_TEST_DATA "/custom_d4.json", "--parabolic", "Q", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["order"], 1);
}

TEST(Cli, CustomCharacter) {
  const auto r = run({"poles", "--group", "2D4", "--parabolic", "Q", "--character", "6s+2,-1,-1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["order"], 0);
}

TEST(Cli, ConfigErrorsExitOne) {
  EXPECT_EQ(run({"table", "--group", "E8"}).code, 1);
  EXPECT_EQ(run({"table", "--group", "2D4", "--point", "0.5"}).code, 1);
  EXPECT_EQ(run({"table", "--group", "G2", "--line", "chiQ"}).code, 1);
  EXPECT_EQ(run({"table", "--group", "A1", "--parabolic", "P"}).code, 1);
  EXPECT_EQ(run({"poles", "--system", "/nonexistent.json"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
}

TEST(Cli, ZeroRegionExitsTwoUnlessFlagged) {
  // Along the Borel line of A1 at 1/4 the argument 2s lands in (0,1).
  EXPECT_EQ(run({"poles", "--group", "A1", "--parabolic", "borel", "--point", "1/4"}).code, 2);
  EXPECT_EQ(run({"poles", "--group", "A1", "--parabolic", "borel", "--point", "1/4", "--assume-no-real-zeros"}).code,
            0);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args = {"table", "--group", "D4", "--parabolic", "P", "--point", "3/10",
                                         "--format", "json"};
  auto par = args;
  par.push_back("--parallel");
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_EQ(run(args).out, run(par).out);
}

TEST(Cli, SharpCheckOtherGroups) {
  for (const char* g : {"3D4", "G2", "A1"}) EXPECT_EQ(run({"sharp-check", "--group", g}).code, 0) << g;
}
