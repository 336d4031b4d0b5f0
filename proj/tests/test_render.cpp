#include <gtest/gtest.h>

#include "support.hpp"

using namespace ecalc;

TEST(Render, TableJsonShape) {
  const auto sys = RootSystem::build(Preset::QuasiD4);
  const auto ct = constant_term(sys, levi_Q(sys), line_chi_Q(sys));
  const auto js = table_json(ct, Rational(1, 6));
  EXPECT_EQ(js["schema"], kJsonSchema);
  ASSERT_EQ(js["rows"].size(), 6u);
  EXPECT_EQ(js["rows"][3]["w"], "w[123]");
  EXPECT_EQ(js["rows"][3]["pole_order"], 1);
}

TEST(Render, MarkdownHeaderAndEscaping) {
  const auto sys = RootSystem::build(Preset::SplitD4);
  const auto md = table_markdown(constant_term(sys, levi_Q(sys), line_chi_Q(sys)), Rational(1, 6));
  EXPECT_NE(md.find("| w | J(w,s) | order of pole at s=1/6 | exponent | exponent at s=1/6 |"), std::string::npos);
  EXPECT_NE(md.find("\\|t1\\|"), std::string::npos);
}

TEST(Render, SiegelWeilJson) {
  const auto sys = RootSystem::build(Preset::QuasiD4);
  const auto js = siegel_weil_json(sys, siegel_weil_constant(sys));
  EXPECT_EQ(js["schema"], kJsonSchema);
  // JSON spells out the residue label; markdown prints the bare R.
  EXPECT_EQ(js["constant"]["text"], "R_F/xi_F(2)");
}

TEST(Errors, KebabCaseNames) {
  EXPECT_STREQ(error_code_name(ErrorCode::IndeterminateZeroRegion), "indeterminate-zero-region");
  EXPECT_STREQ(error_code_name(ErrorCode::NeedsHigherLogOrder), "needs-higher-log-order");
  EXPECT_STREQ(error_code_name(ErrorCode::UnmodeledPoint), "unmodeled-point");
  const CalcError e(ErrorCode::UnknownRoot, "x");
  EXPECT_EQ(std::string(e.what()), "unknown-root: x");
}
