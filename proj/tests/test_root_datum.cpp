#include <gtest/gtest.h>

#include "support.hpp"

using namespace ecalc;
using namespace ecalc::testing;

TEST(RootDatum, PositiveRootCounts) {
  EXPECT_EQ(RootSystem::build(Preset::SplitD4).positive_roots().size(), 12u);
  EXPECT_EQ(RootSystem::build(Preset::QuasiD4).positive_roots().size(), 9u);
  EXPECT_EQ(RootSystem::build(Preset::TriD4).positive_roots().size(), 6u);
  EXPECT_EQ(RootSystem::build(Preset::G2).positive_roots().size(), 6u);
  EXPECT_EQ(RootSystem::build(Preset::A1).positive_roots().size(), 1u);
}

TEST(RootDatum, QuasiSplitLabels) {
  const auto sys = RootSystem::build(Preset::QuasiD4);
  // Short roots of B3 are defined over K, long roots over F.
  EXPECT_EQ(sys.label_of(Root{{0, 0, 1}}), K);
  EXPECT_EQ(sys.label_of(Root{{1, 1, 1}}), K);
  EXPECT_EQ(sys.label_of(Root{{0, 1, 1}}), K);
  EXPECT_EQ(sys.label_of(Root{{1, 0, 0}}), F);
  EXPECT_EQ(sys.label_of(Root{{1, 2, 2}}), F);
  EXPECT_EQ(sys.label_of(Root{{1, 1, 2}}), F);
  EXPECT_TRUE(sys.contains(Root{{1, 2, 2}}));
  EXPECT_FALSE(sys.contains(Root{{1, 2, 1}}));
}

TEST(RootDatum, TrialityLabels) {
  const auto sys = RootSystem::build(Preset::TriD4);
  EXPECT_EQ(sys.simple_label(1), E);
  EXPECT_EQ(sys.simple_label(2), F);
  EXPECT_EQ(sys.label_of(Root{{3, 2}}), F);
}

TEST(RootDatum, HighestRoots) {
  EXPECT_TRUE(RootSystem::build(Preset::SplitD4).contains(Root{{1, 2, 1, 1}}));
  EXPECT_TRUE(RootSystem::build(Preset::G2).contains(Root{{3, 2}}));
}

TEST(RootDatum, QuasiCoroots) {
  const auto sys = RootSystem::build(Preset::QuasiD4);
  EXPECT_EQ(sys.coroot(Root{{1, 1, 1}}), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(sys.coroot(Root{{0, 0, 1}}), (std::vector<int>{0, 0, 1}));
  // Long roots carry F, so the K coordinate doubles: standard (1,2,1) becomes (1,2,2).
  EXPECT_EQ(sys.coroot(Root{{1, 2, 2}}), (std::vector<int>{1, 2, 2}));
  EXPECT_EQ(sys.coroot(Root{{1, 1, 2}}), (std::vector<int>{1, 1, 2}));
}

TEST(RootDatum, SimpleCorootsAreUnitVectors) {
  for (Preset p : {Preset::SplitD4, Preset::QuasiD4, Preset::TriD4, Preset::G2, Preset::A1}) {
    const auto sys = RootSystem::build(p);
    for (int i = 1; i <= sys.rank(); ++i) {
      std::vector<int> e(sys.rank(), 0);
      e[i - 1] = 1;
      EXPECT_EQ(sys.coroot(sys.simple_root(i)), e) << preset_name(p) << " " << i;
    }
  }
}

TEST(RootDatum, ReflectionsPermuteRoots) {
  for (Preset p : {Preset::SplitD4, Preset::QuasiD4, Preset::TriD4, Preset::G2}) {
    const auto sys = RootSystem::build(p);
    for (int i = 1; i <= sys.rank(); ++i)
      for (const Root& r : sys.positive_roots()) {
        const Root img = sys.reflect(i, r);
        EXPECT_TRUE(sys.contains(img));
        if (r != sys.simple_root(i)) EXPECT_TRUE(img.positive());
        EXPECT_EQ(sys.label_of(img), sys.label_of(r));
      }
  }
}

TEST(RootDatum, CustomSystemPropagatesLabelsAcrossOrbits) {
  const CartanMatrix b3 = {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
  const auto sys = RootSystem::custom("b3", b3, {{Root{{1, 0, 0}}, F}, {Root{{0, 0, 1}}, K}});
  EXPECT_EQ(sys.label_of(Root{{0, 1, 1}}), K);
  EXPECT_EQ(sys.label_of(Root{{0, 1, 0}}), F);
}

TEST(RootDatum, CustomSystemRejectsInconsistentLabels) {
  const CartanMatrix b3 = {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
  try {
    RootSystem::custom("bad", b3, {{Root{{1, 0, 0}}, F}, {Root{{0, 1, 0}}, K}, {Root{{0, 0, 1}}, K}});
    FAIL() << "expected label-inconsistency";
  } catch (const CalcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::LabelInconsistency);
  }
}

TEST(RootDatum, RejectsNonFiniteCartan) {
  const CartanMatrix affine_a1 = {{2, -2}, {-2, 2}};
  try {
    RootSystem::custom("affine", affine_a1, {{Root{{1, 0}}, F}});
    FAIL() << "expected not-finite-type";
  } catch (const CalcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFiniteType);
  }
}

TEST(RootDatum, UnknownRootThrows) {
  const auto sys = RootSystem::build(Preset::QuasiD4);
  try {
    sys.index_of(Root{{1, 2, 1}});
    FAIL();
  } catch (const CalcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownRoot);
  }
}

TEST(RootDatum, JsonRoundTrip) {
  const auto sys = RootSystem::build(Preset::QuasiD4);
  const auto back = RootSystem::from_json(sys.to_json());
  EXPECT_EQ(back.positive_roots(), sys.positive_roots());
  for (const Root& r : sys.positive_roots()) EXPECT_EQ(back.label_of(r), sys.label_of(r));
}

TEST(RootDatum, QuasiPositiveRootSet) {
  const auto sys = RootSystem::build(Preset::QuasiD4);
  const std::vector<std::vector<int>> expected = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1},
                                                  {0, 1, 2}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}};
  // a1+2a2+a3 is not a root of B3 with a3 short; a1+a2+2a3 is.
  EXPECT_FALSE(sys.contains(Root{{1, 2, 1}}));
  for (const auto& c : expected) EXPECT_TRUE(sys.contains(Root{c}));
  int k_roots = 0;
  for (const Root& r : sys.positive_roots()) k_roots += sys.label_of(r) == K;
  EXPECT_EQ(k_roots, 3);
}

TEST(RootDatum, G2PositiveRoots) {
  const auto sys = RootSystem::build(Preset::G2);
  for (const auto& c : std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}})
    EXPECT_TRUE(sys.contains(Root{c}));
}

TEST(RootDatum, G2HighestCorootMatchesSymmetrizerOracle) {
  const auto sys = RootSystem::build(Preset::G2);
  // (alpha, alpha) = 2, (beta, beta) = 6; 2 gamma/(gamma,gamma) for gamma = 3a+2b long: a^v coefficient 3*2/6.
  EXPECT_EQ(sys.standard_coroot(Root{{3, 2}}), (std::vector<Rational>{1, 2}));
  EXPECT_EQ(sys.coroot(Root{{3, 2}}), (std::vector<int>{1, 2}));
  EXPECT_EQ(sys.coroot(Root{{2, 1}}), (std::vector<int>{2, 3}));
}

TEST(RootDatum, ReflectExamples) {
  const auto quasi = RootSystem::build(Preset::QuasiD4);
  EXPECT_EQ(quasi.reflect(1, Root{{1, 0, 0}}), (Root{{-1, 0, 0}}));
  EXPECT_EQ(quasi.reflect(2, Root{{1, 0, 0}}), (Root{{1, 1, 0}}));
  const auto g2 = RootSystem::build(Preset::G2);
  EXPECT_EQ(g2.reflect(1, Root{{0, 1}}), (Root{{3, 1}}));
}
