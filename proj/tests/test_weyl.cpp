#include <gtest/gtest.h>

#include "support.hpp"

using namespace ecalc;

TEST(Weyl, GroupOrders) {
  EXPECT_EQ(WeylGroup(RootSystem::build(Preset::SplitD4)).size(), 192u);
  EXPECT_EQ(WeylGroup(RootSystem::build(Preset::QuasiD4)).size(), 48u);
  EXPECT_EQ(WeylGroup(RootSystem::build(Preset::TriD4)).size(), 12u);
  EXPECT_EQ(WeylGroup(RootSystem::build(Preset::G2)).size(), 12u);
  EXPECT_EQ(WeylGroup(RootSystem::build(Preset::A1)).size(), 2u);
}

TEST(Weyl, WordsAreLexminReduced) {
  const WeylGroup g(RootSystem::build(Preset::QuasiD4));
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(g.reduce(g.word(i)), g.word(i));
    EXPECT_EQ(g.inverted_roots(g.word(i)).size(), g.word(i).length());
  }
  EXPECT_EQ(g.word(0).to_string(), "e");
}

TEST(Weyl, ParseAndPrint) {
  EXPECT_EQ(WeylWord::parse("w[1232]").letters, (std::vector<int>{1, 2, 3, 2}));
  EXPECT_EQ(WeylWord::parse("[2,3,4,2]").letters, (std::vector<int>{2, 3, 4, 2}));
  EXPECT_EQ(WeylWord::parse("e").letters.size(), 0u);
  EXPECT_EQ((WeylWord{{1, 2, 3}}).to_string(), "w[123]");
  EXPECT_EQ((WeylWord{{1, 2, 3}}).inverse().to_string(), "w[321]");
}

TEST(Weyl, CosetRepresentatives) {
  const auto quasi = RootSystem::build(Preset::QuasiD4);
  const WeylGroup g(quasi);
  std::vector<std::string> words;
  for (const auto& w : g.coset_reps(levi_Q(quasi))) words.push_back(w.to_string());
  EXPECT_EQ(words, (std::vector<std::string>{"e", "w[1]", "w[12]", "w[123]", "w[1232]", "w[12321]"}));

  const auto split = RootSystem::build(Preset::SplitD4);
  words.clear();
  for (const auto& w : WeylGroup(split).coset_reps(levi_Q(split))) words.push_back(w.to_string());
  EXPECT_EQ(words, (std::vector<std::string>{"e", "w[1]", "w[12]", "w[123]", "w[124]", "w[1234]", "w[12342]",
                                             "w[123421]"}));
}

TEST(Weyl, CosetCountsMatchIndex) {
  for (Preset p : {Preset::SplitD4, Preset::QuasiD4, Preset::TriD4}) {
    const auto sys = RootSystem::build(p);
    const WeylGroup g(sys);
    for (const auto& levi : {levi_P(sys), levi_Q(sys), std::set<int>{}}) {
      const std::size_t levi_size = levi.empty() ? 1 : [&] {
        std::size_t n = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
          bool inside = true;
          for (int l : g.word(i).letters) inside = inside && levi.count(l);
          n += inside;
        }
        return n;
      }();
      EXPECT_EQ(g.coset_reps(levi).size() * levi_size, g.size()) << preset_name(p);
    }
  }
}

TEST(Weyl, ReflectionWordsAreInvolutions) {
  const WeylGroup g(RootSystem::build(Preset::SplitD4));
  for (const Root& a : g.system().positive_roots()) {
    const WeylWord s = g.reflection(a);
    EXPECT_EQ(g.reduce(s * s).length(), 0u);
    EXPECT_EQ(weyl_act(g.system(), s, a), -a);
  }
}

TEST(Weyl, LongestElementInvertsEverything) {
  const WeylGroup g(RootSystem::build(Preset::G2));
  const WeylWord& longest = g.elements().back();
  EXPECT_EQ(longest.length(), 6u);
  EXPECT_EQ(g.inverted_roots(longest).size(), 6u);
}
