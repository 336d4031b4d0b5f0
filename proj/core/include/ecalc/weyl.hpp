#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ecalc/rational.hpp"
#include "ecalc/root_datum.hpp"

namespace ecalc {

// w = w_{i1} ... w_{ik}; letters are 1-based simple indices.
struct WeylWord {
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  WeylWord inverse() const;
  friend WeylWord operator*(const WeylWord& a, const WeylWord& b);
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  friend auto operator<=>(const WeylWord&, const WeylWord&) = default;

  std::string to_string() const;  // "e", "w[1232]", "w[1,10]" when an index exceeds 9
  // Accepts "e", "w[1232]", "1232", "[2,3,4,2]".
  static WeylWord parse(std::string_view text);
};

// The (relative) Weyl group, enumerated with lexicographically smallest reduced words,
// ordered by (length, word).
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& system);

  const RootSystem& system() const { return system_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<WeylWord>& elements() const { return words_; }
  const WeylWord& word(std::size_t index) const { return words_.at(index); }

  std::size_t index_of(const WeylWord& w) const;
  WeylWord reduce(const WeylWord& w) const { return words_[index_of(w)]; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t length(std::size_t a) const { return words_[a].length(); }

  // Reduced word of the reflection s_alpha.
  WeylWord reflection(const Root& alpha) const;
  // {gamma > 0 : w^{-1} gamma < 0}, in canonical root order.
  std::vector<Root> inverted_roots(const WeylWord& w) const;
  // Minimal length representatives of W_levi \ W: w^{-1} alpha_i > 0 for every i in levi.
  std::vector<WeylWord> coset_reps(const std::set<int>& levi) const;

 private:
  std::vector<Rational> key_of(const WeylWord& w) const;

  RootSystem system_;
  std::vector<WeylWord> words_;
  std::map<std::vector<Rational>, std::size_t> index_;
};

Root weyl_act(const RootSystem& system, const WeylWord& w, const Root& r);

}  // namespace ecalc
