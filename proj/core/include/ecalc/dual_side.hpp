#pragma once

#include <compare>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ecalc/rational.hpp"
#include "ecalc/root_datum.hpp"

namespace ecalc {

// Weights of the 7-dimensional representation of G2(C) in simple-root coordinates
// (alpha short = index 1, beta long = index 2): 0 and the six short roots.
struct WeightSet {
  std::vector<Root> weights;  // zero weight stored as (0,0)
};

WeightSet standard_weights();

// r : SL2 x SL2 -> G2(C) through an orthogonal (long, short) pair of roots.
struct DualPairEmbedding {
  Root long_root{{3, 2}};
  Root short_root{{1, 0}};
};

struct BiWeight {
  int m = 0;  // against the long-root SL2 (carries tau)
  int n = 0;  // against the short-root (Arthur) SL2
  friend auto operator<=>(const BiWeight&, const BiWeight&) = default;
};

// Sorted multiset of (<w, long^v>, <w, short^v>) over the seven weights.
std::vector<BiWeight> restrict_via_r(const DualPairEmbedding& embedding = {});

enum class LLabel { Zeta, Tau, Chi };

struct LFactor {
  Rational shift;  // the factor is L(s + shift, label)
  LLabel label = LLabel::Zeta;
  int multiplicity = 1;
  friend bool operator==(const LFactor&, const LFactor&) = default;
};

struct LFactorization {
  std::vector<LFactor> factors;  // sorted by (shift, label), like terms merged

  void add(const Rational& shift, LLabel label, int multiplicity = 1);
  int degree() const;
  std::string to_string() const;  // "zeta(s-1)*L(s-1/2,tau)*..."
  nlohmann::json to_json() const;
  friend bool operator==(const LFactorization&, const LFactorization&) = default;
};

enum class Source { VTau, VChi };

// Product over bi-weights: L(s - n/2, tau) per std(x)std pair, zeta(s - n/2) for m = 0.
LFactorization factor_biweights(const std::vector<BiWeight>& biweights);

// V_tau: through restrict_via_r. V_chi: from the Satake parameter of Ind_{P1} pi(1,chi) delta_{P1}^{1/5}.
LFactorization lfactor_standard(Source source);
// Independent route through the parabolic Satake parameter (P2 with delta_{P2}^{1/6} for V_tau).
LFactorization lfactor_via_parabolic(Source source);

struct PoleOrderResult {
  int order = 0;
  std::vector<std::string> axioms;  // one line per factor, naming the regularity fact used
};

// Pole order at s = 2; throws "unmodeled-point" outside the modeled region.
PoleOrderResult order_at_2_detailed(const LFactorization& f, bool chi_trivial);
int order_at_2(const LFactorization& f, bool chi_trivial);

// {j/2 - l : l = 0..j}
std::vector<Rational> arthur_expand(int j);
// Rightmost pole of prod_l zeta(s + j/2 - l): s = j/2 + 1.
Rational arthur_rightmost_pole(int j);

}  // namespace ecalc
