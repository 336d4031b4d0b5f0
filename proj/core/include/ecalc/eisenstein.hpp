#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ecalc/characters.hpp"
#include "ecalc/root_datum.hpp"
#include "ecalc/weyl.hpp"
#include "ecalc/zeta.hpp"

namespace ecalc {

struct GKTerm {
  WeylWord word;
  ZetaExpr j_factor;        // canonical
  TorusCharacter exponent;  // w^{-1} . line
};

struct ConstantTermOptions {
  bool parallel = false;
  ZetaExpr prefactor = ZetaExpr(1);  // multiplies every J-factor (e.g. a normalizing factor)
};

struct ConstantTerm {
  RootSystem group;
  std::set<int> levi;
  TorusCharacter line;
  std::string variable;  // the single parameter of `line`
  std::vector<GKTerm> terms;
};

std::vector<WeylWord> coset_reps(const RootSystem& system, const std::set<int>& levi);

// J(w, lambda) = prod_{gamma>0, w^{-1}gamma<0} xi(<lambda,gamma^v>)/xi(<lambda,gamma^v>+1), canonicalized.
ZetaExpr gk_factor(const WeylGroup& group, const WeylWord& w, const TorusCharacter& lambda);

ConstantTerm constant_term(const RootSystem& system, const std::set<int>& levi, const TorusCharacter& line,
                           const ConstantTermOptions& opts = {});

struct TermExpansion {
  WeylWord word;
  LaurentData laurent;
  std::vector<Rational> exponent_at;
  std::vector<Rational> exponent_slope;
};

struct ExponentGroup {
  std::vector<Rational> limit_exponent;
  std::vector<TermExpansion> members;
  int pole_order = 0;      // order of pole of the group sum (negative: vanishes)
  bool exact = true;       // false: only an upper bound (holomorphic after full first-order cancellation)
  MonomialSum leading;     // sum of leading coefficients at the members' worst order
  bool log_term = false;   // leading coefficients cancelled, first-order log t term survives
};

struct PoleReport {
  Rational point;
  std::string variable;
  int order = 0;  // pole order of the whole constant term
  std::vector<ExponentGroup> groups;
  std::vector<std::vector<Rational>> surviving_exponents;
  bool square_integrable = false;
};

PoleReport pole_report(const ConstantTerm& ct, const Rational& point, const EvalOptions& opts = {});

// Langlands: strictly negative coordinates in the basis of simple roots.
bool in_negative_cone(const RootSystem& system, const std::vector<Rational>& exponent);

struct KeysShahidiPair {
  WeylWord word;
  WeylWord partner;  // word * w_i
  int simple_index = 0;
  LaurentData word_laurent;
  LaurentData partner_laurent;
  bool opposite = false;  // same order and partner leading == -word leading
};

// Pairs (w, w w_i) of terms where w_i fixes the evaluated exponent of w.
std::vector<KeysShahidiPair> keys_shahidi_pairs(const ConstantTerm& ct, const Rational& point,
                                                const EvalOptions& opts = {});

// Laurent data of J(w, line) at the point (spherical normalization).
LaurentData intertwiner_residue(const RootSystem& system, const WeylWord& w, const TorusCharacter& line,
                                const Rational& point, const EvalOptions& opts = {});

// prod_{alpha>0} xi(<lambda,a^v>+1) (<lambda,a^v>+1)(<lambda,a^v>-1)
ZetaExpr sharp_normalizer(const RootSystem& system, const TorusCharacter& lambda);

struct SharpLimit {
  LaurentData in_s;     // in the line parameter
  LaurentData in_free;  // in the free coordinate of the line
  int free_index = 0;   // 1-based coordinate that varies along the line
  Rational slope;       // d(free coordinate)/ds
  std::vector<Rational> point_character;
};

// Leading behaviour of the normalizer divided by prod_{i in levi}(<lambda,alpha_i^v> - 1) along `line`.
SharpLimit sharp_limit(const RootSystem& system, const std::set<int>& levi, const TorusCharacter& line,
                       const Rational& point);

struct SiegelWeilReport {
  SharpLimit p_side;  // mu^P at 3/10
  SharpLimit q_side;  // mu^Q at 1/6
  int e_p_order = 0;  // pole order of E_P at 3/10
  int e_q_order = 0;  // pole order of E_Q at 1/6
  bool orders_match = false;
  bool points_related = false;  // mu^P_{3/10} = w1 . mu^Q_{1/6}
  Monomial constant;            // C_Q / C_P
  WeylWord intertwiner_word;
  LaurentData intertwiner;      // J(w, chi^P) at 3/10
  Monomial section_constant;    // constant / residue of the intertwiner
  std::set<FieldLabel> residue_labels;
};

SiegelWeilReport siegel_weil_constant(const RootSystem& system, const EvalOptions& opts = {});

// Single parameter of a line; throws if there is not exactly one.
std::string line_variable(const TorusCharacter& line);

}  // namespace ecalc
