#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecalc/characters.hpp"
#include "ecalc/weyl.hpp"
#include "ecalc/zeta.hpp"

namespace ecalc {

// F_w(lambda) = prod_{w^{-1}a>0} xi(<lambda,a^v>+1) * prod_{w^{-1}a<0} xi(<lambda,a^v>)
ZetaExpr sharp_term(const WeylGroup& group, const WeylWord& w, const TorusCharacter& lambda);
// L(lambda) = prod_{a>0} (<lambda,a^v>+1)(<lambda,a^v>-1)
RationalFunction sharp_polynomial(const RootSystem& system, const TorusCharacter& lambda);

struct InvarianceResult {
  bool ok = true;
  std::optional<std::pair<WeylWord, WeylWord>> mismatch;  // (w, w_i w)
  std::string detail;
};

// F(w_i lambda) = F(lambda) term by term, lambda fully generic.
InvarianceResult sharp_invariance_check(const RootSystem& system, int simple_index);

// Res along H_alpha^0 of F_w + F_{s_alpha w} vanishes and both exponents agree on the hyperplane.
bool h0_cancellation_check(const WeylGroup& group, const Root& alpha, const WeylWord& w);
bool h0_cancellation_check(const RootSystem& system, int simple_index, const WeylWord& w);

struct HyperplaneStatus {
  Root alpha;
  int eps = 0;
  bool pole_survives = false;
  std::size_t terms_checked = 0;
};

struct EntirenessReport {
  std::vector<HyperplaneStatus> hyperplanes;  // every positive root, eps in {-1,0,1}
  bool entire = true;
};

EntirenessReport entireness_report(const RootSystem& system);

}  // namespace ecalc
