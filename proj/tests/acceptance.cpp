// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "support.hpp"

using namespace ecalc;
using namespace ecalc::testing;

namespace {

struct Row {
  std::string word;
  ZetaExpr j;
  int order;
  std::vector<Rational> exponent;
};

// Reference tables at s = 1/6. Exponents of w[1] and w[12] in the quasi-split one are the corrected values.
std::vector<Row> quasi_table() {
  return {
      {"e", ZetaExpr(1), 0, vec({3, -1, -1})},
      {"w[1]", xi_ratio({{F, "6s+2"}}, {{F, "6s+3"}}), 0, vec({-3, 2, -1})},
      {"w[12]", xi_ratio({{F, "6s+1"}}, {{F, "6s+3"}}), 0, vec({-1, -2, 1})},
      {"w[123]", xi_ratio({{F, "6s+1"}, {K, "6s"}}, {{F, "6s+3"}, {K, "6s+1"}}), 1, vec({-1, 0, -1})},
      {"w[1232]", xi_ratio({{F, "6s+1"}, {F, "6s-1"}, {K, "6s"}}, {{F, "6s+3"}, {F, "6s"}, {K, "6s+1"}}), 1,
       vec({-1, 0, -1})},
      {"w[12321]", xi_ratio({{F, "6s+1"}, {F, "6s-2"}, {K, "6s"}}, {{F, "6s+3"}, {F, "6s"}, {K, "6s+1"}}), 0,
       vec({1, -1, -1})},
  };
}

std::vector<Row> split_table() {
  return {
      {"e", ZetaExpr(1), 0, vec({3, -1, -1, -1})},
      {"w[1]", xi_ratio({{F, "6s+2"}}, {{F, "6s+3"}}), 0, vec({-3, 2, -1, -1})},
      {"w[12]", xi_ratio({{F, "6s+1"}}, {{F, "6s+3"}}), 0, vec({-1, -2, 1, 1})},
      {"w[123]", xi_ratio({{F, "6s"}}, {{F, "6s+3"}}), 1, vec({-1, -1, -1, 1})},
      {"w[124]", xi_ratio({{F, "6s"}}, {{F, "6s+3"}}), 1, vec({-1, -1, 1, -1})},
      {"w[1234]", xi_ratio({{F, "6s"}, {F, "6s"}}, {{F, "6s+3"}, {F, "6s+1"}}), 2, vec({-1, 0, -1, -1})},
      {"w[12342]", xi_ratio({{F, "6s"}, {F, "6s-1"}}, {{F, "6s+3"}, {F, "6s+1"}}), 2, vec({-1, 0, -1, -1})},
      {"w[123421]", xi_ratio({{F, "6s"}, {F, "6s-2"}}, {{F, "6s+3"}, {F, "6s+1"}}), 1, vec({1, -1, -1, -1})},
  };
}

ConstantTerm chi_Q_term(Preset p) {
  const auto sys = RootSystem::build(p);
  return constant_term(sys, levi_Q(sys), line_chi_Q(sys));
}

ConstantTerm chi_P_term(Preset p) {
  const auto sys = RootSystem::build(p);
  return constant_term(sys, levi_P(sys), line_chi_P(sys));
}

bool table_matches(Preset p, const std::vector<Row>& expected, std::string& why) {
  const auto ct = chi_Q_term(p);
  const Rational point(1, 6);
  if (ct.terms.size() != expected.size()) {
    why = "row count " + std::to_string(ct.terms.size());
    return false;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& t = ct.terms[i];
    const auto& r = expected[i];
    if (t.word.to_string() != r.word) why = "word " + t.word.to_string();
    else if (!(t.j_factor == canonicalize(r.j))) why = r.word + " J " + t.j_factor.to_string();
    else if (pole_order_of(t.j_factor, point) != r.order) why = r.word + " order";
    else if (t.exponent.values({{"s", point}}) != r.exponent) why = r.word + " exponent";
    if (!why.empty()) return false;
  }
  return true;
}

bool has_pair(const std::vector<KeysShahidiPair>& pairs, const char* a, const char* b) {
  for (const auto& kp : pairs) {
    if (kp.word.to_string() != a || kp.partner.to_string() != b) continue;
    Monomial neg = kp.word_laurent.leading;
    neg.coeff = -neg.coeff;
    return kp.opposite && kp.word_laurent.order == kp.partner_laurent.order && kp.partner_laurent.leading == neg;
  }
  return false;
}

bool same_factors(LFactorization a, std::vector<LFactor> b) {
  auto key = [](const LFactor& f) { return std::make_tuple(f.shift, static_cast<int>(f.label), f.multiplicity); };
  auto less = [&](const LFactor& x, const LFactor& y) { return key(x) < key(y); };
  std::sort(a.factors.begin(), a.factors.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a.factors == b;
}

using Check = std::function<bool(std::string&)>;

}  // namespace

int main() {
  std::vector<std::pair<std::string, Check>> criteria;

  criteria.emplace_back("GK tables (quasi-split 6 rows, split 8 rows)", [](std::string& why) {
    return table_matches(Preset::QuasiD4, quasi_table(), why) && table_matches(Preset::SplitD4, split_table(), why);
  });

  criteria.emplace_back("E_Q at 1/6: orders 0/1, square-integrable false/true", [](std::string& why) {
    const auto q = pole_report(chi_Q_term(Preset::QuasiD4), Rational(1, 6));
    const auto s = pole_report(chi_Q_term(Preset::SplitD4), Rational(1, 6));
    why = "orders " + std::to_string(q.order) + "/" + std::to_string(s.order);
    return q.order == 0 && s.order == 1 && !q.square_integrable && s.square_integrable;
  });

  criteria.emplace_back("E_P at 3/10: orders 0/1/2 (3D4/2D4/D4)", [](std::string& why) {
    const int t = pole_report(chi_P_term(Preset::TriD4), Rational(3, 10)).order;
    const int q = pole_report(chi_P_term(Preset::QuasiD4), Rational(3, 10)).order;
    const int s = pole_report(chi_P_term(Preset::SplitD4), Rational(3, 10)).order;
    why = std::to_string(t) + "/" + std::to_string(q) + "/" + std::to_string(s);
    return t == 0 && q == 1 && s == 2;
  });

  criteria.emplace_back("Keys-Shahidi pairs have opposite leading terms", [](std::string& why) {
    const auto q = keys_shahidi_pairs(chi_Q_term(Preset::QuasiD4), Rational(1, 6));
    const auto s = keys_shahidi_pairs(chi_Q_term(Preset::SplitD4), Rational(1, 6));
    why = std::to_string(q.size()) + "+" + std::to_string(s.size()) + " pairs";
    return has_pair(q, "w[123]", "w[1232]") && has_pair(s, "w[1234]", "w[12342]");
  });

  criteria.emplace_back("Siegel-Weil constants, section constants, A_w residues", [](std::string& why) {
    const auto q = siegel_weil_constant(RootSystem::build(Preset::QuasiD4));
    const auto s = siegel_weil_constant(RootSystem::build(Preset::SplitD4));
    const bool constants = q.constant == R(F) / xiv(F, 2) && s.constant == R(F) / xiv(F, 2);
    const bool sections = q.section_constant == scalar(5) * xiv(F, 4) * xiv(K, 3) / (xiv(F, 3) * xiv(K, 2)) &&
                          s.section_constant == scalar(5) * xiv(F, 3) * xiv(F, 4) / xiv(F, 2, 2);
    const bool residues =
        q.intertwiner.leading ==
            scalar(Rational(1, 5)) * R(F) * xiv(F, 3) * xiv(K, 2) / (xiv(F, 2) * xiv(F, 4) * xiv(K, 3)) &&
        s.intertwiner.leading == scalar(Rational(1, 5)) * R(F) * xiv(F, 2) / (xiv(F, 3) * xiv(F, 4));
    why = "R labels: ";
    for (const auto& l : q.residue_labels) why += "R_" + l.symbol + " ";
    why += "(printed R)";
    return constants && sections && residues && q.orders_match && s.orders_match;
  });

  criteria.emplace_back("sharp-limit monomials with factor 2^10 3^2", [](std::string& why) {
    const auto q = siegel_weil_constant(RootSystem::build(Preset::QuasiD4));
    const Monomial c = scalar(-(1 << 10) * 9) * xiv(K, 2, 2) * xiv(F, 3) * xiv(K, 3) * xiv(F, 4, 2);
    why = q.p_side.in_free.leading.to_string();
    return q.p_side.in_free.leading == c * R(F) * xiv(F, 2, 2) && q.q_side.in_free.leading == c * R(F, 2) * xiv(F, 2);
  });

  criteria.emplace_back("normalized series: invariance, H^0 over W (48, 192), entireness", [](std::string& why) {
    for (Preset p : {Preset::QuasiD4, Preset::SplitD4}) {
      const auto sys = RootSystem::build(p);
      const WeylGroup g(sys);
      if (g.size() != (p == Preset::QuasiD4 ? 48u : 192u)) {
        why = "group order";
        return false;
      }
      for (int i = 1; i <= sys.rank(); ++i) {
        if (!sharp_invariance_check(sys, i).ok) {
          why = std::string(preset_name(p)) + " invariance w" + std::to_string(i);
          return false;
        }
        for (const auto& w : g.elements())
          if (!h0_cancellation_check(g, sys.simple_root(i), w)) {
            why = std::string(preset_name(p)) + " H0 " + w.to_string();
            return false;
          }
      }
      if (!entireness_report(sys).entire) {
        why = std::string(preset_name(p)) + " entireness";
        return false;
      }
    }
    return true;
  });

  criteria.emplace_back("iota_{P,Q} = iota_{Q,P} identity and special point", [](std::string& why) {
    for (Preset p : {Preset::QuasiD4, Preset::SplitD4}) {
      const auto rep = iota_check(RootSystem::build(p));
      if (!(rep.iota_QP_substituted == rep.iota_PQ) || !rep.special_points_equal) {
        why = preset_name(p);
        return false;
      }
    }
    return true;
  });

  criteria.emplace_back("dual side: bi-weights, factorizations, orders 1/1/2, Arthur pole", [](std::string& why) {
    std::vector<BiWeight> expected = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {0, 2}, {0, 0}, {0, -2}};
    std::sort(expected.begin(), expected.end());
    const bool bw = restrict_via_r() == expected;
    using L = LLabel;
    const bool tau = same_factors(lfactor_standard(Source::VTau), {{Rational(-1), L::Zeta, 1},
                                                                   {Rational(-1, 2), L::Tau, 1},
                                                                   {Rational(0), L::Zeta, 1},
                                                                   {Rational(1, 2), L::Tau, 1},
                                                                   {Rational(1), L::Zeta, 1}});
    const bool chi = same_factors(lfactor_standard(Source::VChi), {{Rational(-1), L::Zeta, 1},
                                                                   {Rational(-1), L::Chi, 1},
                                                                   {Rational(0), L::Chi, 2},
                                                                   {Rational(0), L::Zeta, 1},
                                                                   {Rational(1), L::Chi, 1},
                                                                   {Rational(1), L::Zeta, 1}});
    const bool orders = order_at_2(lfactor_standard(Source::VTau), false) == 1 &&
                        order_at_2(lfactor_standard(Source::VChi), false) == 1 &&
                        order_at_2(lfactor_standard(Source::VChi), true) == 2;
    const bool arthur = arthur_expand(2) == std::vector<Rational>{1, 0, -1} && arthur_rightmost_pole(2) == 2;
    why = std::string(bw ? "" : "biweights ") + (tau ? "" : "tau ") + (chi ? "" : "chi ") + (orders ? "" : "orders ") +
          (arthur ? "" : "arthur");
    return bw && tau && chi && orders && arthur;
  });

  criteria.emplace_back("Tate integral = zeta_v(2s+3); shell additivity", [](std::string& why) {
    const AffineForm z = AffineForm::parse("2s+3");
    if (!tate_integral(ShellFunction::lattice(0), z).is_local_zeta()) {
      why = "lattice(0)";
      return false;
    }
    std::mt19937 rng(11u);
    std::uniform_int_distribution<int> start(-6, 6), len(0, 10);
    for (int n = 0; n < 200; ++n) {
      const int k = start(rng), m = len(rng);
      XRational acc = XRational::monomial(0, 0);
      for (int j = k; j < k + m; ++j) acc = acc + tate_integral(ShellFunction::shell(j), z).value;
      if (!(tate_integral(ShellFunction::lattice(k), z).value - tate_integral(ShellFunction::lattice(k + m), z).value ==
            acc)) {
        why = "additivity at k=" + std::to_string(k);
        return false;
      }
    }
    return true;
  });

  criteria.emplace_back("property suites: GK cocycle, pairing invariance, canonicalize", [](std::string& why) {
    int failures = 0, checked = 0;
    std::mt19937 rng(2718u);
    for (Preset p : {Preset::SplitD4, Preset::QuasiD4, Preset::TriD4, Preset::G2, Preset::A1}) {
      const auto sys = RootSystem::build(p);
      const WeylGroup g(sys);
      const auto lam = TorusCharacter::generic(sys.rank());
      std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1), pick_a(0, sys.positive_roots().size() - 1);
      std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
      for (int n = 0; n < 200; ++n, ++checked) {
        const WeylWord& w = g.word(pick(rng));
        std::uniform_int_distribution<std::size_t> cut(0, w.length());
        const auto k = static_cast<std::ptrdiff_t>(cut(rng));
        const WeylWord w1{{w.letters.begin(), w.letters.begin() + k}}, w2{{w.letters.begin() + k, w.letters.end()}};
        failures += !equivalent(gk_factor(g, w, lam),
                                gk_factor(g, w1, lam) * gk_factor(g, w2, weyl_act(sys, w1.inverse(), lam)));
        std::vector<Rational> v;
        for (int j = 0; j < sys.rank(); ++j) v.push_back(ratio(num(rng), den(rng)));
        const auto mu = TorusCharacter::constant(v);
        const Root& a = sys.positive_roots()[pick_a(rng)];
        failures += !(pairing(sys, weyl_act(sys, w, mu), weyl_act(sys, w, a)) == pairing(sys, mu, a));
      }
    }
    std::uniform_int_distribution<int> c(-3, 3), e(1, 2), lab(0, 1);
    for (int n = 0; n < 200; ++n, ++checked) {
      ZetaExpr x(1), y(1);
      for (int a = 0; a < 4; ++a) {
        x *= ZetaExpr::xi(lab(rng) ? F : K, AffineForm::variable("s", c(rng)) + AffineForm(c(rng)), e(rng));
        y /= ZetaExpr::xi(lab(rng) ? F : K, AffineForm::variable("s", c(rng)) + AffineForm(c(rng)), e(rng));
      }
      const ZetaExpr cx = canonicalize(x);
      failures += !(canonicalize(cx) == cx) || !(canonicalize(x * y) == canonicalize(cx * canonicalize(y)));
    }
    why = std::to_string(failures) + " failures in " + std::to_string(checked) + " samples";
    return failures == 0;
  });

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    bool ok = false;
    try {
      ok = criteria[i].second(why);
    } catch (const std::exception& ex) {
      why = std::string("exception: ") + ex.what();
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!why.empty()) std::cout << " [" << why << "]";
    std::cout << "\n";
  }
  return failed;
}
