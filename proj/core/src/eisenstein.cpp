#include "ecalc/eisenstein.hpp"

#include <algorithm>
#include <future>

#include "ecalc/error.hpp"

namespace ecalc {

std::string line_variable(const TorusCharacter& line) {
  std::set<std::string> names;
  for (const auto& c : line.coords)
    for (const auto& [name, v] : c.coeffs()) names.insert(name);
  if (names.size() != 1)
    throw CalcError(ErrorCode::InvalidInput, "line must depend on exactly one parameter");
  return *names.begin();
}

std::vector<WeylWord> coset_reps(const RootSystem& system, const std::set<int>& levi) {
  return WeylGroup(system).coset_reps(levi);
}

ZetaExpr gk_factor(const WeylGroup& group, const WeylWord& w, const TorusCharacter& lambda) {
  const RootSystem& sys = group.system();
  ZetaExpr j;
  for (const Root& g : group.inverted_roots(w)) j *= ZetaExpr::gk_ratio(sys.label_of(g), pairing(sys, lambda, g));
  return canonicalize(j);
}

ConstantTerm constant_term(const RootSystem& system, const std::set<int>& levi, const TorusCharacter& line,
                           const ConstantTermOptions& opts) {
  if (line.rank() != system.rank()) throw CalcError(ErrorCode::InvalidInput, "line has the wrong rank");
  ConstantTerm ct{system, levi, line, line_variable(line), {}};
  const WeylGroup group(system);
  const std::vector<WeylWord> reps = group.coset_reps(levi);
  auto make = [&](const WeylWord& w) {
    return GKTerm{w, canonicalize(opts.prefactor * gk_factor(group, w, line)),
                  weyl_act(system, w.inverse(), line)};
  };
  if (opts.parallel) {
    std::vector<std::future<GKTerm>> jobs;
    for (const WeylWord& w : reps) jobs.push_back(std::async(std::launch::async, make, w));
    for (auto& j : jobs) ct.terms.push_back(j.get());
  } else {
    for (const WeylWord& w : reps) ct.terms.push_back(make(w));
  }
  return ct;
}

bool in_negative_cone(const RootSystem& system, const std::vector<Rational>& exponent) {
  const std::vector<Rational> c = simple_root_coordinates(system, exponent);
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x < 0; });
}

PoleReport pole_report(const ConstantTerm& ct, const Rational& point, const EvalOptions& opts) {
  PoleReport rep;
  rep.point = point;
  rep.variable = ct.variable;
  const ExpansionPoint at{ct.variable, point, {}};

  for (const GKTerm& t : ct.terms) {
    TermExpansion e{t.word, leading_coeff_at(t.j_factor, at, opts), t.exponent.values({{ct.variable, point}}),
                    t.exponent.slope(ct.variable)};
    auto it = std::find_if(rep.groups.begin(), rep.groups.end(),
                           [&](const ExponentGroup& g) { return g.limit_exponent == e.exponent_at; });
    if (it == rep.groups.end()) {
      rep.groups.push_back({e.exponent_at, {}, 0, true, {}, false});
      it = rep.groups.end() - 1;
    }
    it->members.push_back(std::move(e));
  }

  bool first = true;
  for (ExponentGroup& g : rep.groups) {
    int worst = 0;
    for (std::size_t k = 0; k < g.members.size(); ++k)
      worst = k ? std::min(worst, g.members[k].laurent.order) : g.members[k].laurent.order;
    for (const auto& m : g.members)
      if (m.laurent.order == worst) g.leading.add(m.laurent.leading);
    if (!g.leading.is_zero()) {
      g.pole_order = -worst;
    } else {
      // t^{e(s)} = t^{e(s0)} (1 + (s-s0) <e', log t> + ...): first-order log terms, one per coordinate.
      bool log_survives = false;
      for (std::size_t j = 0; j < g.limit_exponent.size() && !log_survives; ++j) {
        MonomialSum s;
        for (const auto& m : g.members) {
          if (m.laurent.order != worst) continue;
          Monomial x = m.laurent.leading;
          x.coeff *= m.exponent_slope[j];
          s.add(x);
        }
        log_survives = !s.is_zero();
      }
      g.log_term = log_survives;
      g.pole_order = -worst - 1;
      if (!log_survives) {
        if (g.pole_order > 0)
          throw CalcError(ErrorCode::NeedsHigherLogOrder,
                          "cancellation persists past first order in group " + render_vector(g.limit_exponent));
        g.exact = false;
      }
    }
    rep.order = first ? g.pole_order : std::max(rep.order, g.pole_order);
    first = false;
  }

  rep.square_integrable = true;
  for (const ExponentGroup& g : rep.groups) {
    if (g.pole_order != rep.order || !g.exact) continue;
    rep.surviving_exponents.push_back(g.limit_exponent);
    if (!in_negative_cone(ct.group, g.limit_exponent)) rep.square_integrable = false;
  }
  if (rep.surviving_exponents.empty()) rep.square_integrable = false;
  return rep;
}

std::vector<KeysShahidiPair> keys_shahidi_pairs(const ConstantTerm& ct, const Rational& point,
                                                const EvalOptions& opts) {
  const WeylGroup group(ct.group);
  const ExpansionPoint at{ct.variable, point, {}};
  std::vector<KeysShahidiPair> out;
  for (const GKTerm& t : ct.terms) {
    const std::vector<Rational> mu = t.exponent.values({{ct.variable, point}});
    for (int i = 1; i <= ct.group.rank(); ++i) {
      if (mu[i - 1] != 0) continue;
      const WeylWord partner = group.reduce(t.word * WeylWord{{i}});
      if (partner.length() != t.word.length() + 1) continue;
      auto it = std::find_if(ct.terms.begin(), ct.terms.end(), [&](const GKTerm& x) { return x.word == partner; });
      if (it == ct.terms.end()) continue;
      KeysShahidiPair p{t.word, partner, i, leading_coeff_at(t.j_factor, at, opts),
                        leading_coeff_at(it->j_factor, at, opts), false};
      Monomial neg = p.word_laurent.leading;
      neg.coeff = -neg.coeff;
      p.opposite = p.word_laurent.order == p.partner_laurent.order && neg == p.partner_laurent.leading;
      out.push_back(std::move(p));
    }
  }
  return out;
}

LaurentData intertwiner_residue(const RootSystem& system, const WeylWord& w, const TorusCharacter& line,
                                const Rational& point, const EvalOptions& opts) {
  const WeylGroup group(system);
  return leading_coeff_at(gk_factor(group, w, line), {line_variable(line), point, {}}, opts);
}

ZetaExpr sharp_normalizer(const RootSystem& system, const TorusCharacter& lambda) {
  ZetaExpr n;
  for (const Root& a : system.positive_roots()) {
    const AffineForm p = pairing(system, lambda, a);
    n *= ZetaExpr::xi(system.label_of(a), p + AffineForm(1));
    n *= ZetaExpr(RationalFunction::factor(p + AffineForm(1)) * RationalFunction::factor(p - AffineForm(1)));
  }
  return n;
}

SharpLimit sharp_limit(const RootSystem& system, const std::set<int>& levi, const TorusCharacter& line,
                       const Rational& point) {
  const std::string var = line_variable(line);
  const TorusCharacter generic = TorusCharacter::generic(system.rank(), "x");
  ZetaExpr n = sharp_normalizer(system, generic);
  std::map<std::string, AffineForm> onto;
  for (int j = 0; j < system.rank(); ++j) onto["x" + std::to_string(j + 1)] = line.coords[j];
  for (int i : levi) n /= ZetaExpr(RationalFunction::factor(generic.coords[i - 1] - AffineForm(1)));
  n = n.substitute(onto);

  SharpLimit out;
  out.in_s = leading_coeff_at(n, {var, point, {}});
  for (int j = 0; j < system.rank(); ++j) {
    if (line.coords[j].is_constant()) continue;
    if (out.free_index) throw CalcError(ErrorCode::InvalidInput, "line has more than one free coordinate");
    out.free_index = j + 1;
    out.slope = line.coords[j].coeff(var);
  }
  if (!out.free_index) throw CalcError(ErrorCode::InvalidInput, "line is constant");
  out.in_free = out.in_s;
  out.in_free.leading.coeff /= ecalc::pow(out.slope, out.in_s.order);
  out.point_character = line.values({{var, point}});
  return out;
}

SiegelWeilReport siegel_weil_constant(const RootSystem& system, const EvalOptions& opts) {
  auto preset = system.preset();
  if (!preset || (*preset != Preset::QuasiD4 && *preset != Preset::SplitD4))
    throw CalcError(ErrorCode::UnsupportedGroup, "Siegel-Weil constants are defined for quasi_D4 and split_D4");
  const Rational p_point(3, 10), q_point(1, 6);
  SiegelWeilReport rep;
  rep.p_side = sharp_limit(system, levi_P(system), line_mu_P(system), p_point);
  rep.q_side = sharp_limit(system, levi_Q(system), line_mu_Q(system), q_point);
  rep.points_related =
      TorusCharacter::constant(rep.p_side.point_character) ==
      weyl_act(system, WeylWord{{1}}, TorusCharacter::constant(rep.q_side.point_character));

  rep.e_p_order = pole_report(constant_term(system, levi_P(system), line_chi_P(system)), p_point, opts).order;
  rep.e_q_order = pole_report(constant_term(system, levi_Q(system), line_chi_Q(system)), q_point, opts).order;
  rep.orders_match = rep.e_p_order == rep.p_side.in_s.order && rep.e_q_order == rep.q_side.in_s.order;

  rep.constant = rep.q_side.in_free.leading / rep.p_side.in_free.leading;
  // w[2342] of Spin8; for the quasi-split form w3 w4 is the relative reflection w3.
  rep.intertwiner_word = *preset == Preset::QuasiD4 ? WeylWord{{2, 3, 2}} : WeylWord{{2, 3, 4, 2}};
  rep.intertwiner = intertwiner_residue(system, rep.intertwiner_word, line_chi_P(system), p_point, opts);
  rep.section_constant = rep.constant / rep.intertwiner.leading;
  for (const Monomial* m : {&rep.constant, &rep.p_side.in_free.leading, &rep.q_side.in_free.leading,
                            &rep.intertwiner.leading})
    for (const auto& [label, e] : m->residues) rep.residue_labels.insert(label);
  return rep;
}

}  // namespace ecalc
