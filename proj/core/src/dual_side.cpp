#include "ecalc/dual_side.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "ecalc/characters.hpp"
#include "ecalc/error.hpp"

namespace ecalc {

namespace {

const RootSystem& g2() {
  static const RootSystem sys = RootSystem::build(Preset::G2);
  return sys;
}

// <x, gamma^v> for x in simple-root coordinates, gamma^v the standard coroot.
Rational pair_with_coroot(const Root& x, const Root& gamma) {
  const std::vector<Rational> c = g2().standard_coroot(gamma);
  Rational out = 0;
  for (int j = 1; j <= 2; ++j) out += c[j - 1] * g2().cartan_pairing(x, j);
  return out;
}

int to_int(const Rational& q) {
  if (!is_integer(q)) throw CalcError(ErrorCode::InvalidInput, "non-integral pairing");
  return static_cast<int>(q.get_num().get_si());
}

const char* label_name(LLabel l) {
  switch (l) {
    case LLabel::Zeta: return "zeta";
    case LLabel::Tau: return "tau";
    case LLabel::Chi: return "chi";
  }
  return "?";
}

int label_degree(LLabel l) { return l == LLabel::Tau ? 2 : 1; }

std::string shifted(const Rational& shift) {
  if (shift == 0) return "s";
  return shift > 0 ? "s+" + shift.get_str() : "s-" + Rational(-shift).get_str();
}

}  // namespace

WeightSet standard_weights() {
  WeightSet ws;
  ws.weights.push_back(Root{{0, 0}});
  for (const Root& r : g2().positive_roots()) {
    if (g2().length_class_of(r) != LengthClass::Short) continue;
    ws.weights.push_back(r);
    ws.weights.push_back(-r);
  }
  return ws;
}

std::vector<BiWeight> restrict_via_r(const DualPairEmbedding& e) {
  std::vector<BiWeight> out;
  for (const Root& w : standard_weights().weights)
    out.push_back({to_int(pair_with_coroot(w, e.long_root)), to_int(pair_with_coroot(w, e.short_root))});
  std::sort(out.begin(), out.end());
  return out;
}

void LFactorization::add(const Rational& shift, LLabel label, int multiplicity) {
  if (multiplicity == 0) return;
  auto it = std::find_if(factors.begin(), factors.end(),
                         [&](const LFactor& f) { return f.shift == shift && f.label == label; });
  if (it != factors.end()) {
    it->multiplicity += multiplicity;
  } else {
    factors.push_back({shift, label, multiplicity});
  }
  factors.erase(std::remove_if(factors.begin(), factors.end(), [](const LFactor& f) { return f.multiplicity == 0; }),
                factors.end());
  std::sort(factors.begin(), factors.end(), [](const LFactor& a, const LFactor& b) {
    if (a.shift != b.shift) return a.shift < b.shift;
    return a.label < b.label;
  });
}

int LFactorization::degree() const {
  int d = 0;
  for (const auto& f : factors) d += f.multiplicity * label_degree(f.label);
  return d;
}

std::string LFactorization::to_string() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    out += f.label == LLabel::Zeta ? "zeta(" + shifted(f.shift) + ")"
                                   : "L(" + shifted(f.shift) + "," + label_name(f.label) + ")";
    if (f.multiplicity != 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out.empty() ? "1" : out;
}

nlohmann::json LFactorization::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& f : factors)
    arr.push_back({{"shift", f.shift.get_str()}, {"label", label_name(f.label)}, {"multiplicity", f.multiplicity}});
  return {{"factors", arr}, {"degree", degree()}, {"text", to_string()}};
}

LFactorization factor_biweights(const std::vector<BiWeight>& biweights) {
  std::map<int, int> tau_weights;  // n -> number of weights with m = +-1
  LFactorization f;
  for (const BiWeight& b : biweights) {
    if (b.m == 0)
      f.add(ratio(-b.n, 2), LLabel::Zeta);
    else if (b.m == 1 || b.m == -1)
      ++tau_weights[b.n];
    else
      throw CalcError(ErrorCode::InvalidInput, "bi-weight outside std(x)std + 1(x)Sym2");
  }
  for (const auto& [n, count] : tau_weights) {
    if (count % 2) throw CalcError(ErrorCode::InvalidInput, "unpaired tau weight");
    Rational shift(-n, 2);
    shift.canonicalize();
    f.add(shift, LLabel::Tau, count / 2);
  }
  for (auto& x : f.factors) x.shift.canonicalize();
  return f;
}

namespace {

// Satake route: the st-weights are 0 and +-(coroots of long roots of G2); for each, the real shift is
// <lambda, w> and the twist is <nu, w>.
LFactorization satake_factorization(const std::vector<Rational>& lambda, const std::vector<Rational>& nu, LLabel twist) {
  const RootSystem& sys = g2();
  std::map<Rational, int> tau_weights;
  LFactorization f;
  f.add(0, LLabel::Zeta);
  for (const Root& g : sys.positive_roots()) {
    if (sys.length_class_of(g) != LengthClass::Long) continue;
    const std::vector<int> c = sys.coroot(g);
    for (int sign : {1, -1}) {
      Rational shift = 0, tw = 0;
      for (int j = 0; j < 2; ++j) {
        shift += sign * c[j] * lambda[j];
        tw += sign * c[j] * nu[j];
      }
      const int t = to_int(tw);
      if (twist == LLabel::Chi) {
        f.add(shift, (t % 2) ? LLabel::Chi : LLabel::Zeta);
      } else if (t == 0) {
        f.add(shift, LLabel::Zeta);
      } else if (t == 1 || t == -1) {
        ++tau_weights[shift];
      } else {
        throw CalcError(ErrorCode::InvalidInput, "tau twist outside the standard representation");
      }
    }
  }
  for (const auto& [shift, count] : tau_weights) f.add(shift, LLabel::Tau, count / 2);
  return f;
}

std::vector<Rational> scaled_modular(const std::set<int>& levi, const Rational& power) {
  std::vector<Rational> v = modular_character(g2(), levi).values();
  for (auto& x : v) x *= power;
  return v;
}

}  // namespace

LFactorization lfactor_standard(Source source) {
  if (source == Source::VTau) return factor_biweights(restrict_via_r());
  return lfactor_via_parabolic(Source::VChi);
}

LFactorization lfactor_via_parabolic(Source source) {
  if (source == Source::VChi) {
    // P1: Levi generated by the long simple root beta; chi enters through omega_2 (odd on beta^v).
    return satake_factorization(scaled_modular({2}, Rational(1, 5)), {Rational(0), Rational(1)}, LLabel::Chi);
  }
  // P2: Levi generated by the short simple root alpha; tau sits on the alpha^v direction, twist = <alpha, .>.
  const std::vector<Rational> alpha = g2().root_character(g2().simple_root(1));
  return satake_factorization(scaled_modular({1}, Rational(1, 6)), alpha, LLabel::Tau);
}

PoleOrderResult order_at_2_detailed(const LFactorization& f, bool chi_trivial) {
  PoleOrderResult res;
  for (const LFactor& x : f.factors) {
    const Rational u = Rational(2) + x.shift;
    const LLabel label = (chi_trivial && x.label == LLabel::Chi) ? LLabel::Zeta : x.label;
    const std::string where = std::string(label_name(label)) + " at " + u.get_str();
    if (label == LLabel::Zeta) {
      if (u == 1) {
        res.order += x.multiplicity;
        res.axioms.push_back(where + ": simple pole of zeta at 1");
      } else if (u > 1) {
        res.axioms.push_back(where + ": zeta regular and nonzero for Re u > 1");
      } else {
        throw CalcError(ErrorCode::UnmodeledPoint, where);
      }
    } else {
      if (u < 1) throw CalcError(ErrorCode::UnmodeledPoint, where);
      res.axioms.push_back(where + (label == LLabel::Tau ? ": cuspidal L(u,tau) regular and nonzero for u >= 1"
                                                         : ": L(u,chi), chi nontrivial, regular and nonzero for u >= 1"));
    }
  }
  return res;
}

int order_at_2(const LFactorization& f, bool chi_trivial) { return order_at_2_detailed(f, chi_trivial).order; }

std::vector<Rational> arthur_expand(int j) {
  if (j < 0) throw CalcError(ErrorCode::InvalidInput, "j must be nonnegative");
  std::vector<Rational> out;
  for (int l = 0; l <= j; ++l) {
    Rational x(j - 2 * l, 2);
    x.canonicalize();
    out.push_back(x);
  }
  return out;
}

Rational arthur_rightmost_pole(int j) {
  const auto shifts = arthur_expand(j);
  return Rational(1) - *std::min_element(shifts.begin(), shifts.end());
}

}  // namespace ecalc
