#include "ecalc/characters.hpp"

#include <nlohmann/json.hpp>

#include "ecalc/error.hpp"

namespace ecalc {

TorusCharacter TorusCharacter::constant(const std::vector<Rational>& values) {
  TorusCharacter out;
  for (const auto& v : values) out.coords.emplace_back(v);
  return out;
}

TorusCharacter TorusCharacter::generic(int rank, const std::string& prefix) {
  TorusCharacter out;
  for (int j = 1; j <= rank; ++j) out.coords.push_back(AffineForm::variable(prefix + std::to_string(j)));
  return out;
}

TorusCharacter TorusCharacter::evaluate(const Assignment& values) const {
  TorusCharacter out;
  for (const auto& c : coords) out.coords.push_back(c.evaluate(values));
  return out;
}

TorusCharacter TorusCharacter::substitute(const std::map<std::string, AffineForm>& values) const {
  TorusCharacter out;
  for (const auto& c : coords) out.coords.push_back(c.substitute(values));
  return out;
}

std::vector<Rational> TorusCharacter::values(const Assignment& point) const {
  std::vector<Rational> out;
  for (const auto& c : coords) {
    AffineForm v = c.evaluate(point);
    if (!v.is_constant())
      throw CalcError(ErrorCode::InvalidInput, "character coordinate " + v.to_string() + " is not fully evaluated");
    out.push_back(v.constant());
  }
  return out;
}

std::vector<Rational> TorusCharacter::slope(const std::string& parameter) const {
  std::vector<Rational> out;
  for (const auto& c : coords) out.push_back(c.coeff(parameter));
  return out;
}

bool TorusCharacter::is_constant() const {
  for (const auto& c : coords)
    if (!c.is_constant()) return false;
  return true;
}

TorusCharacter& TorusCharacter::operator+=(const TorusCharacter& o) {
  if (coords.empty()) coords.resize(o.coords.size());
  for (std::size_t j = 0; j < coords.size(); ++j) coords[j] += o.coords.at(j);
  return *this;
}

TorusCharacter operator-(TorusCharacter a, const TorusCharacter& b) {
  for (std::size_t j = 0; j < a.coords.size(); ++j) a.coords[j] -= b.coords.at(j);
  return a;
}

TorusCharacter operator*(const Rational& c, const TorusCharacter& a) {
  TorusCharacter out = a;
  for (auto& x : out.coords) x *= c;
  return out;
}

// Only valid when one side is constant; characters stay affine.
TorusCharacter operator*(const AffineForm& c, const TorusCharacter& a) {
  TorusCharacter out;
  for (const auto& x : a.coords) {
    if (c.is_constant())
      out.coords.push_back(x * c.constant());
    else if (x.is_constant())
      out.coords.push_back(c * x.constant());
    else
      throw CalcError(ErrorCode::InvalidInput, "product of two non-constant affine forms");
  }
  return out;
}

AffineForm pairing(const RootSystem& system, const TorusCharacter& lambda, const Root& root) {
  const std::vector<int> c = system.coroot(root);
  AffineForm out;
  for (int j = 0; j < system.rank(); ++j)
    if (c[j] != 0) out += lambda.coords.at(j) * Rational(c[j]);
  return out;
}

TorusCharacter reflect_character(const RootSystem& system, int i, const TorusCharacter& lambda) {
  TorusCharacter out = lambda;
  const AffineForm si = lambda.coords.at(i - 1);
  for (int j = 1; j <= system.rank(); ++j) {
    int a = system.cartan()[j - 1][i - 1];
    if (a == 0) continue;
    out.coords[j - 1] -= si * (Rational(a * system.field_degree(i)) / system.field_degree(j));
  }
  return out;
}

TorusCharacter reflect_character(const RootSystem& system, const Root& alpha, const TorusCharacter& lambda) {
  const AffineForm p = pairing(system, lambda, alpha);
  const std::vector<Rational> v = system.root_character(alpha);
  const int deg = system.label_of(alpha).degree;
  TorusCharacter out = lambda;
  for (int j = 0; j < system.rank(); ++j) out.coords[j] -= p * (v[j] * deg);
  return out;
}

TorusCharacter weyl_act(const RootSystem& system, const WeylWord& w, const TorusCharacter& lambda) {
  TorusCharacter out = lambda;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = reflect_character(system, *it, out);
  return out;
}

std::vector<Rational> simple_root_coordinates(const RootSystem& system, const std::vector<Rational>& lambda) {
  const int n = system.rank();
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    const std::vector<Rational> col = system.root_character(system.simple_root(i + 1));
    for (int j = 0; j < n; ++j) M[j][i] = col[j];
  }
  for (int j = 0; j < n; ++j) M[j][n] = lambda.at(j);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (M[piv][k] == 0) ++piv;
    std::swap(M[piv], M[k]);
    for (int r = 0; r < n; ++r) {
      if (r == k || M[r][k] == 0) continue;
      Rational f = M[r][k] / M[k][k];
      for (int c = k; c <= n; ++c) M[r][c] -= f * M[k][c];
    }
  }
  std::vector<Rational> out;
  for (int k = 0; k < n; ++k) out.push_back(M[k][n] / M[k][k]);
  return out;
}

std::set<int> all_simple(const RootSystem& system) {
  std::set<int> out;
  for (int i = 1; i <= system.rank(); ++i) out.insert(i);
  return out;
}

std::set<int> levi_P(const RootSystem& system) {
  std::set<int> out = all_simple(system);
  out.erase(2);
  return out;
}

std::set<int> levi_Q(const RootSystem& system) {
  std::set<int> out = all_simple(system);
  out.erase(1);
  return out;
}

TorusCharacter modular_character(const RootSystem& system, const std::set<int>& levi) {
  return modular_character(system, levi, all_simple(system));
}

TorusCharacter modular_character(const RootSystem& system, const std::set<int>& levi, const std::set<int>& ambient) {
  auto supported_in = [](const Root& r, const std::set<int>& s) {
    for (std::size_t j = 0; j < r.coords.size(); ++j)
      if (r.coords[j] != 0 && !s.count(static_cast<int>(j) + 1)) return false;
    return true;
  };
  std::vector<Rational> sum(system.rank(), Rational(0));
  for (const Root& r : system.positive_roots()) {
    if (!supported_in(r, ambient) || supported_in(r, levi)) continue;
    const std::vector<Rational> v = system.root_character(r);
    for (int j = 0; j < system.rank(); ++j) sum[j] += v[j] * system.multiplicity_of(r);
  }
  return TorusCharacter::constant(sum);
}

TorusCharacter parabolic_line(const RootSystem& system, const std::set<int>& levi, const std::string& s) {
  const auto dX = modular_character(system, levi).values();
  const auto dB = modular_character(system, {}).values();
  TorusCharacter out;
  for (int j = 0; j < system.rank(); ++j)
    out.coords.push_back(AffineForm::variable(s, dX[j]) + AffineForm((dX[j] - dB[j]) / 2));
  return out;
}

TorusCharacter parabolic_mu_line(const RootSystem& system, const std::set<int>& levi, const std::string& s) {
  const auto dX = modular_character(system, levi).values();
  const auto dB = modular_character(system, {}).values();
  TorusCharacter out;
  for (int j = 0; j < system.rank(); ++j)
    out.coords.push_back(AffineForm::variable(s, dX[j]) + AffineForm((dB[j] - dX[j]) / 2));
  return out;
}

namespace {

void require_d4(const RootSystem& system) {
  auto p = system.preset();
  if (!p || (*p != Preset::SplitD4 && *p != Preset::QuasiD4 && *p != Preset::TriD4))
    throw CalcError(ErrorCode::UnsupportedGroup, "line is defined for the D4 forms only, got " + system.name());
}

}  // namespace

TorusCharacter line_chi_Q(const RootSystem& system) {
  require_d4(system);
  return parabolic_line(system, levi_Q(system));
}

TorusCharacter line_chi_P(const RootSystem& system) {
  require_d4(system);
  return parabolic_line(system, levi_P(system));
}

TorusCharacter line_mu_P(const RootSystem& system) {
  require_d4(system);
  return parabolic_mu_line(system, levi_P(system));
}

TorusCharacter line_mu_Q(const RootSystem& system) {
  require_d4(system);
  return parabolic_mu_line(system, levi_Q(system));
}

TorusCharacter line_kappa(const RootSystem& system) {
  return weyl_act(system, WeylWord{{1}}, line_mu_Q(system));
}

IotaReport iota_check(const RootSystem& system) {
  auto p = system.preset();
  if (!p || (*p != Preset::SplitD4 && *p != Preset::QuasiD4))
    throw CalcError(ErrorCode::UnsupportedGroup, "iota_check needs split_D4 or quasi_D4");
  const std::set<int> M = levi_P(system), L = levi_Q(system);
  std::set<int> R;
  for (int i : M)
    if (L.count(i)) R.insert(i);
  const auto dM = modular_character(system, R, M).values();
  const auto dL = modular_character(system, R, L).values();
  const auto dP = modular_character(system, M).values();
  const auto dQ = modular_character(system, L).values();

  IotaReport rep;
  for (int j = 0; j < system.rank(); ++j) {
    rep.iota_PQ.coords.push_back(AffineForm::variable("s1", dM[j]) + AffineForm::variable("s2", dP[j]));
    rep.iota_QP.coords.push_back(AffineForm::variable("s1", dL[j]) + AffineForm::variable("s2", dQ[j]));
  }
  const AffineForm s1 = AffineForm::variable("s1"), s2 = AffineForm::variable("s2");
  rep.iota_QP_substituted = rep.iota_QP.substitute(
      {{"s1", (s2 * Rational(5) - s1) * Rational(1, 4)}, {"s2", (s1 + s2 * Rational(5)) * Rational(1, 6)}});
  for (int j = 0; j < system.rank(); ++j)
    if (!(rep.iota_QP_substituted.coords[j] == rep.iota_PQ.coords[j]))
      throw CalcError(ErrorCode::IotaMismatch,
                      "coordinate " + std::to_string(j + 1) + ": " + rep.iota_PQ.coords[j].to_string() +
                          " vs " + rep.iota_QP_substituted.coords[j].to_string());

  rep.at_PQ_special = rep.iota_PQ.evaluate({{"s1", Rational(-1, 2)}, {"s2", Rational(3, 10)}});
  rep.at_QP_special = rep.iota_QP.evaluate({{"s1", Rational(1, 2)}, {"s2", Rational(1, 6)}});
  rep.special_points_equal = rep.at_PQ_special == rep.at_QP_special;
  const TorusCharacter plus = rep.iota_PQ.evaluate({{"s1", Rational(1, 2)}, {"s2", Rational(3, 10)}});
  rep.reflection_relation = weyl_act(system, WeylWord{{1}}, plus) == rep.at_PQ_special;
  return rep;
}

std::string render_vector(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) out += ",";
    out += v[j].get_str();
  }
  return out + ")";
}

std::string render_character(const RootSystem& system, const TorusCharacter& lambda) {
  auto base = [&](int j) {
    const std::string& sym = system.simple_label(j + 1).symbol;
    return "|t" + std::to_string(j + 1) + "|" + (sym == "F" ? "" : "_" + sym);
  };
  if (lambda.is_constant()) {
    std::vector<std::string> num, den;
    for (int j = 0; j < lambda.rank(); ++j) {
      const Rational& e = lambda.coords[j].constant();
      if (e == 0) continue;
      Rational m = abs(e);
      std::string f = base(j) + (m == 1 ? "" : "^" + (is_integer(m) ? m.get_str() : "{" + m.get_str() + "}"));
      (e > 0 ? num : den).push_back(f);
    }
    auto join = [](const std::vector<std::string>& v) {
      std::string o;
      for (const auto& x : v) o += (o.empty() ? "" : " ") + x;
      return o;
    };
    std::string n = num.empty() ? "1" : join(num);
    if (den.empty()) return n;
    return n + "/" + (den.size() > 1 ? "(" + join(den) + ")" : join(den));
  }
  std::string out;
  for (int j = 0; j < lambda.rank(); ++j) {
    if (lambda.coords[j].is_zero()) continue;
    if (!out.empty()) out += " ";
    out += base(j) + "^{" + lambda.coords[j].to_string() + "}";
  }
  return out.empty() ? "1" : out;
}

nlohmann::json character_json(const TorusCharacter& lambda) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : lambda.coords) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [k, v] : c.coeffs()) coeffs[k] = v.get_str();
    arr.push_back({{"const", c.constant().get_str()}, {"coeffs", coeffs}, {"text", c.to_string()}});
  }
  return arr;
}

}  // namespace ecalc
