#pragma once

#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ecalc/affine.hpp"
#include "ecalc/root_datum.hpp"
#include "ecalc/weyl.hpp"

namespace ecalc {

// lambda = sum_j coords[j] omega_j, where the j-th coordinate is measured with |.|_{F_j}.
struct TorusCharacter {
  std::vector<AffineForm> coords;

  static TorusCharacter constant(const std::vector<Rational>& values);
  // (x1, ..., xr) with parameters named prefix1..prefixr.
  static TorusCharacter generic(int rank, const std::string& prefix = "x");

  int rank() const { return static_cast<int>(coords.size()); }
  TorusCharacter evaluate(const Assignment& values) const;
  TorusCharacter substitute(const std::map<std::string, AffineForm>& values) const;
  // Values at a point; throws if some coordinate still depends on a parameter.
  std::vector<Rational> values(const Assignment& point = {}) const;
  std::vector<Rational> slope(const std::string& parameter) const;
  bool is_constant() const;

  TorusCharacter& operator+=(const TorusCharacter& o);
  friend TorusCharacter operator+(TorusCharacter a, const TorusCharacter& b) { return a += b; }
  friend TorusCharacter operator-(TorusCharacter a, const TorusCharacter& b);
  friend TorusCharacter operator*(const AffineForm& c, const TorusCharacter& a);
  friend TorusCharacter operator*(const Rational& c, const TorusCharacter& a);
  friend bool operator==(const TorusCharacter&, const TorusCharacter&) = default;
};

AffineForm pairing(const RootSystem& system, const TorusCharacter& lambda, const Root& root);
TorusCharacter reflect_character(const RootSystem& system, int i, const TorusCharacter& lambda);
// s_alpha(lambda) for an arbitrary root alpha.
TorusCharacter reflect_character(const RootSystem& system, const Root& alpha, const TorusCharacter& lambda);
TorusCharacter weyl_act(const RootSystem& system, const WeylWord& w, const TorusCharacter& lambda);

// Solve lambda = sum_i c_i alpha_i (relative simple roots); used for Langlands' criterion.
std::vector<Rational> simple_root_coordinates(const RootSystem& system, const std::vector<Rational>& lambda);

// Modular character of the standard parabolic with Levi `levi` inside the Levi `ambient`
// (ambient = all simple indices gives delta_P of the group).
TorusCharacter modular_character(const RootSystem& system, const std::set<int>& levi);
TorusCharacter modular_character(const RootSystem& system, const std::set<int>& levi, const std::set<int>& ambient);

std::set<int> all_simple(const RootSystem& system);
std::set<int> levi_P(const RootSystem& system);  // drop alpha_2 (Heisenberg parabolic)
std::set<int> levi_Q(const RootSystem& system);  // drop alpha_1

// delta_X^{s+1/2} delta_B^{-1/2} for the parabolic with the given Levi, in parameter `s`.
TorusCharacter parabolic_line(const RootSystem& system, const std::set<int>& levi, const std::string& s = "s");
// delta_B^{1/2} delta_X^{s-1/2}.
TorusCharacter parabolic_mu_line(const RootSystem& system, const std::set<int>& levi, const std::string& s = "s");

// Lines for the D4 forms (split_D4, quasi_D4, tri_D4); other groups: "unsupported-group".
TorusCharacter line_chi_Q(const RootSystem& system);
TorusCharacter line_chi_P(const RootSystem& system);
TorusCharacter line_mu_P(const RootSystem& system);
TorusCharacter line_mu_Q(const RootSystem& system);
TorusCharacter line_kappa(const RootSystem& system);

struct IotaReport {
  TorusCharacter iota_PQ;  // in (s1, s2)
  TorusCharacter iota_QP;  // in (s1, s2)
  TorusCharacter iota_QP_substituted;
  TorusCharacter at_PQ_special;  // iota_PQ(-1/2, 3/10)
  TorusCharacter at_QP_special;  // iota_QP(1/2, 1/6)
  bool special_points_equal = false;
  bool reflection_relation = false;  // w1 . iota_PQ(1/2,3/10) == iota_PQ(-1/2,3/10)
};
IotaReport iota_check(const RootSystem& system);

// |t1|^{6s+2} |t2|^{-1} |t3|_K^{-1}
std::string render_character(const RootSystem& system, const TorusCharacter& lambda);
std::string render_vector(const std::vector<Rational>& v);  // "(3,-1,-1)"
nlohmann::json character_json(const TorusCharacter& lambda);

}  // namespace ecalc
