#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ecalc/rational.hpp"

namespace ecalc {

struct FieldLabel {
  std::string symbol = "F";
  int degree = 1;  // [F_alpha : F]

  static FieldLabel F() { return {"F", 1}; }
  static FieldLabel K() { return {"K", 2}; }
  static FieldLabel E() { return {"E", 3}; }

  friend auto operator<=>(const FieldLabel&, const FieldLabel&) = default;
  friend bool operator==(const FieldLabel&, const FieldLabel&) = default;
};

// Integer coordinates in the basis of simple roots.
struct Root {
  std::vector<int> coords;

  bool positive() const;
  int height() const;
  Root operator-() const;
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
  std::string to_string() const;  // "(1,1,2)"
};

enum class LengthClass { Short, Long };
enum class Preset { SplitD4, QuasiD4, TriD4, G2, A1 };

using CartanMatrix = std::vector<std::vector<int>>;  // A[i][j] = <alpha_j, alpha_i^vee>

const char* preset_name(Preset p);  // "split_D4", ...
std::optional<Preset> preset_from_name(const std::string& name);

// Labeled relative root system. Simple indices in the public API are 1-based, as in w[1232].
class RootSystem {
 public:
  static RootSystem build(Preset preset);
  // `labels` must cover at least one root of every Weyl orbit; all given labels are validated.
  static RootSystem custom(std::string name, const CartanMatrix& cartan,
                           const std::map<Root, FieldLabel>& labels);
  // {"name": ..., "cartan": [[...]], "labels": {"0,0,1": "K", "1,0,0": {"symbol":"F","degree":1}}}
  static RootSystem from_json(const nlohmann::json& doc);

  const std::string& name() const { return name_; }
  std::optional<Preset> preset() const { return preset_; }
  int rank() const { return static_cast<int>(cartan_.size()); }
  const CartanMatrix& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }

  Root simple_root(int i) const;
  bool contains(const Root& r) const;
  // Position of +-r in positive_roots(); throws "unknown-root".
  std::size_t index_of(const Root& r) const;

  const FieldLabel& label_of(const Root& r) const;
  const FieldLabel& simple_label(int i) const { return label_of(simple_root(i)); }
  int field_degree(int i) const { return simple_label(i).degree; }
  LengthClass length_class_of(const Root& r) const;
  // Dimension over F of the root space in the restricted sense; equals the label degree here.
  int multiplicity_of(const Root& r) const { return label_of(r).degree; }

  // Coroot coefficients c with <lambda, r^vee> = sum_j c_j s_j for lambda in the field-normalized
  // fundamental-weight coordinates used for characters.
  std::vector<int> coroot(const Root& r) const;
  // Standard (unnormalized) coroot expansion of 2r/(r,r).
  std::vector<Rational> standard_coroot(const Root& r) const;

  // <r, alpha_i^vee> using the Cartan matrix.
  int cartan_pairing(const Root& r, int i) const;
  Root reflect(int i, const Root& r) const;

  // The root r as a character in field-normalized fundamental-weight coordinates.
  std::vector<Rational> root_character(const Root& r) const;
  // Invariant form (r, r) with short simple roots normalized by the symmetrizer.
  int norm2(const Root& r) const;

  nlohmann::json to_json() const;

 private:
  void generate(const std::map<Root, FieldLabel>& labels);

  std::string name_;
  std::optional<Preset> preset_;
  CartanMatrix cartan_;
  std::vector<int> symmetrizer_;
  std::vector<Root> positive_;
  std::vector<FieldLabel> labels_;
  std::vector<std::vector<int>> coroots_;
  int long_norm_ = 0;
};

}  // namespace ecalc
