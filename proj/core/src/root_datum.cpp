#include "ecalc/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ecalc/error.hpp"

namespace ecalc {

bool Root::positive() const {
  return std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

std::string Root::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

const char* preset_name(Preset p) {
  switch (p) {
    case Preset::SplitD4: return "split_D4";
    case Preset::QuasiD4: return "quasi_D4";
    case Preset::TriD4: return "tri_D4";
    case Preset::G2: return "G2";
    case Preset::A1: return "A1";
  }
  return "?";
}

std::optional<Preset> preset_from_name(const std::string& name) {
  for (Preset p : {Preset::SplitD4, Preset::QuasiD4, Preset::TriD4, Preset::G2, Preset::A1})
    if (name == preset_name(p)) return p;
  return std::nullopt;
}

namespace {

[[noreturn]] void not_finite(const std::string& why) { throw CalcError(ErrorCode::NotFiniteType, why); }

// Symmetrizer d with d_i A[i][j] = d_j A[j][i], scaled to coprime positive integers.
std::vector<int> symmetrize(const CartanMatrix& A) {
  const std::size_t n = A.size();
  std::vector<std::optional<Rational>> d(n);
  for (std::size_t start = 0; start < n; ++start) {
    if (d[start]) continue;
    d[start] = Rational(1);
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || A[i][j] == 0) continue;
        Rational dj = *d[i] * A[i][j] / A[j][i];
        if (!d[j]) {
          d[j] = dj;
          queue.push_back(j);
        } else if (*d[j] != dj) {
          not_finite("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  mpz_class lcm = 1;
  for (auto& x : d) lcm = lcm * x->get_den() / gcd(lcm, x->get_den());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (auto& x : d) {
    ints.push_back(mpz_class(*x * lcm));
    g = gcd(g, ints.back());
  }
  std::vector<int> out;
  for (auto& v : ints) {
    mpz_class q = v / g;
    if (!q.fits_sint_p() || q <= 0) not_finite("Cartan matrix is not symmetrizable with positive entries");
    out.push_back(static_cast<int>(q.get_si()));
  }
  return out;
}

void check_positive_definite(const CartanMatrix& A, const std::vector<int>& d) {
  const std::size_t n = A.size();
  std::vector<std::vector<Rational>> B(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) B[i][j] = Rational(d[i] * A[i][j]);
  // Symmetric Gaussian elimination: every pivot positive <=> positive definite.
  for (std::size_t k = 0; k < n; ++k) {
    if (B[k][k] <= 0) not_finite("symmetrized Cartan matrix is not positive definite");
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = B[i][k] / B[k][k];
      for (std::size_t j = k; j < n; ++j) B[i][j] -= f * B[k][j];
    }
  }
}

void check_cartan(const CartanMatrix& A) {
  const std::size_t n = A.size();
  if (n == 0) not_finite("empty Cartan matrix");
  for (const auto& row : A)
    if (row.size() != n) not_finite("Cartan matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && A[i][j] != 2) not_finite("diagonal entry is not 2");
      if (i != j && A[i][j] > 0) not_finite("positive off-diagonal entry");
      if (i != j && (A[i][j] == 0) != (A[j][i] == 0)) not_finite("zero pattern is not symmetric");
    }
}

}  // namespace

RootSystem RootSystem::build(Preset preset) {
  const CartanMatrix d4 = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  const CartanMatrix b3 = {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
  const CartanMatrix g2 = {{2, -3}, {-1, 2}};  // alpha_1 short
  RootSystem sys;
  switch (preset) {
    case Preset::SplitD4:
      sys = custom(preset_name(preset), d4, {{Root{{1, 0, 0, 0}}, FieldLabel::F()}});
      break;
    case Preset::QuasiD4:
      sys = custom(preset_name(preset), b3,
                   {{Root{{1, 0, 0}}, FieldLabel::F()}, {Root{{0, 0, 1}}, FieldLabel::K()}});
      break;
    case Preset::TriD4:
      sys = custom(preset_name(preset), g2,
                   {{Root{{1, 0}}, FieldLabel::E()}, {Root{{0, 1}}, FieldLabel::F()}});
      break;
    case Preset::G2:
      sys = custom(preset_name(preset), g2,
                   {{Root{{1, 0}}, FieldLabel::F()}, {Root{{0, 1}}, FieldLabel::F()}});
      break;
    case Preset::A1:
      sys = custom(preset_name(preset), {{2}}, {{Root{{1}}, FieldLabel::F()}});
      break;
  }
  sys.preset_ = preset;
  return sys;
}

RootSystem RootSystem::custom(std::string name, const CartanMatrix& cartan,
                              const std::map<Root, FieldLabel>& labels) {
  check_cartan(cartan);
  RootSystem sys;
  sys.name_ = std::move(name);
  sys.cartan_ = cartan;
  sys.symmetrizer_ = symmetrize(cartan);
  check_positive_definite(cartan, sys.symmetrizer_);
  sys.generate(labels);
  return sys;
}

void RootSystem::generate(const std::map<Root, FieldLabel>& labels) {
  const int n = rank();
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 1; i <= n; ++i) {
    seen.insert(simple_root(i));
    queue.push_back(simple_root(i));
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      Root s = reflect(i, r);
      if (!s.positive() || seen.count(s)) continue;
      if (seen.size() > 10000) not_finite("root closure does not terminate");
      seen.insert(s);
      queue.push_back(s);
    }
  }
  positive_.assign(seen.begin(), seen.end());
  std::stable_sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords < b.coords;
  });

  long_norm_ = 0;
  for (const Root& r : positive_) long_norm_ = std::max(long_norm_, norm2(r));

  // Labels: propagate each given label over its Weyl orbit, reject conflicts.
  std::vector<std::optional<FieldLabel>> assigned(positive_.size());
  for (const auto& [given, label] : labels) {
    if (label.degree < 1 || (label.symbol == "F" && label.degree != 1))
      throw CalcError(ErrorCode::InvalidInput, "invalid field label " + label.symbol);
    if (static_cast<int>(given.coords.size()) != n || !contains(given))
      throw CalcError(ErrorCode::UnknownRoot, "labelled root " + given.to_string() + " is not a root");
    std::set<Root> orbit{given.positive() ? given : -given};
    std::deque<Root> todo{*orbit.begin()};
    while (!todo.empty()) {
      Root r = todo.front();
      todo.pop_front();
      for (int i = 1; i <= n; ++i) {
        Root s = reflect(i, r);
        if (!s.positive()) s = -s;
        if (orbit.insert(s).second) todo.push_back(s);
      }
    }
    for (const Root& r : orbit) {
      auto& slot = assigned[index_of(r)];
      if (slot && *slot != label)
        throw CalcError(ErrorCode::LabelInconsistency,
                        "root " + r.to_string() + " labelled both " + slot->symbol + " and " + label.symbol);
      slot = label;
    }
  }
  labels_.clear();
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    if (!assigned[k])
      throw CalcError(ErrorCode::LabelInconsistency, "no label for root " + positive_[k].to_string());
    labels_.push_back(*assigned[k]);
  }

  coroots_.clear();
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    std::vector<Rational> std_c = standard_coroot(positive_[k]);
    std::vector<int> c;
    for (int j = 0; j < n; ++j) {
      Rational v = std_c[j] * field_degree(j + 1) / labels_[k].degree;
      if (!is_integer(v))
        throw CalcError(ErrorCode::LabelInconsistency,
                        "labels give a non-integral coroot for " + positive_[k].to_string());
      c.push_back(static_cast<int>(v.get_num().get_si()));
    }
    coroots_.push_back(std::move(c));
  }
}

RootSystem RootSystem::from_json(const nlohmann::json& doc) {
  try {
    CartanMatrix cartan = doc.at("cartan").get<CartanMatrix>();
    std::map<Root, FieldLabel> labels;
    for (const auto& [key, value] : doc.at("labels").items()) {
      Root r;
      std::string cleaned;
      for (char c : key)
        if (c != '(' && c != ')' && c != ' ') cleaned += c;
      std::stringstream ss(cleaned);
      for (std::string part; std::getline(ss, part, ',');) r.coords.push_back(std::stoi(part));
      FieldLabel label;
      if (value.is_string()) {
        std::string sym = value.get<std::string>();
        if (sym == "F") label = FieldLabel::F();
        else if (sym == "K") label = FieldLabel::K();
        else if (sym == "E") label = FieldLabel::E();
        else throw CalcError(ErrorCode::InvalidInput, "label '" + sym + "' needs an explicit degree");
      } else {
        label.symbol = value.at("symbol").get<std::string>();
        label.degree = value.at("degree").get<int>();
      }
      labels[r] = label;
    }
    return custom(doc.value("name", std::string("custom")), cartan, labels);
  } catch (const nlohmann::json::exception& e) {
    throw CalcError(ErrorCode::InvalidInput, std::string("malformed root system document: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw CalcError(ErrorCode::InvalidInput, "malformed root key in labels");
  }
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw CalcError(ErrorCode::InvalidInput, "simple index out of range");
  Root r{std::vector<int>(rank(), 0)};
  r.coords[i - 1] = 1;
  return r;
}

bool RootSystem::contains(const Root& r) const {
  if (static_cast<int>(r.coords.size()) != rank()) return false;
  const Root p = r.positive() ? r : -r;
  return std::binary_search(positive_.begin(), positive_.end(), p, [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords < b.coords;
  });
}

std::size_t RootSystem::index_of(const Root& r) const {
  if (static_cast<int>(r.coords.size()) == rank()) {
    const Root p = r.positive() ? r : -r;
    auto it = std::find(positive_.begin(), positive_.end(), p);
    if (it != positive_.end()) return static_cast<std::size_t>(it - positive_.begin());
  }
  throw CalcError(ErrorCode::UnknownRoot, r.to_string() + " is not a root of " + name_);
}

const FieldLabel& RootSystem::label_of(const Root& r) const { return labels_.at(index_of(r)); }

LengthClass RootSystem::length_class_of(const Root& r) const {
  index_of(r);
  return norm2(r) == long_norm_ ? LengthClass::Long : LengthClass::Short;
}

std::vector<int> RootSystem::coroot(const Root& r) const {
  std::vector<int> c = coroots_.at(index_of(r));
  if (!r.positive())
    for (int& x : c) x = -x;
  return c;
}

std::vector<Rational> RootSystem::standard_coroot(const Root& r) const {
  const int len = norm2(r);
  std::vector<Rational> c;
  for (int j = 0; j < rank(); ++j) c.emplace_back(Rational(2 * r.coords[j] * symmetrizer_[j], len));
  for (auto& x : c) x.canonicalize();
  return c;
}

int RootSystem::norm2(const Root& r) const {
  int out = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) out += r.coords[i] * r.coords[j] * symmetrizer_[i] * cartan_[i][j];
  return out;
}

int RootSystem::cartan_pairing(const Root& r, int i) const {
  int p = 0;
  for (int j = 0; j < rank(); ++j) p += r.coords[j] * cartan_[i - 1][j];
  return p;
}

Root RootSystem::reflect(int i, const Root& r) const {
  if (i < 1 || i > rank()) throw CalcError(ErrorCode::InvalidInput, "simple index out of range");
  Root out = r;
  out.coords[i - 1] -= cartan_pairing(r, i);
  return out;
}

std::vector<Rational> RootSystem::root_character(const Root& r) const {
  std::vector<Rational> out;
  for (int j = 1; j <= rank(); ++j) {
    Rational v(cartan_pairing(r, j), field_degree(j));
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

nlohmann::json RootSystem::to_json() const {
  nlohmann::json roots = nlohmann::json::array();
  nlohmann::json labels = nlohmann::json::object();
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    std::string key;
    for (std::size_t j = 0; j < positive_[k].coords.size(); ++j)
      key += (j ? "," : "") + std::to_string(positive_[k].coords[j]);
    labels[key] = {{"symbol", labels_[k].symbol}, {"degree", labels_[k].degree}};
    roots.push_back({{"coords", positive_[k].coords},
                     {"label", labels_[k].symbol},
                     {"degree", labels_[k].degree},
                     {"length", norm2(positive_[k]) == long_norm_ ? "long" : "short"},
                     {"coroot", coroots_[k]}});
  }
  return {{"name", name_}, {"rank", rank()}, {"cartan", cartan_}, {"symmetrizer", symmetrizer_},
          {"labels", labels}, {"positive_roots", roots}};
}

}  // namespace ecalc
