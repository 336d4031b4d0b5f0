#include "ecalc/weyl.hpp"

#include <algorithm>
#include <cctype>

#include "ecalc/error.hpp"

namespace ecalc {

WeylWord WeylWord::inverse() const { return {{letters.rbegin(), letters.rend()}}; }

WeylWord operator*(const WeylWord& a, const WeylWord& b) {
  WeylWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

std::string WeylWord::to_string() const {
  if (letters.empty()) return "e";
  bool wide = std::any_of(letters.begin(), letters.end(), [](int i) { return i > 9; });
  std::string out = "w[";
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (wide && k) out += ",";
    out += std::to_string(letters[k]);
  }
  return out + "]";
}

WeylWord WeylWord::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "e" || s.empty() || s == "w[]" || s == "[]") return {};
  if (s.rfind("w[", 0) == 0) s = s.substr(1);
  if (s.front() == '[') {
    if (s.back() != ']') throw CalcError(ErrorCode::InvalidInput, "bad Weyl word '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  WeylWord w;
  bool commas = s.find(',') != std::string::npos;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (cur.empty()) throw CalcError(ErrorCode::InvalidInput, "bad Weyl word '" + std::string(text) + "'");
      w.letters.push_back(std::stoi(cur));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (commas)
        cur += c;
      else
        w.letters.push_back(c - '0');
    } else {
      throw CalcError(ErrorCode::InvalidInput, "bad Weyl word '" + std::string(text) + "'");
    }
  }
  if (commas) {
    if (cur.empty()) throw CalcError(ErrorCode::InvalidInput, "bad Weyl word '" + std::string(text) + "'");
    w.letters.push_back(std::stoi(cur));
  }
  for (int i : w.letters)
    if (i < 1) throw CalcError(ErrorCode::InvalidInput, "Weyl letters are 1-based");
  return w;
}

Root weyl_act(const RootSystem& system, const WeylWord& w, const Root& r) {
  Root out = r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = system.reflect(*it, out);
  return out;
}

namespace {

// s_i on field-normalized fundamental-weight coordinates.
void reflect_in_place(const RootSystem& sys, int i, std::vector<Rational>& x) {
  const Rational si = x[i - 1];
  if (si == 0) return;
  for (int j = 1; j <= sys.rank(); ++j) {
    int a = sys.cartan()[j - 1][i - 1];
    if (a == 0) continue;
    x[j - 1] -= si * a * sys.field_degree(i) / sys.field_degree(j);
  }
}

}  // namespace

WeylGroup::WeylGroup(const RootSystem& system) : system_(system) {
  const int n = system_.rank();
  std::vector<Rational> rho(n, Rational(1));
  words_.push_back({});
  index_[rho] = 0;
  std::vector<std::pair<std::vector<Rational>, WeylWord>> layer{{rho, {}}};
  while (!layer.empty()) {
    std::map<std::vector<Rational>, WeylWord> next;
    for (const auto& [key, word] : layer) {
      for (int i = 1; i <= n; ++i) {
        // key = w.rho; (w s_i).rho = w.(s_i rho): recompute from the word to stay simple.
        WeylWord cand = word * WeylWord{{i}};
        std::vector<Rational> k = key_of(cand);
        if (index_.count(k)) continue;
        auto it = next.find(k);
        if (it == next.end() || cand < it->second) next[k] = cand;
      }
    }
    if (words_.size() + next.size() > 200000)
      throw CalcError(ErrorCode::InvalidInput, "Weyl group too large to enumerate");
    std::vector<std::pair<std::vector<Rational>, WeylWord>> sorted(next.begin(), next.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    for (const auto& [k, w] : sorted) {
      index_[k] = words_.size();
      words_.push_back(w);
    }
    layer = std::move(sorted);
  }
}

std::vector<Rational> WeylGroup::key_of(const WeylWord& w) const {
  std::vector<Rational> x(system_.rank(), Rational(1));
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (*it < 1 || *it > system_.rank()) throw CalcError(ErrorCode::InvalidInput, "letter out of range");
    reflect_in_place(system_, *it, x);
  }
  return x;
}

std::size_t WeylGroup::index_of(const WeylWord& w) const { return index_.at(key_of(w)); }

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const { return index_of(words_[a] * words_[b]); }

std::size_t WeylGroup::inverse(std::size_t a) const { return index_of(words_[a].inverse()); }

WeylWord WeylGroup::reflection(const Root& alpha) const {
  // alpha = u . alpha_i  =>  s_alpha = u s_i u^{-1}
  const Root target = alpha.positive() ? alpha : -alpha;
  system_.index_of(target);
  for (const WeylWord& u : words_)
    for (int i = 1; i <= system_.rank(); ++i)
      if (weyl_act(system_, u, system_.simple_root(i)) == target) return reduce(u * WeylWord{{i}} * u.inverse());
  throw CalcError(ErrorCode::UnknownRoot, alpha.to_string());
}

std::vector<Root> WeylGroup::inverted_roots(const WeylWord& w) const {
  const WeylWord inv = w.inverse();
  std::vector<Root> out;
  for (const Root& g : system_.positive_roots())
    if (!weyl_act(system_, inv, g).positive()) out.push_back(g);
  return out;
}

std::vector<WeylWord> WeylGroup::coset_reps(const std::set<int>& levi) const {
  for (int i : levi)
    if (i < 1 || i > system_.rank()) throw CalcError(ErrorCode::InvalidInput, "Levi index out of range");
  std::vector<WeylWord> out;
  for (const WeylWord& w : words_) {
    const WeylWord inv = w.inverse();
    bool ok = std::all_of(levi.begin(), levi.end(), [&](int i) {
      return weyl_act(system_, inv, system_.simple_root(i)).positive();
    });
    if (ok) out.push_back(w);
  }
  return out;
}

}  // namespace ecalc
