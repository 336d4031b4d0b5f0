#include "ecalc/affine.hpp"

#include <cctype>

#include "ecalc/error.hpp"

namespace ecalc {

AffineForm::AffineForm(Rational constant) : constant_(std::move(constant)) {}

AffineForm AffineForm::variable(const std::string& name, const Rational& coeff) {
  AffineForm f;
  if (coeff != 0) f.coeffs_[name] = coeff;
  return f;
}

Rational AffineForm::coeff(const std::string& name) const {
  auto it = coeffs_.find(name);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::optional<std::pair<std::string, Rational>> AffineForm::leading() const {
  if (coeffs_.empty()) return std::nullopt;
  return *coeffs_.begin();
}

AffineForm AffineForm::substitute(const std::map<std::string, AffineForm>& values) const {
  AffineForm out(constant_);
  for (const auto& [name, c] : coeffs_) {
    auto it = values.find(name);
    if (it == values.end())
      out += variable(name, c);
    else
      out += it->second * c;
  }
  return out;
}

AffineForm AffineForm::evaluate(const Assignment& values) const {
  AffineForm out(constant_);
  for (const auto& [name, c] : coeffs_) {
    auto it = values.find(name);
    if (it == values.end())
      out += variable(name, c);
    else
      out.constant_ += c * it->second;
  }
  return out;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  constant_ += o.constant_;
  for (const auto& [name, c] : o.coeffs_) {
    Rational& slot = coeffs_[name];
    slot += c;
    if (slot == 0) coeffs_.erase(name);
  }
  return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& o) { return *this += -o; }

AffineForm& AffineForm::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    constant_ = 0;
    return *this;
  }
  constant_ *= c;
  for (auto& entry : coeffs_) entry.second *= c;
  return *this;
}

bool operator<(const AffineForm& a, const AffineForm& b) {
  if (a.coeffs_ != b.coeffs_) return a.coeffs_ < b.coeffs_;
  return a.constant_ < b.constant_;
}

std::string AffineForm::to_string() const {
  std::string out;
  for (const auto& [name, c] : coeffs_) {
    Rational mag = abs(c);
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (mag != 1) out += is_integer(mag) ? mag.get_str() : "(" + mag.get_str() + ")";
    out += name;
  }
  if (constant_ != 0 || out.empty()) {
    if (constant_ >= 0 && !out.empty()) out += "+";
    out += constant_.get_str();
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view t) : text_(t) {}

  AffineForm run() {
    AffineForm out;
    skip();
    bool first = true;
    while (pos_ < text_.size()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        fail();
      }
      out += term() * sign;
      first = false;
      skip();
    }
    if (first) fail();
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail() const {
    throw CalcError(ErrorCode::InvalidInput, "cannot parse affine form '" + std::string(text_) + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational number() {
    std::string n = digits();
    if (n.empty()) fail();
    if (peek() == '/') {
      ++pos_;
      std::string d = digits();
      if (d.empty()) fail();
      return parse_rational(n + "/" + d);
    }
    return parse_rational(n);
  }

  std::string ident() {
    std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail();
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  AffineForm term() {
    Rational c = 1;
    bool have_number = false;
    if (peek() == '(') {
      ++pos_;
      skip();
      Rational sign = 1;
      if (peek() == '-') {
        sign = -1;
        ++pos_;
      }
      c = sign * number();
      skip();
      if (peek() != ')') fail();
      ++pos_;
      have_number = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = number();
      have_number = true;
    }
    skip();
    if (peek() == '*') {
      ++pos_;
      skip();
      return AffineForm::variable(ident(), c);
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) return AffineForm::variable(ident(), c);
    if (!have_number) fail();
    return AffineForm(c);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AffineForm AffineForm::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace ecalc
