#include "dowlab/lambda_poly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "dowlab/error.hpp"

namespace dowlab {

Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw DomainError("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const std::string original(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("bad rational: '" + original + "'");
    const Integer p(std::string(num), 10), q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator: '" + original + "'");
    return make_rational(negative ? Integer(-p) : p, q);
  }
  // Decimal with optional fraction and exponent.
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) throw ParseError("bad exponent: '" + original + "'");
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto int_part = s.substr(0, dot);
    auto frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty()))
      throw ParseError("bad number: '" + original + "'");
    digits = std::string(int_part) + std::string(frac_part);
    frac_len = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw ParseError("bad number: '" + original + "'");
    digits = std::string(s);
  }
  Integer p(digits, 10);
  if (negative) p = -p;
  long shift = exponent - frac_len;
  if (shift >= 0) return make_rational(p * pow10(static_cast<unsigned long>(shift)));
  return make_rational(p, pow10(static_cast<unsigned long>(-shift)));
}

LambdaPoly::LambdaPoly(long c) : coeffs_{Rational(c)} { normalize(); }

LambdaPoly::LambdaPoly(const Rational& c) : coeffs_{c} { normalize(); }

LambdaPoly::LambdaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

LambdaPoly LambdaPoly::lambda() { return monomial(1, 1); }

LambdaPoly LambdaPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> cs(degree + 1);
  cs[degree] = c;
  return LambdaPoly(std::move(cs));
}

void LambdaPoly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational LambdaPoly::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational LambdaPoly::eval(const Rational& lambda0) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lambda0 + *it;
  return acc;
}

LambdaPoly LambdaPoly::scale_lambda(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  Rational power(1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = coeffs_[i] * power;
    power *= c;
  }
  return LambdaPoly(std::move(out));
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LambdaPoly(std::move(out));
}

LambdaPoly& LambdaPoly::operator*=(const LambdaPoly& o) { return *this = *this * o; }

LambdaPoly& LambdaPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LambdaPoly& LambdaPoly::operator/=(const Rational& c) {
  if (c == 0) throw DomainError("LambdaPoly division by zero");
  for (auto& x : coeffs_) x /= c;
  return *this;
}

LambdaPoly LambdaPoly::pow(unsigned e) const {
  LambdaPoly result(1), base(*this);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string LambdaPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Rational& c = coeffs_[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (d == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "l";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

LambdaPoly LambdaPoly::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty polynomial");

  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad polynomial '" + std::string(text) + "': " + why);
  };

  std::vector<Rational> cs;
  std::size_t i = 0;
  auto read_digits = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };

  bool first = true;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      throw fail("expected '+' or '-' at offset " + std::to_string(i));
    }
    first = false;

    Rational coef(1);
    bool have_coef = false;
    std::string num = read_digits();
    if (!num.empty()) {
      have_coef = true;
      Integer p(num, 10), q(1);
      if (i < s.size() && s[i] == '/') {
        ++i;
        std::string den = read_digits();
        if (den.empty()) throw fail("missing denominator");
        q = Integer(den, 10);
        if (q == 0) throw fail("zero denominator");
      }
      coef = make_rational(p, q);
    }
    std::size_t degree = 0;
    bool star = false;
    if (i < s.size() && s[i] == '*') {
      if (!have_coef) throw fail("'*' without coefficient");
      star = true;
      ++i;
    }
    if (i < s.size() && s[i] == 'l') {
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string deg = read_digits();
        if (deg.empty() || deg.size() > 6) throw fail("bad exponent");
        degree = std::stoul(deg);
      }
    } else if (star || !have_coef) {
      throw fail("expected 'l' at offset " + std::to_string(i));
    }
    if (negative) coef = -coef;
    if (cs.size() <= degree) cs.resize(degree + 1);
    cs[degree] += coef;
  }
  return LambdaPoly(std::move(cs));
}

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) { return os << p.to_string(); }

LambdaPoly poly_arith(const LambdaPoly& a, const LambdaPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  return {};
}

Rational poly_eval(const LambdaPoly& p, const Rational& lambda0) { return p.eval(lambda0); }

bool poly_equal(const LambdaPoly& a, const LambdaPoly& b) { return a == b; }

}  // namespace dowlab
