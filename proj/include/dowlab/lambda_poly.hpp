#pragma once

// Exact scalars of the library: rationals (GMP) and dense polynomials in the
// indeterminate lambda with rational coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dowlab {

using Integer = mpz_class;
using Rational = mpq_class;

// p/q in lowest terms with positive denominator. Throws DomainError on q == 0.
Rational make_rational(const Integer& p, const Integer& q = 1);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "7", "-3/4", "0.25", "-1.5e-2". Decimal input is converted exactly.
Rational parse_rational(std::string_view text);

class LambdaPoly {
 public:
  LambdaPoly() = default;
  LambdaPoly(long c);  // NOLINT(google-explicit-constructor)
  LambdaPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit LambdaPoly(std::vector<Rational> coeffs);

  static LambdaPoly lambda();
  static LambdaPoly monomial(const Rational& c, std::size_t degree);

  // Ascending coefficients, no trailing zeros; empty for the zero polynomial.
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // Coefficient of lambda^i (zero past the degree).
  Rational operator[](std::size_t i) const;
  Rational constant_term() const { return (*this)[0]; }

  Rational eval(const Rational& lambda0) const;
  // p(c * lambda); used for the lambda/m and m*lambda/(m+1) rescalings.
  LambdaPoly scale_lambda(const Rational& c) const;

  LambdaPoly operator-() const;
  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  LambdaPoly& operator*=(const LambdaPoly& o);
  LambdaPoly& operator*=(const Rational& c);
  LambdaPoly& operator/=(const Rational& c);

  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
  friend LambdaPoly operator*(LambdaPoly a, const Rational& c) { return a *= c; }
  friend LambdaPoly operator*(const Rational& c, LambdaPoly a) { return a *= c; }
  friend LambdaPoly operator/(LambdaPoly a, const Rational& c) { return a /= c; }
  friend LambdaPoly operator*(LambdaPoly a, long c) { return a *= Rational(c); }
  friend LambdaPoly operator*(long c, LambdaPoly a) { return a *= Rational(c); }
  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.coeffs_ == b.coeffs_; }

  LambdaPoly pow(unsigned e) const;

  // Canonical text: ascending degree, variable "l", e.g. "1 - 3*l + 2*l^2".
  std::string to_string() const;
  static LambdaPoly parse(std::string_view text);

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p);

enum class ArithOp { add, sub, mul };

LambdaPoly poly_arith(const LambdaPoly& a, const LambdaPoly& b, ArithOp op);
Rational poly_eval(const LambdaPoly& p, const Rational& lambda0);
bool poly_equal(const LambdaPoly& a, const LambdaPoly& b);

}  // namespace dowlab
