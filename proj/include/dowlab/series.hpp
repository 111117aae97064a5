#pragma once

// Truncated exponential generating functions over LambdaPoly.
//
// A series of order N stores a_0..a_N with f(t) = sum_n a_n t^n / n!, so the
// coefficient read off a generating function is the number itself, with no
// factorial bookkeeping at call sites. Binary operations truncate to the
// smaller order of their operands.

#include <cstddef>
#include <vector>

#include "dowlab/lambda_poly.hpp"

namespace dowlab {

class TruncatedSeries {
 public:
  // Zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0);
  explicit TruncatedSeries(std::vector<LambdaPoly> coeffs);

  static TruncatedSeries one(std::size_t order);
  static TruncatedSeries constant(const LambdaPoly& c, std::size_t order);
  // f(t) = t.
  static TruncatedSeries t(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<LambdaPoly>& coeffs() const { return coeffs_; }
  // a_n; throws IndexError when n > order.
  const LambdaPoly& coeff(std::size_t n) const;

  TruncatedSeries truncate(std::size_t order) const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const LambdaPoly& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const LambdaPoly& c) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

  TruncatedSeries pow(unsigned e) const;

 private:
  std::vector<LambdaPoly> coeffs_;
};

// c_n = sum_k C(n,k) a_k b_{n-k}.
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

// f / g after removing t^z from both, z = known_zero_order. The first z
// coefficients of f and g must vanish and g's next coefficient must be a
// nonzero rational. Result order is min(order f, order g) - z.
TruncatedSeries series_div(const TruncatedSeries& f, const TruncatedSeries& g, std::size_t known_zero_order);

// f(g(t)); g must have a zero constant term.
TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g);

// exp(f(t)); f must have a zero constant term.
TruncatedSeries series_exp(const TruncatedSeries& f);

// e_lambda^x(m_scale * t): a_n = m_scale^n (x)_{n,lambda}.
TruncatedSeries deg_exp(const LambdaPoly& x, long m_scale, std::size_t order);

// log_lambda(1 + t): a_0 = 0, a_n = (lambda-1)(lambda-2)...(lambda-(n-1)).
TruncatedSeries deg_log(std::size_t order);

// (1 + c t)^alpha: a_n = n! C(alpha, n) c^n.
TruncatedSeries binomial_series(const Rational& alpha, const Rational& c, std::size_t order);

const LambdaPoly& coeff(const TruncatedSeries& f, std::size_t n);

}  // namespace dowlab
