#pragma once

// Degenerate Whitney numbers of Dowling lattices.
//
//   (mx+1)_{n,lambda} = sum_k W_{m,lambda}(n,k) m^k (x)_k          second kind
//   m^n (x)_n         = sum_k V_{m,lambda}(n,k) (mx+1)_{k,lambda}  first kind
//
// with the r-shifted variants (mx+r in place of mx+1), the degenerate
// Dowling and Tanny-Dowling polynomials, and the Dobinski-type series.
//
// The default path for W and V is the triangular recurrence in n; the
// defining relations and generating functions are exposed as independent
// routes for cross-checking.

#include <cstddef>
#include <optional>

#include "dowlab/lambda_poly.hpp"
#include "dowlab/numbers.hpp"
#include "dowlab/series.hpp"

namespace dowlab {

struct WhitneyParams {
  long m = 1;
  long r = 1;
  // nullopt keeps lambda symbolic.
  std::optional<Rational> lambda;

  // Throws DomainError unless m >= 1 and r >= 1.
  void validate() const;
};

void validate_m(long m);

// Triangles along each route. Families Wdeg/Vdeg carry r = 1.
Triangle build_whitney2_recurrence(long m, std::size_t n_max);
Triangle build_whitney1_recurrence(long m, std::size_t n_max);
// (mx+r)_{n,lambda} converted onto m^k (x)_k.
Triangle build_r_whitney2(long m, long r, std::size_t n_max);
// m^n (x)_n converted onto (mx+r)_{k,lambda}, working in u = mx + r.
Triangle build_r_whitney1(long m, long r, std::size_t n_max);
// (1/k!) ((e_lambda^m(t) - 1)/m)^k e_lambda^r(t)
Triangle r_whitney2_gf(long m, long r, std::size_t n_max);
// (1/k!) (log_lambda e_m(t))^k e_m^{-r}(t), e_m(t) = (1 + m t)^{1/m}
Triangle r_whitney1_gf(long m, long r, std::size_t n_max);

LambdaPoly whitney2(long m, long n, long k);
LambdaPoly whitney1(long m, long n, long k);
LambdaPoly r_whitney2(long m, long r, long n, long k);
LambdaPoly r_whitney1(long m, long r, long n, long k);

enum class W2Path {
  binomial_sum,        // (1/(k! m^k)) sum_l C(k,l) (-1)^{k-l} (lm+1)_{n,lambda}
  rescaled_stirling,   // sum_i C(n,i) m^{i-k} (1)_{n-i,lambda} S_{2,lambda/m}(i,k)
  forward_difference,  // (1/(k! m^k)) Delta^k (mx+1)_{n,lambda} at x = 0
  generating_function, // coefficient extraction
};

enum class W1Path {
  stirling_triple_sum, // triple sum over S_{1,lambda}, S_2, S_1
  column_zero_sum,     // triple sum weighted by V(n-i, 0)
  rescaled_stirling,   // sum_k (-1)^{k-i} C(k,i) m^{n-k} S_{1,lambda/m}(n,k) <1>_{k-i,lambda}
  generating_function, // coefficient extraction
};

// Alternative explicit formulas for W_{m,lambda}(n,k). binomial_sum and
// forward_difference are defined for n < k as well (where they vanish); the other
// paths throw IndexError outside 0 <= k <= n.
LambdaPoly whitney2_alt(long m, long n, long k, W2Path path);
LambdaPoly whitney1_alt(long m, long n, long k, W1Path path);

// V_{m,lambda}(n,0) = (-1)^n (m+1)(2m+1)...((n-1)m+1).
Integer whitney1_column0(long m, long n);

// D_{m,lambda}(n,x) = sum_k W_{m,lambda}(n,k) x^k.
LambdaPoly dowling_poly(long m, long n, const Rational& x);
// F_{m,lambda}(n,x) = sum_k k! W_{m,lambda}(n,k) x^k.
LambdaPoly tanny_dowling_poly(long m, long n, const Rational& x);

// e_lambda(t) exp(x (e_lambda^m(t) - 1)/m)
TruncatedSeries dowling_gf(long m, const Rational& x, std::size_t order);
// e_lambda(t) / (1 - x (e_lambda^m(t) - 1)/m)
TruncatedSeries tanny_dowling_gf(long m, const Rational& x, std::size_t order);

struct DobinskiRequest {
  long m = 1;
  long n = 0;
  Rational x = 1;
  Rational lambda = 0;
  long terms = 100;
  double tol = 1e-9;
};

struct DobinskiResult {
  long double truncated = 0;
  long double exact = 0;
  long double abs_diff = 0;
  bool pass = false;
};

// exp(-x/m) sum_{k < terms} x^k/(m^k k!) (mk+1)_{n,lambda}, evaluated in
// extended precision, against the exact D_{m,lambda}(n,x) at the given lambda.
DobinskiResult dobinski_eval(const DobinskiRequest& req);

}  // namespace dowlab
