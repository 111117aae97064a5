#pragma once

// Higher-order degenerate Bernoulli and Euler numbers at x = 0.
//
//   (t / (e_lambda(t) - 1))^k   = sum_n beta^{(k)}_{n,lambda} t^n/n!
//   (2 / (e_lambda(t) + 1))^alpha = sum_n E^{(alpha)}_{n,lambda} t^n/n!
//
// deg_bernoulli / deg_euler evaluate the closed sums over degenerate Stirling
// numbers; the *_gf functions expand the generating functions directly.

#include <cstddef>
#include <vector>

#include "dowlab/lambda_poly.hpp"

namespace dowlab {

// sum_l C(l+k, k)^{-1} S_{1,lambda}(l+k, k) S_{2,lambda}(n, l)
LambdaPoly deg_bernoulli(long n, long k);
// sum_l (-1/2)^l C(alpha+l+shift, l) l! S_{2,lambda}(n, l); shift = -1 is the
// correct expansion of (1 + u)^{-alpha}. Other shifts exist only to test
// misprinted variants against the generating function.
LambdaPoly deg_euler(long n, const Rational& alpha, long shift = -1);

// Coefficients 0..n_max of (t/(e_lambda(t) - 1))^k via series division.
std::vector<LambdaPoly> deg_bernoulli_gf(std::size_t n_max, long k);
// Coefficients 0..n_max of (1 + u)^{-alpha} composed with u = (e_lambda(t)-1)/2.
std::vector<LambdaPoly> deg_euler_gf(std::size_t n_max, const Rational& alpha);
// (2/(e_lambda(t) + 1))^alpha for a nonnegative integer alpha, by series
// division and powering.
std::vector<LambdaPoly> deg_euler_gf_power(std::size_t n_max, long alpha);

}  // namespace dowlab
