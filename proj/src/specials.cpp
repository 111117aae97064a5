#include "dowlab/specials.hpp"

#include "dowlab/error.hpp"
#include "dowlab/factorial_bases.hpp"
#include "dowlab/numbers.hpp"
#include "dowlab/series.hpp"

namespace dowlab {

LambdaPoly deg_bernoulli(long n, long k) {
  if (n < 0 || k < 0) throw DomainError("deg_bernoulli: n and k must be nonnegative");
  LambdaPoly acc;
  for (long l = 0; l <= n; ++l) {
    const Rational inv = Rational(1) / Rational(binomial(static_cast<std::size_t>(l + k), static_cast<std::size_t>(k)));
    acc += deg_stirling1(l + k, k) * deg_stirling2(n, l) * inv;
  }
  return acc;
}

LambdaPoly deg_euler(long n, const Rational& alpha, long shift) {
  if (n < 0) throw DomainError("deg_euler: n must be nonnegative");
  LambdaPoly acc;
  Rational half_power(1);  // (-1/2)^l
  for (long l = 0; l <= n; ++l) {
    const Rational c = half_power * generalized_binomial(alpha + Rational(l + shift), static_cast<std::size_t>(l)) *
                       Rational(factorial(static_cast<std::size_t>(l)));
    acc += deg_stirling2(n, l) * c;
    half_power *= make_rational(-1, 2);
  }
  return acc;
}

std::vector<LambdaPoly> deg_bernoulli_gf(std::size_t n_max, long k) {
  if (k < 0) throw DomainError("deg_bernoulli_gf: k must be nonnegative");
  const std::size_t order = n_max + 1;
  const auto e_minus_one = deg_exp(1, 1, order) - TruncatedSeries::one(order);
  const auto base = series_div(TruncatedSeries::t(order), e_minus_one, 1);
  return base.pow(static_cast<unsigned>(k)).truncate(n_max).coeffs();
}

std::vector<LambdaPoly> deg_euler_gf(std::size_t n_max, const Rational& alpha) {
  const auto u = (deg_exp(1, 1, n_max) - TruncatedSeries::one(n_max)) * LambdaPoly(make_rational(1, 2));
  return series_compose(binomial_series(-alpha, 1, n_max), u).coeffs();
}

std::vector<LambdaPoly> deg_euler_gf_power(std::size_t n_max, long alpha) {
  if (alpha < 0) throw DomainError("deg_euler_gf_power: alpha must be nonnegative");
  const auto two = TruncatedSeries::constant(2, n_max);
  const auto base = series_div(two, deg_exp(1, 1, n_max) + TruncatedSeries::one(n_max), 0);
  return base.pow(static_cast<unsigned>(alpha)).coeffs();
}

}  // namespace dowlab
