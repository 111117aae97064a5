#include <doctest.h>

#include <random>

#include "dowlab/error.hpp"
#include "dowlab/factorial_bases.hpp"
#include "dowlab/numbers.hpp"
#include "dowlab/series.hpp"

using namespace dowlab;

namespace {

const LambdaPoly L = LambdaPoly::lambda();

TruncatedSeries e_minus_one(std::size_t order) { return deg_exp(1, 1, order) - TruncatedSeries::one(order); }

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::vector<LambdaPoly> cs;
  for (std::size_t i = 0; i <= order; ++i)
    cs.push_back(LambdaPoly({make_rational(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1),
                             static_cast<long>(rng() % 7) - 3}));
  cs[0] = make_rational(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 5) + 1);
  return TruncatedSeries(cs);
}

}  // namespace

TEST_CASE("products") {
  const auto sq = deg_exp(1, 1, 6) * deg_exp(1, 1, 6);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(sq.coeff(n) == lambda_falling(2, n, L));
  const auto tt = TruncatedSeries::t(4) * TruncatedSeries::t(4);
  CHECK(tt == TruncatedSeries(std::vector<LambdaPoly>{0, 0, 2, 0, 0}));
  const auto f = deg_exp(L, 2, 5);
  CHECK(f * TruncatedSeries::one(5) == f);
  CHECK(series_mul(f, TruncatedSeries::one(3)).order() == 3);
}

TEST_CASE("division") {
  const auto q = series_div(TruncatedSeries::t(6), e_minus_one(6), 1);
  CHECK(q.coeff(0) == LambdaPoly(1));
  CHECK(q.coeff(1) == (L - 1) / Rational(2));
  const auto r = series_div(e_minus_one(6), TruncatedSeries::t(6), 1);
  CHECK(r.coeff(0) == LambdaPoly(1));
  // (e_l(t) - 1)/t = sum_j (1)_{j+1,l}/(j+1) t^j/j!
  CHECK(r.coeff(1) == (1 - L) / Rational(2));
  CHECK(r.coeff(2) == lambda_falling(1, 3, L) / Rational(3));
  const auto f = deg_exp(3, 1, 5);
  CHECK(series_div(f, f, 0) == TruncatedSeries::one(5));
  CHECK_THROWS_AS(series_div(f, TruncatedSeries::t(5), 0), DomainError);
  CHECK_THROWS_AS(series_div(f, TruncatedSeries::constant(L, 5), 0), DomainError);
}

TEST_CASE("composition and exp") {
  const auto id = series_compose(deg_log(10), e_minus_one(10));
  CHECK(id == TruncatedSeries::t(10));
  const auto f = deg_exp(L + 1, 1, 6);
  CHECK(series_compose(f, TruncatedSeries::t(6)) == f);
  const auto bell = series_exp(e_minus_one(5));
  CHECK(bell.coeff(2) == 2 - L);
  CHECK(bell.coeff(3) == LambdaPoly::parse("5 - 6*l + 2*l^2"));
  CHECK(series_exp(TruncatedSeries(4)) == TruncatedSeries::one(4));
  const auto et = series_exp(TruncatedSeries::t(6));
  for (std::size_t n = 0; n <= 6; ++n) CHECK(et.coeff(n) == LambdaPoly(1));
  CHECK_THROWS_AS(series_exp(TruncatedSeries::one(3)), DomainError);
  CHECK_THROWS_AS(series_compose(f, TruncatedSeries::one(3)), DomainError);
}

TEST_CASE("inverse of log up to order 16") {
  for (std::size_t n : {1, 5, 16}) CHECK(series_compose(deg_log(n), e_minus_one(n)) == TruncatedSeries::t(n));
}

TEST_CASE("deg_exp, deg_log, binomial series") {
  CHECK(deg_exp(1, 1, 3) ==
        TruncatedSeries(std::vector<LambdaPoly>{1, 1, 1 - L, (1 - L) * (1 - L * 2)}));
  CHECK(deg_exp(0, 1, 5) == TruncatedSeries::one(5));
  CHECK(deg_exp(2, 1, 2).coeff(2) == (2 - L) * 2);
  CHECK(deg_exp(1, 3, 2).coeff(2) == (1 - L) * 9);
  const auto lg = deg_log(8);
  CHECK(lg.coeff(0).is_zero());
  CHECK(lg.coeff(1) == LambdaPoly(1));
  CHECK(lg.coeff(3) == (L - 1) * (L - 2));
  for (std::size_t n = 1; n <= 8; ++n) {
    const Rational expect = (n % 2 ? 1 : -1) * Rational(factorial(n - 1));
    CHECK(lg.coeff(n).eval(0) == expect);
  }
  const auto b = binomial_series(make_rational(1, 2), 2, 2);
  CHECK(b.coeff(1) == LambdaPoly(1));
  CHECK(b.coeff(2) == LambdaPoly(-1));
  CHECK(binomial_series(1, 1, 4) == TruncatedSeries(std::vector<LambdaPoly>{1, 1, 0, 0, 0}));
  CHECK(deg_exp(1, 1, 5).coeff(0) == LambdaPoly(1));
  CHECK(coeff(TruncatedSeries::one(3), 3).is_zero());
  CHECK_THROWS_AS(deg_exp(1, 1, 3).coeff(4), IndexError);
}

TEST_CASE("column generating functions") {
  for (long k = 0; k <= 8; ++k) {
    const auto col = e_minus_one(12).pow(static_cast<unsigned>(k)) * LambdaPoly(Rational(1, factorial(k)));
    const auto lg = deg_log(12).pow(static_cast<unsigned>(k)) * LambdaPoly(Rational(1, factorial(k)));
    for (long n = k; n <= 12; ++n) {
      CHECK(col.coeff(n) == deg_stirling2(n, k));
      CHECK(lg.coeff(n) == deg_stirling1(n, k));
    }
  }
}

TEST_CASE("random series algebra") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_series(rng, 6), b = random_series(rng, 6), c = random_series(rng, 6);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(series_div(a, a, 0) == TruncatedSeries::one(6));
  }
}
