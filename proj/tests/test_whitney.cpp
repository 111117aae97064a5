#include <doctest.h>

#include <cmath>

#include "dowlab/error.hpp"
#include "dowlab/factorial_bases.hpp"
#include "dowlab/whitney.hpp"

using namespace dowlab;

namespace {

const LambdaPoly L = LambdaPoly::lambda();

// Solves (mx+r)_{n,l} = sum_k T(n,k) m^k (x)_k by evaluating at x = 0..n and
// forward substitution; (j)_k vanishes for k > j.
std::vector<LambdaPoly> second_kind_row(long m, long r, long n) {
  std::vector<LambdaPoly> row(n + 1);
  for (long j = 0; j <= n; ++j) {
    LambdaPoly rest = lambda_falling(m * j + r, n, L);
    for (long k = 0; k < j; ++k) {
      Rational w = 1;
      for (long i = 0; i < k; ++i) w *= Rational(m * (j - i));
      rest -= row[k] * w;
    }
    Rational lead = 1;
    for (long i = 0; i < j; ++i) lead *= Rational(m * (j - i));
    row[j] = rest / lead;
  }
  return row;
}

// Checks m^n (x)_n = sum_k V(n,k) (mx+r)_{k,l} at x = 0..n.
bool first_kind_row_ok(long m, long r, long n) {
  for (long x = 0; x <= n; ++x) {
    LambdaPoly sum;
    for (long k = 0; k <= n; ++k) sum += r_whitney1(m, r, n, k) * lambda_falling(m * x + r, k, L);
    Rational lhs = 1;
    for (long i = 0; i < n; ++i) lhs *= Rational(m * (x - i));
    if (sum != LambdaPoly(lhs)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("small Whitney values") {
  for (long m = 1; m <= 3; ++m) {
    CHECK(whitney2(m, 2, 1) == m + 2 - L);
    CHECK(whitney1(m, 2, 1) == L - (m + 2));
    CHECK(whitney1(m, 2, 0) == LambdaPoly(m + 1));
    CHECK(whitney1(m, 3, 0) == LambdaPoly(-(m + 1) * (2 * m + 1)));
    CHECK(whitney1_column0(m, 3) == -(m + 1) * (2 * m + 1));
    // n = 2, j = 0 column of the orthogonality sum
    CHECK(whitney1(m, 2, 0) * whitney2(m, 0, 0) + whitney1(m, 2, 1) * whitney2(m, 1, 0) +
              whitney1(m, 2, 2) * whitney2(m, 2, 0) ==
          LambdaPoly(0));
    for (long r = 1; r <= 3; ++r) {
      CHECK(r_whitney2(m, r, 1, 0) == LambdaPoly(r));
      CHECK(r_whitney1(m, r, 1, 0) == LambdaPoly(-r));
    }
  }
  const long expect[] = {1, 7, 6, 1};
  for (long k = 0; k <= 3; ++k) CHECK(whitney2(1, 3, k).eval(0) == expect[k]);
  CHECK(dowling_poly(1, 2, 1) == 5 - L * 2);
  CHECK(tanny_dowling_poly(1, 2, 1) == 6 - L * 2);
}

TEST_CASE("defining relations by evaluation") {
  for (long m = 1; m <= 3; ++m)
    for (long r = 1; r <= 3; ++r)
      for (long n = 0; n <= 8; ++n) {
        const auto row = second_kind_row(m, r, n);
        for (long k = 0; k <= n; ++k) CHECK(r_whitney2(m, r, n, k) == row[k]);
        CHECK(first_kind_row_ok(m, r, n));
      }
}

TEST_CASE("routes agree") {
  for (long m = 1; m <= 3; ++m) {
    CHECK(build_whitney2_recurrence(m, 10).rows == build_r_whitney2(m, 1, 10).rows);
    CHECK(build_whitney1_recurrence(m, 10).rows == build_r_whitney1(m, 1, 10).rows);
    CHECK(r_whitney2_gf(m, 1, 10).rows == build_r_whitney2(m, 1, 10).rows);
    CHECK(r_whitney1_gf(m, 1, 10).rows == build_r_whitney1(m, 1, 10).rows);
    for (long n = 0; n <= 7; ++n)
      for (long k = 0; k <= n; ++k) {
        for (auto p : {W2Path::binomial_sum, W2Path::rescaled_stirling, W2Path::forward_difference,
                       W2Path::generating_function})
          CHECK(whitney2_alt(m, n, k, p) == whitney2(m, n, k));
        for (auto p : {W1Path::stirling_triple_sum, W1Path::column_zero_sum, W1Path::rescaled_stirling,
                       W1Path::generating_function})
          CHECK(whitney1_alt(m, n, k, p) == whitney1(m, n, k));
      }
    CHECK(whitney2_alt(m, 2, 4, W2Path::binomial_sum).is_zero());
    CHECK(whitney2_alt(m, 2, 4, W2Path::forward_difference).is_zero());
    CHECK_THROWS_AS(whitney2_alt(m, 2, 4, W2Path::rescaled_stirling), IndexError);
  }
}

TEST_CASE("Dowling polynomial generating functions") {
  for (long m = 1; m <= 3; ++m)
    for (const Rational x : {Rational(1), make_rational(-2, 3)}) {
      const auto d = dowling_gf(m, x, 8), f = tanny_dowling_gf(m, x, 8);
      for (long n = 0; n <= 8; ++n) {
        CHECK(d.coeff(n) == dowling_poly(m, n, x));
        CHECK(f.coeff(n) == tanny_dowling_poly(m, n, x));
      }
    }
}

TEST_CASE("Dobinski") {
  auto run = [](long m, long n, Rational x, Rational lambda, long terms) {
    DobinskiRequest req;
    req.m = m;
    req.n = n;
    req.x = x;
    req.lambda = lambda;
    req.terms = terms;
    return dobinski_eval(req);
  };
  const auto a = run(1, 1, 1, 0, 50);
  CHECK(a.pass);
  CHECK(static_cast<double>(a.exact) == doctest::Approx(2.0));
  CHECK(std::fabs(static_cast<double>(a.truncated) - 2.0) < 1e-9);
  CHECK(std::fabs(static_cast<double>(run(2, 0, 3, make_rational(1, 2), 100).truncated) - 1.0) < 1e-9);
  CHECK(run(2, 4, 1, make_rational(1, 4), 200).pass);
  CHECK(run(2, 6, 1, make_rational(1, 4), 200).pass);
  CHECK(!run(1, 4, 5, 0, 3).pass);
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(whitney2(0, 2, 1), DomainError);
  CHECK_THROWS_AS(whitney1(-1, 2, 1), DomainError);
  CHECK_THROWS_AS(r_whitney2(1, 0, 2, 1), DomainError);
  CHECK_THROWS_AS(whitney2(1, 2, 3), IndexError);
  WhitneyParams p;
  p.r = 0;
  CHECK_THROWS_AS(p.validate(), DomainError);
}
