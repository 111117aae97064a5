#include <doctest.h>

#include "dowlab/factorial_bases.hpp"
#include "dowlab/specials.hpp"

using namespace dowlab;

namespace {

const LambdaPoly L = LambdaPoly::lambda();

// Classical Bernoulli numbers from sum_{j<=n} C(n+1, j) B_j = 0.
std::vector<Rational> bernoulli(std::size_t n_max) {
  std::vector<Rational> b(n_max + 1);
  b[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * b[j];
    b[n] = -s / Rational(n + 1);
  }
  return b;
}

}  // namespace

TEST_CASE("spot values") {
  CHECK(deg_euler(1, 1) == LambdaPoly(make_rational(-1, 2)));
  CHECK(deg_euler(2, 1) == L / Rational(2));
  for (long k = 0; k <= 4; ++k) CHECK(deg_bernoulli(0, k) == LambdaPoly(1));
  CHECK(deg_bernoulli(1, 1) == (L - 1) / Rational(2));
  CHECK(deg_bernoulli(2, 1) == (1 - L * L) / Rational(6));
}

TEST_CASE("closed sums match generating functions") {
  for (long k = 0; k <= 4; ++k) {
    const auto gf = deg_bernoulli_gf(10, k);
    for (long n = 0; n <= 10; ++n) CHECK(deg_bernoulli(n, k) == gf[n]);
  }
  for (long alpha = 1; alpha <= 3; ++alpha) {
    const auto gf = deg_euler_gf(10, alpha), pw = deg_euler_gf_power(10, alpha);
    for (long n = 0; n <= 10; ++n) {
      CHECK(deg_euler(n, alpha) == gf[n]);
      CHECK(gf[n] == pw[n]);
    }
  }
  const auto half = deg_euler_gf(6, make_rational(1, 2));
  for (long n = 0; n <= 6; ++n) CHECK(deg_euler(n, make_rational(1, 2)) == half[n]);
}

TEST_CASE("classical limits") {
  const auto b = bernoulli(10);
  for (long n = 0; n <= 10; ++n) CHECK(deg_bernoulli(n, 1).eval(0) == b[n]);
  const Rational euler[] = {1, make_rational(-1, 2), 0, make_rational(1, 4), 0, make_rational(-1, 2)};
  for (long n = 0; n <= 5; ++n) CHECK(deg_euler(n, 1).eval(0) == euler[n]);
}
