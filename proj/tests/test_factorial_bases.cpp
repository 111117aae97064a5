#include <doctest.h>

#include <random>

#include "dowlab/factorial_bases.hpp"

using namespace dowlab;

namespace {

const LambdaPoly L = LambdaPoly::lambda();

Rational random_rational(std::mt19937_64& rng) {
  return make_rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 10) + 1);
}

}  // namespace

TEST_CASE("falling and rising") {
  CHECK(lambda_falling(1, 3, L) == LambdaPoly::parse("1 - 3*l + 2*l^2"));
  CHECK(lambda_falling(5, 2, 1) == LambdaPoly(20));
  CHECK(lambda_falling(7, 0, L) == LambdaPoly(1));
  CHECK(lambda_rising(1, 2, L) == 1 + L);
  CHECK(lambda_rising(1, 3, L) == LambdaPoly::parse("1 + 3*l + 2*l^2"));
  Rational p = 1;
  for (std::size_t n = 0; n <= 10; ++n, p *= make_rational(7, 3))
    CHECK(lambda_falling(make_rational(7, 3), n, L).eval(0) == p);
}

TEST_CASE("basis and Newton conversion") {
  const auto nodes = NodeSequence::arithmetic(0, L, 2);
  CHECK(basis_poly(2, nodes) == XPoly({0, -L, 1}));
  const XPoly x2({0, 0, 1});
  const auto c = newton_convert(x2, NodeSequence::arithmetic(0, 1, 2));
  REQUIRE(c.size() == 3);
  CHECK(c[0] == LambdaPoly(0));
  CHECK(c[1] == LambdaPoly(1));
  CHECK(c[2] == LambdaPoly(1));
  const XPoly ff2({0, -1, 1});  // X(X-1)
  const auto s = newton_convert(ff2, nodes);
  CHECK(s[1] == L - 1);
  CHECK(s[2] == LambdaPoly(1));
  CHECK(newton_convert(XPoly(), nodes).empty());
}

TEST_CASE("Newton round trip on random input") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t deg = rng() % 11;
    std::vector<LambdaPoly> cs;
    for (std::size_t i = 0; i <= deg; ++i) cs.push_back(LambdaPoly({random_rational(rng), random_rational(rng)}));
    if (cs.back().is_zero()) cs.back() = 1;
    const XPoly p(cs);
    std::vector<LambdaPoly> nodes;
    for (std::size_t i = 0; i < deg; ++i) nodes.push_back(LambdaPoly({random_rational(rng), random_rational(rng)}));
    const NodeSequence seq{nodes};
    CHECK(newton_expand(newton_convert(p, seq), seq) == p);
    cs.back() = 1;
    const auto monic = newton_convert(XPoly(cs), seq);
    CHECK(monic.back() == LambdaPoly(1));
  }
}

TEST_CASE("finite difference of a falling factorial") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 0; n <= 10; ++n) {
    for (int t = 0; t < 5; ++t) {
      const Rational z = random_rational(rng);
      LambdaPoly sum;
      for (std::size_t j = 0; j <= n; ++j) {
        const LambdaPoly term = lambda_falling(LambdaPoly(Rational(z - j)), n, L) * Rational(binomial(n, j));
        sum += j % 2 ? -term : term;
      }
      CHECK(sum == LambdaPoly(Rational(factorial(n))));
    }
  }
}

TEST_CASE("binomials") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(generalized_binomial(make_rational(1, 2), 2) == make_rational(-1, 8));
  CHECK(generalized_binomial(-3, 2) == 6);
}
