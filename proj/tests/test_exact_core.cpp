#include <doctest.h>

#include <random>

#include "dowlab/error.hpp"
#include "dowlab/lambda_poly.hpp"

using namespace dowlab;

namespace {

const LambdaPoly L = LambdaPoly::lambda();

LambdaPoly random_poly(std::mt19937_64& rng, int max_deg = 5) {
  std::uniform_int_distribution<int> deg(0, max_deg), num(-20, 20), den(1, 9);
  std::vector<Rational> cs;
  for (int i = deg(rng); i >= 0; --i) cs.push_back(make_rational(num(rng), den(rng)));
  return LambdaPoly(cs);
}

}  // namespace

TEST_CASE("basic arithmetic") {
  CHECK((1 - L) + L == LambdaPoly(1));
  const LambdaPoly p = (1 - L) * (1 - L * 2);
  CHECK(p == LambdaPoly::parse("1 - 3*l + 2*l^2"));
  CHECK(p.to_string() == "1 - 3*l + 2*l^2");
  CHECK(p.eval(0) == 1);
  CHECK(p.eval(make_rational(1, 2)) == 0);
  CHECK(poly_equal((1 - L) * (1 + L), 1 - L * L));
  CHECK(poly_arith(1 - L, L, ArithOp::add) == LambdaPoly(1));
  CHECK(poly_eval(p, 1) == 0);
  CHECK((L - L).is_zero());
  CHECK((L - L).degree() == -1);
}

TEST_CASE("rationals") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(parse_rational("0.25") == make_rational(1, 4));
  CHECK(parse_rational("-1.5e-2") == make_rational(-3, 200));
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK(parse_rational("010/3") == make_rational(10, 3));
  CHECK(parse_rational("0.08") == make_rational(2, 25));
  CHECK(LambdaPoly::parse("09*l") == LambdaPoly::monomial(9, 1));
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("text form") {
  CHECK(LambdaPoly().to_string() == "0");
  CHECK(LambdaPoly(make_rational(-1, 2)).to_string() == "-1/2");
  CHECK((L - L.pow(3)).to_string() == "l - l^3");
  CHECK(LambdaPoly::parse("-l + 1/3*l^2") == LambdaPoly({0, -1, make_rational(1, 3)}));
  CHECK(LambdaPoly::parse("2 - 4/6*l") == LambdaPoly({2, make_rational(-2, 3)}));
  CHECK_THROWS_AS(LambdaPoly::parse("1 +"), ParseError);
  CHECK_THROWS_AS(LambdaPoly::parse("x^2"), ParseError);
  CHECK_THROWS_AS(LambdaPoly::parse("1/0*l"), std::invalid_argument);
}

TEST_CASE("scale_lambda") {
  CHECK((1 - L * 3).scale_lambda(make_rational(1, 3)) == 1 - L);
}

TEST_CASE("random ring axioms") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LambdaPoly());
    const Rational q = make_rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 10) + 1);
    CHECK((a * b).eval(q) == a.eval(q) * b.eval(q));
    CHECK((a + b).eval(q) == a.eval(q) + b.eval(q));
    CHECK(LambdaPoly::parse(a.to_string()) == a);
    CHECK(LambdaPoly::parse(LambdaPoly::parse(a.to_string()).to_string()).to_string() == a.to_string());
  }
}
