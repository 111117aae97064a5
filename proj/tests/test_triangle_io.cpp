#include <doctest.h>

#include <json.hpp>

#include "dowlab/error.hpp"
#include "dowlab/triangle_io.hpp"

using namespace dowlab;

TEST_CASE("csv layout") {
  const auto t = triangle(Family::Wdeg, 1, 1, 2)->slice(2);
  CHECK(emit_csv(t) == "1\n1, 1\n1 - l, 3 - l, 1\n");
  const auto v = triangle(Family::Vdeg, 1, 1, 1)->slice(1);
  CHECK(emit_csv(v, Rational(0)) == "1\n-1, 1\n");
  CHECK(emit_csv(t, make_rational(1, 2)) == "1\n1, 1\n1/2, 5/2, 1\n");
}

TEST_CASE("json layout") {
  const auto t = triangle(Family::S2deg, 1, 0, 3)->slice(3);
  const auto j = nlohmann::json::parse(emit_json(t));
  CHECK(j["family"] == "S2deg");
  CHECK(j["lambda"] == "symbolic");
  CHECK(j["n_max"] == 3);
  CHECK(j["rows"][2][1] == "1 - l");
  CHECK(nlohmann::json::parse(emit_json(t, make_rational(1, 3)))["lambda"] == "1/3");
}

TEST_CASE("latex cells") {
  CHECK(latex_cell(LambdaPoly::parse("1 - 3*l + 1/2*l^2")) == "$1 - 3\\lambda + \\frac{1}{2}\\lambda^{2}$");
  CHECK(latex_cell(LambdaPoly()) == "$0$");
  CHECK(latex_cell(LambdaPoly::parse("-l")) == "$-\\lambda$");
  CHECK(parse_latex_cell("$-\\frac{2}{3}\\lambda + 4$") == LambdaPoly::parse("4 - 2/3*l"));
  CHECK_THROWS_AS(parse_latex_cell("1 + x"), ParseError);
}

TEST_CASE("every format round trips") {
  for (Family f : {Family::Wdeg, Family::Vdeg, Family::S1deg, Family::WdegR, Family::VdegR}) {
    for (long m = 1; m <= 3; ++m) {
      const auto t = triangle(f, m, 2, 7)->slice(7);
      for (Format fmt : {Format::csv, Format::json, Format::latex}) {
        CHECK(parse(fmt, emit(fmt, t)) == t.rows);
        CHECK(parse(fmt, emit(fmt, t, make_rational(-3, 7))) == t.eval_lambda(make_rational(-3, 7)).rows);
      }
    }
  }
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_csv("1\n1, 2, 3\n"), ParseError);
  CHECK_THROWS_AS(parse_json("{\"rows\": [[1]]}"), ParseError);
  CHECK_THROWS_AS(parse_json("not json"), ParseError);
  CHECK(!parse_format("xml"));
}
