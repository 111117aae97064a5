#include <doctest.h>

#include <json.hpp>

#include "dowlab/error.hpp"
#include "dowlab/verify.hpp"

using namespace dowlab;

namespace {

const IdentityReport* find(const std::vector<IdentityReport>& rs, std::string_view id) {
  for (const auto& r : rs)
    if (r.id == id) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("single identities") {
  const auto orth = run_identity("orthogonality", 6, {1, 2}, {1}, 0);
  CHECK(orth.status == Status::pass);
  CHECK(!orth.counterexample);
  CHECK(orth.params_tested > 0);
  CHECK(run_identity("thm12_zero", 8, {1, 2, 3}, {1}, 0).status == Status::pass);
  CHECK(run_identity("eq75", 8, {1}, {1, 2, 3}, 0).status == Status::pass);
  CHECK(run_identity("lemma15", 10, {1}, {1}, 7).status == Status::pass);
  CHECK_THROWS_AS(run_identity("nosuch", VerifyConfig{}), DomainError);
  VerifyConfig bad;
  bad.m_set = {0};
  CHECK_THROWS_AS(run_identity("orthogonality", bad), DomainError);
}

TEST_CASE("whole catalog") {
  const auto tiny = verify_all(0, {1}, {1}, 0);
  CHECK(tiny.size() == identity_catalog().size());
  CHECK(all_passed(tiny));
  const auto rs = verify_all(8, {1, 2, 3}, {1, 2}, 0);
  CHECK(all_passed(rs));
  for (std::size_t i = 0; i < rs.size(); ++i) CHECK(rs[i].id == identity_catalog()[i].id);
  for (const char* id : {"thm16", "thm20", "cor22", "eq81_binomial"}) {
    const auto* r = find(rs, id);
    REQUIRE(r);
    CHECK(r->status == Status::paper_discrepancy);
    CHECK(!r->resolution.empty());
    CHECK(r->counterexample);
  }
  const auto* eq73 = find(rs, "eq73");
  REQUIRE(eq73);
  CHECK(eq73->status == Status::pass);
}

TEST_CASE("same seed gives the same report") {
  VerifyConfig cfg;
  cfg.n_max = 6;
  cfg.seed = 42;
  const auto a = reports_json(verify_all(cfg, {}, 4), cfg).dump();
  const auto b = reports_json(verify_all(cfg, {}, 1), cfg).dump();
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["seed"] == 42);
  CHECK(j["reports"].size() == identity_catalog().size());
  CHECK(j["reports"][0].contains("status"));
}

TEST_CASE("a corrupted triangle is caught") {
  Context ctx;
  ctx.triangle_source = [](Family f, long m, long r, std::size_t n_max) -> std::shared_ptr<const Triangle> {
    auto t = triangle(f, m, r, n_max);
    if (f != Family::Wdeg || m != 2) return t;
    auto bad = std::make_shared<Triangle>(*t);
    bad->rows[3][1] += LambdaPoly(1);
    return bad;
  };
  VerifyConfig cfg;
  cfg.n_max = 6;
  for (const char* id : {"orthogonality", "thm6"}) {
    const auto r = run_identity(id, cfg, ctx);
    CHECK(r.status == Status::fail);
    REQUIRE(r.counterexample);
    CHECK(!r.counterexample->params.empty());
    CHECK(r.counterexample->lhs != r.counterexample->rhs);
  }
  CHECK(!all_passed(verify_all(cfg, ctx, 2)));
}
