// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dowlab/specials.hpp"
#include "dowlab/verify.hpp"
#include "dowlab/whitney.hpp"

using namespace dowlab;

namespace {

const std::vector<long> kM{1, 2, 3};
const std::vector<long> kR{1, 2, 3};

bool ids_hold(const std::vector<std::string>& ids, long n_max, std::string& detail) {
  bool ok = true;
  for (const auto& id : ids) {
    const auto r = run_identity(id, n_max, kM, kR, 0);
    if (r.status == Status::fail) {
      ok = false;
      detail += " " + id;
      if (r.counterexample) detail += "[" + r.counterexample->params + "]";
    }
  }
  return ok;
}

bool triple_cross_check(std::string& detail) {
  for (long m : kM) {
    const auto w = build_whitney2_recurrence(m, 12);
    if (w.rows != build_r_whitney2(m, 1, 12).rows || w.rows != r_whitney2_gf(m, 1, 12).rows) {
      detail = " W m=" + std::to_string(m);
      return false;
    }
    const auto v = build_whitney1_recurrence(m, 12);
    if (v.rows != build_r_whitney1(m, 1, 12).rows || v.rows != r_whitney1_gf(m, 1, 12).rows) {
      detail = " V m=" + std::to_string(m);
      return false;
    }
  }
  return true;
}

bool explicit_formulas(std::string& detail) {
  for (long m : kM)
    for (long n = 0; n <= 10; ++n)
      for (long k = 0; k <= n; ++k) {
        for (auto p : {W2Path::binomial_sum, W2Path::rescaled_stirling, W2Path::forward_difference,
                       W2Path::generating_function})
          if (whitney2_alt(m, n, k, p) != whitney2(m, n, k)) {
            detail = " W m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
            return false;
          }
        for (auto p : {W1Path::stirling_triple_sum, W1Path::column_zero_sum, W1Path::rescaled_stirling,
                       W1Path::generating_function})
          if (whitney1_alt(m, n, k, p) != whitney1(m, n, k)) {
            detail = " V m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
            return false;
          }
      }
  return ids_hold({"thm12", "thm13", "thm14", "thm8", "thm18", "thm19"}, 10, detail);
}

bool structural(std::string& detail) {
  const bool a = ids_hold({"orthogonality", "cor2", "cor4", "cor11", "lemma15", "thm16", "thm17", "thm21", "cor22",
                           "cor22_remark", "thm23", "thm26", "eq29_30"},
                          10, detail);
  const bool b = ids_hold({"lemma24", "thm25"}, 12, detail);
  return a && b;
}

bool r_generalization(std::string& detail) {
  for (long m : kM)
    for (long n = 0; n <= 10; ++n)
      for (long k = 0; k <= n; ++k)
        if (r_whitney2(m, 1, n, k) != whitney2(m, n, k) || r_whitney1(m, 1, n, k) != whitney1(m, n, k)) {
          detail = " r=1 reduction m=" + std::to_string(m);
          return false;
        }
  return ids_hold({"eq68", "eq71", "eq73", "eq74", "eq75", "eq77", "eq77_reductions"}, 10, detail);
}

bool classical_limits(std::string& detail) { return ids_hold({"lambda0_limits", "lambda0_specials"}, 12, detail); }

bool bernoulli_euler(std::string& detail) {
  const LambdaPoly l = LambdaPoly::lambda();
  if (deg_bernoulli(1, 1) != (l - 1) / Rational(2) || deg_bernoulli(2, 1) != (1 - l * l) / Rational(6)) {
    detail = " spot values";
    return false;
  }
  return ids_hold({"thm27_bernoulli", "thm27_euler"}, 10, detail);
}

bool dobinski(std::string& detail) {
  double worst = 0;
  for (long m : kM)
    for (long n = 0; n <= 8; ++n)
      for (const Rational x : {make_rational(1, 2), Rational(1), Rational(2)})
        for (const Rational lambda : {Rational(0), make_rational(1, 4), make_rational(1, 2)}) {
          DobinskiRequest req;
          req.m = m;
          req.n = n;
          req.x = x;
          req.lambda = lambda;
          req.terms = 200;
          req.tol = 1e-9;
          const auto res = dobinski_eval(req);
          worst = std::max(worst, static_cast<double>(res.abs_diff));
          if (!res.pass) {
            detail = " m=" + std::to_string(m) + " n=" + std::to_string(n) + " x=" + to_string(x) +
                     " lambda=" + to_string(lambda);
            return false;
          }
        }
  char buf[64];
  std::snprintf(buf, sizeof buf, " max |diff| %.3g", worst);
  detail = buf;
  return true;
}

bool discrepancies(std::string& detail) {
  const auto reports = verify_all(8, kM, kR, 0);
  for (const char* id : {"thm20", "eq81_binomial"}) {
    const IdentityReport* found = nullptr;
    for (const auto& r : reports)
      if (r.id == id) found = &r;
    if (!found || found->status != Status::paper_discrepancy || found->resolution.empty()) {
      detail += std::string(" ") + id + (found ? " undecided" : " missing");
      return false;
    }
    detail += std::string(" ") + id + ": " + found->resolution + ";";
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<bool(std::string&)>>> criteria{
      {"W and V by recurrence, basis conversion and generating function", triple_cross_check},
      {"explicit formulas for W and V", explicit_formulas},
      {"structural identities", structural},
      {"r-Whitney generalization", r_generalization},
      {"lambda = 0 limits", classical_limits},
      {"degenerate Bernoulli and Euler numbers", bernoulli_euler},
      {"Dobinski series", dobinski},
      {"misprint entries decided", discrepancies},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].second(detail);
    } catch (const std::exception& e) {
      detail = std::string(" exception: ") + e.what();
    }
    std::printf("%s %zu %s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first, detail.c_str());
    failed += ok ? 0 : 1;
  }
  return failed ? 1 : 0;
}
