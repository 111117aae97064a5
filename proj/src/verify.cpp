#include "dowlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "dowlab/error.hpp"
#include "dowlab/factorial_bases.hpp"
#include "dowlab/series.hpp"
#include "dowlab/specials.hpp"
#include "dowlab/whitney.hpp"

namespace dowlab {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::paper_discrepancy: return "paper-discrepancy";
  }
  return "fail";
}

namespace {

using TrianglePtr = std::shared_ptr<const Triangle>;

const LambdaPoly& lam() {
  static const LambdaPoly l = LambdaPoly::lambda();
  return l;
}

std::size_t sz(long v) { return static_cast<std::size_t>(v); }
Rational bin(long n, long k) { return k < 0 || k > n ? Rational(0) : Rational(binomial(sz(n), sz(k))); }
Rational fact(long n) { return Rational(factorial(sz(n))); }
Rational sign(long e) { return e % 2 ? Rational(-1) : Rational(1); }
Rational rpow(const Rational& b, long e) {
  Rational acc(1);
  for (long i = 0; i < e; ++i) acc *= b;
  return acc;
}
LambdaPoly ff(const LambdaPoly& x, long n) { return lambda_falling(x, sz(n), lam()); }
LambdaPoly rf(const LambdaPoly& x, long n, const LambdaPoly& step) { return lambda_rising(x, sz(n), step); }
LambdaPoly rf(const LambdaPoly& x, long n) { return lambda_rising(x, sz(n), lam()); }

class Params {
 public:
  template <class T>
  Params& add(const char* key, const T& value) {
    if (!text_.empty()) text_ += ",";
    std::ostringstream os;
    if constexpr (std::is_same_v<T, Rational>)
      os << to_string(value);
    else
      os << value;
    text_ += std::string(key) + "=" + os.str();
    return *this;
  }
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

class Tally {
 public:
  void check(const LambdaPoly& lhs, const LambdaPoly& rhs, const Params& p) {
    ++count_;
    if (!first_ && !(lhs == rhs)) first_ = Counterexample{p.str(), lhs.to_string(), rhs.to_string()};
  }
  void check_text(bool ok, const std::string& lhs, const std::string& rhs, const Params& p) {
    ++count_;
    if (!first_ && !ok) first_ = Counterexample{p.str(), lhs, rhs};
  }
  bool ok() const { return !first_; }
  long count() const { return count_; }
  const std::optional<Counterexample>& first() const { return first_; }

  IdentityReport report(const std::string& id) const {
    IdentityReport r;
    r.id = id;
    r.params_tested = count_;
    r.status = first_ ? Status::fail : Status::pass;
    r.counterexample = first_;
    return r;
  }

 private:
  long count_ = 0;
  std::optional<Counterexample> first_;
};

// Decides between the literal and the corrected reading of a formula.
IdentityReport two_readings(const std::string& id, const Tally& literal, const Tally& corrected,
                            const std::string& literal_text, const std::string& corrected_text) {
  IdentityReport r;
  r.id = id;
  r.params_tested = literal.count();
  if (literal.ok()) {
    r.status = Status::pass;
    r.resolution = "literal reading holds: " + literal_text;
  } else if (corrected.ok()) {
    r.status = Status::paper_discrepancy;
    r.counterexample = literal.first();
    r.resolution = "literal reading fails (" + literal_text + "); corrected reading holds: " + corrected_text;
  } else {
    r.status = Status::fail;
    r.counterexample = literal.first();
    r.resolution = "neither reading holds";
  }
  return r;
}

// Rationals p/q with p in [-20, 20], q in [1, 10]. Drawn with plain modular
// reduction of mt19937_64 output so the stream is identical on every platform.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : rng_(seed) {}
  Rational next() {
    const long p = static_cast<long>(rng_() % 41) - 20;
    const long q = static_cast<long>(rng_() % 10) + 1;
    return make_rational(p, q);
  }
  LambdaPoly next_poly(int degree) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(next());
    return LambdaPoly(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

// Sample points 0, 1, ..., degree: enough to decide a polynomial identity in x
// of at most that degree.
std::vector<Rational> x_points(long degree) {
  std::vector<Rational> xs;
  for (long i = 0; i <= degree; ++i) xs.emplace_back(i);
  return xs;
}

long top(const VerifyConfig& cfg) { return std::max(cfg.n_max, 0L); }

struct Tables {
  const Context& ctx;
  TrianglePtr get(Family f, long m, long r, long n) const { return ctx.triangle_source(f, m, r, sz(std::max(n, 0L))); }
  TrianglePtr W(long m, long n) const { return get(Family::Wdeg, m, 1, n); }
  TrianglePtr V(long m, long n) const { return get(Family::Vdeg, m, 1, n); }
  TrianglePtr S1(long n) const { return get(Family::S1deg, 1, 0, n); }
  TrianglePtr S2(long n) const { return get(Family::S2deg, 1, 0, n); }
};

// sum_k T(n,k) c_k x^k with c_k = k! when weighted.
LambdaPoly row_poly(const Triangle& t, long n, const Rational& x, bool factorial_weight = false) {
  LambdaPoly acc;
  Rational xk(1);
  for (long k = 0; k <= n; ++k) {
    acc += t.at(n, k) * (factorial_weight ? xk * fact(k) : xk);
    xk *= x;
  }
  return acc;
}

void compare_triangles(Tally& tally, const Triangle& a, const Triangle& b, long n_max, Params base,
                       const std::function<Rational(long, long)>& b_scale = {}) {
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= n; ++k) {
      Params p = base;
      p.add("n", n).add("k", k);
      const LambdaPoly rhs = b_scale ? b.at(n, k) * b_scale(n, k) : b.at(n, k);
      tally.check(a.at(n, k), rhs, p);
    }
}

// ---- generating functions and defining relations ------------------------

IdentityReport check_thm1_gf(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long m : cfg.m_set) compare_triangles(t, *Tables{ctx}.W(m, N), r_whitney2_gf(m, 1, sz(N)), N, Params().add("m", m));
  return t.report("thm1_gf");
}

IdentityReport check_thm5_gf(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long m : cfg.m_set) compare_triangles(t, *Tables{ctx}.V(m, N), r_whitney1_gf(m, 1, sz(N)), N, Params().add("m", m));
  return t.report("thm5_gf");
}

IdentityReport check_thm3_gf(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long m : cfg.m_set) {
    const auto w = Tables{ctx}.W(m, N);
    for (const Rational& x : x_points(N)) {
      const auto gf = dowling_gf(m, x, sz(N));
      for (long n = 0; n <= N; ++n) t.check(gf.coeff(sz(n)), row_poly(*w, n, x), Params().add("m", m).add("x", x).add("n", n));
    }
  }
  return t.report("thm3_gf");
}

IdentityReport check_thm9(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long m : cfg.m_set) {
    const auto w = Tables{ctx}.W(m, N);
    for (const Rational& x : x_points(N)) {
      const auto gf = tanny_dowling_gf(m, x, sz(N));
      for (long n = 0; n <= N; ++n)
        t.check(gf.coeff(sz(n)), row_poly(*w, n, x, true), Params().add("m", m).add("x", x).add("n", n));
    }
  }
  return t.report("thm9");
}

IdentityReport check_thm6(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long m : cfg.m_set) {
    const Triangle def = build_r_whitney2(m, 1, sz(N));
    compare_triangles(t, *Tables{ctx}.W(m, N), def, N, Params().add("m", m).add("route", "definition"));
    for (long n = 1; n <= N; ++n)
      for (long k = 0; k <= n; ++k) {
        const LambdaPoly rhs = def.value_or_zero(n - 1, k - 1) +
                               def.value_or_zero(n - 1, k) * (LambdaPoly(m * k + 1) - lam() * Rational(n - 1));
        t.check(def.at(n, k), rhs, Params().add("m", m).add("n", n).add("k", k));
      }
  }
  return t.report("thm6");
}

IdentityReport check_thm7(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long m : cfg.m_set) {
    const Triangle def = build_r_whitney1(m, 1, sz(N));
    compare_triangles(t, *Tables{ctx}.V(m, N), def, N, Params().add("m", m).add("route", "definition"));
    for (long n = 1; n <= N; ++n)
      for (long k = 0; k <= n; ++k) {
        const LambdaPoly rhs = def.value_or_zero(n - 1, k) * (LambdaPoly(m - n * m - 1) + lam() * Rational(k)) +
                               def.value_or_zero(n - 1, k - 1);
        t.check(def.at(n, k), rhs, Params().add("m", m).add("n", n).add("k", k));
      }
  }
  return t.report("thm7");
}

IdentityReport check_w1_path(const std::string& id, W1Path path, const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long m : cfg.m_set) {
    const auto v = Tables{ctx}.V(m, N);
    for (long n = 0; n <= N; ++n)
      for (long k = 0; k <= n; ++k) t.check(whitney1_alt(m, n, k, path), v->at(n, k), Params().add("m", m).add("n", n).add("k", k));
  }
  return t.report(id);
}

IdentityReport check_w2_path(const std::string& id, W2Path path, const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long m : cfg.m_set) {
    const auto w = Tables{ctx}.W(m, N);
    for (long n = 0; n <= N; ++n)
      for (long k = 0; k <= n; ++k) t.check(whitney2_alt(m, n, k, path), w->at(n, k), Params().add("m", m).add("n", n).add("k", k));
  }
  return t.report(id);
}

IdentityReport check_thm12_zero(const VerifyConfig& cfg, const Context&) {
  Tally t;
  const long N = top(cfg);
  for (long m : cfg.m_set)
    for (long k = 1; k <= N; ++k)
      for (long n = 0; n < k; ++n)
        t.check(whitney2_alt(m, n, k, W2Path::binomial_sum), LambdaPoly(), Params().add("m", m).add("n", n).add("k", k));
  return t.report("thm12_zero");
}

// ---- Dobinski --------------------------------------------------------------

std::string decimal(long double v) {
  std::ostringstream os;
  os << std::setprecision(21) << v;
  return os.str();
}

IdentityReport check_thm10(const VerifyConfig& cfg, const Context&) {
  Tally t;
  const long N = std::min(top(cfg), 8L);
  const std::vector<Rational> xs{make_rational(1, 2), Rational(1), Rational(2)};
  const std::vector<Rational> lambdas{Rational(0), make_rational(1, 4), make_rational(1, 2)};
  for (long m : cfg.m_set)
    for (long n = 0; n <= N; ++n)
      for (const auto& x : xs)
        for (const auto& l : lambdas) {
          DobinskiRequest req;
          req.m = m;
          req.n = n;
          req.x = x;
          req.lambda = l;
          req.terms = 200;
          req.tol = 1e-9;
          const DobinskiResult res = dobinski_eval(req);
          t.check_text(res.pass, decimal(res.truncated), decimal(res.exact),
                       Params().add("m", m).add("n", n).add("x", x).add("lambda", l).add("diff", decimal(res.abs_diff)));
        }
  return t.report("thm10");
}

// ---- m = 1 and degenerate Bell relations -------------------------------

LambdaPoly bell_from(const Triangle& s2, long n, const Rational& x) { return row_poly(s2, n, x); }

IdentityReport check_cor2(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  const Tables tab{ctx};
  const auto w = tab.W(1, N);
  const auto s2 = tab.S2(N + 1);
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n; ++k)
      t.check(w->at(n, k), s2->value_or_zero(n + 1, k + 1) + lam() * Rational(n) * s2->value_or_zero(n, k + 1),
              Params().add("n", n).add("k", k));
  return t.report("cor2");
}

IdentityReport check_cor4(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  const Tables tab{ctx};
  const auto w = tab.W(1, N);
  const auto s2 = tab.S2(N + 1);
  for (long n = 0; n <= N; ++n)
    t.check(row_poly(*w, n, 1), bell_from(*s2, n + 1, 1) + lam() * Rational(n) * bell_from(*s2, n, 1), Params().add("n", n));
  return t.report("cor4");
}

IdentityReport check_cor11(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  const Tables tab{ctx};
  const auto w = tab.W(1, N);
  const auto s2 = tab.S2(N + 1);
  for (long n = 0; n <= N; ++n)
    for (const Rational& x : x_points(std::max(n + 1, 3L)))
      t.check(row_poly(*w, n, x) * x, bell_from(*s2, n + 1, x) + lam() * Rational(n) * bell_from(*s2, n, x),
              Params().add("n", n).add("x", x));
  return t.report("cor11");
}

IdentityReport check_eq29_30(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  const Tables tab{ctx};
  const auto s2 = tab.S2(N + 1);
  const auto w = tab.W(1, N);
  for (long n = 0; n <= N; ++n) {
    // Bell polynomials read straight off exp(x (e_lambda(t) - 1)).
    for (const Rational& x : x_points(n + 1)) {
      const auto bell_gf = series_exp((deg_exp(1, 1, sz(N + 1)) - TruncatedSeries::one(sz(N + 1))) * LambdaPoly(x));
      LambdaPoly sum;
      Rational xk(1);
      for (long k = 0; k <= n; ++k) {
        sum += s2->at(n + 1, k + 1) * xk;
        xk *= x;
      }
      t.check(bell_gf.coeff(sz(n + 1)), sum * x, Params().add("n", n).add("x", x).add("form", "bell"));
    }
    LambdaPoly dowling;
    for (long k = 0; k <= n; ++k) dowling += s2->at(n + 1, k + 1) + lam() * Rational(n) * s2->value_or_zero(n, k + 1);
    t.check(row_poly(*w, n, 1), dowling, Params().add("n", n).add("form", "dowling"));
  }
  return t.report("eq29_30");
}

// ---- recursions and rescalings ------------------------------------------

IdentityReport check_lemma15(const VerifyConfig& cfg, const Context&) {
  Tally t;
  const long N = top(cfg);
  RationalSource rs(cfg.seed);
  std::vector<Rational> zs;
  for (int i = 0; i < 5; ++i) zs.push_back(rs.next());
  for (const auto& z : zs)
    for (long n = 0; n <= N; ++n) {
      LambdaPoly acc;
      for (long j = 0; j <= n; ++j) acc += ff(LambdaPoly(Rational(z - Rational(j))), n) * (sign(j) * bin(n, j));
      t.check(acc, LambdaPoly(fact(n)), Params().add("z", z).add("n", n));
    }
  return t.report("lemma15");
}

IdentityReport check_thm16(const VerifyConfig& cfg, const Context& ctx) {
  Tally literal, corrected;
  const long N = top(cfg);
  for (long m : cfg.m_set) {
    const auto w = Tables{ctx}.W(m, N);
    for (long n = 0; n + 1 <= N; ++n)
      for (long k = 0; k <= n; ++k) {
        const long lo = std::max(k - 1, 0L);
        LambdaPoly lit, cor;
        for (long l = lo; l <= n; ++l) {
          LambdaPoly inner_lit, inner_cor;
          for (long i = lo; i <= l; ++i) {
            const LambdaPoly term = w->value_or_zero(i, k - 1) * bin(l, i);
            inner_lit += term;
            inner_cor += term * ff(LambdaPoly(m), l - i);
          }
          const LambdaPoly weight = (-lam()).pow(static_cast<unsigned>(n - l)) * (fact(n) / fact(l));
          lit += (w->value_or_zero(l, k) + inner_lit) * weight;
          cor += (w->value_or_zero(l, k) + inner_cor) * weight;
        }
        const Params p = Params().add("m", m).add("n", n).add("k", k);
        literal.check(w->at(n + 1, k), lit, p);
        corrected.check(w->at(n + 1, k), cor, p);
      }
  }
  return two_readings("thm16", literal, corrected, "inner sum W(i,k-1) C(l,i)",
                      "inner sum W(i,k-1) C(l,i) (m)_{l-i,lambda}, lower bounds clamped at 0");
}

IdentityReport check_thm17(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long m : cfg.m_set) {
    const auto w = Tables{ctx}.W(m, N);
    std::vector<LambdaPoly> d;
    for (long n = 0; n <= N; ++n) d.push_back(row_poly(*w, n, 1));
    for (long n = 0; n + 1 <= N; ++n) {
      LambdaPoly rhs;
      for (long l = 0; l <= n; ++l)
        for (long i = 0; i <= l; ++i) {
          const Rational c = bin(l, i) * bin(n, l) * fact(n - l) * (i == 0 ? Rational(2) : Rational(1));
          rhs += (-lam()).pow(static_cast<unsigned>(n - l)) * ff(LambdaPoly(m), i) * d[sz(l - i)] * c;
        }
      t.check(d[sz(n + 1)], rhs, Params().add("m", m).add("n", n));
    }
  }
  return t.report("thm17");
}

IdentityReport check_thm20(const VerifyConfig& cfg, const Context& ctx) {
  Tally literal, corrected;
  const long N = top(cfg);
  const auto s1 = Tables{ctx}.S1(N);
  for (long m : cfg.m_set) {
    const auto v = Tables{ctx}.V(m, N);
    const Rational inv_m = make_rational(1, m);
    for (long n = 0; n <= N; ++n)
      for (long k = 0; k <= n; ++k) {
        const LambdaPoly lhs = s1->at(n, k).scale_lambda(inv_m) * rpow(Rational(m), n - k);
        LambdaPoly lit, cor;
        for (long i = k; i <= n; ++i) {
          const LambdaPoly term = v->at(n, i) * ff(LambdaPoly(1), i - k);
          lit += term * bin(n, i);
          cor += term * bin(i, k);
        }
        const Params p = Params().add("m", m).add("n", n).add("k", k);
        literal.check(lhs, lit, p);
        corrected.check(lhs, cor, p);
      }
  }
  return two_readings("thm20", literal, corrected, "binomial C(n,i)", "binomial C(i,k)");
}

LambdaPoly thm21_rhs(const Triangle& wm, long m, long n, long k) {
  const Rational scale = make_rational(m, m + 1);
  const LambdaPoly step = lam() * Rational(m);
  LambdaPoly acc;
  for (long j = k; j <= n; ++j)
    acc += rf(1, n - j, step) * wm.at(j, k).scale_lambda(scale) * (bin(n, j) * sign(n - j) * rpow(Rational(m + 1), j));
  return acc / (rpow(Rational(m + 1), k) * rpow(Rational(m), n - k));
}

IdentityReport check_thm21(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long m : cfg.m_set) {
    const auto wm = Tables{ctx}.W(m, N);
    const auto wm1 = Tables{ctx}.W(m + 1, N);
    for (long n = 0; n <= N; ++n)
      for (long k = 0; k <= n; ++k) t.check(wm1->at(n, k), thm21_rhs(*wm, m, n, k), Params().add("m", m).add("n", n).add("k", k));
  }
  return t.report("thm21");
}

// Dowling (or Tanny-Dowling) transfer from m to m + 1; the corrected reading
// evaluates the level-m polynomial at lambda scaled by m/(m+1).
IdentityReport check_cor22(const std::string& id, bool ordered, const VerifyConfig& cfg, const Context& ctx) {
  Tally literal, corrected;
  const long N = top(cfg);
  for (long m : cfg.m_set) {
    const auto wm = Tables{ctx}.W(m, N);
    const auto wm1 = Tables{ctx}.W(m + 1, N);
    const Rational scale = make_rational(m, m + 1);
    const LambdaPoly step = lam() * Rational(m);
    for (long n = 0; n <= N; ++n)
      for (const Rational& x : x_points(n)) {
        const Rational y = x * scale;
        LambdaPoly lit, cor;
        for (long j = 0; j <= n; ++j) {
          const LambdaPoly weight = rf(1, n - j, step) * (bin(n, j) * sign(n - j) * rpow(Rational(m + 1), j));
          const LambdaPoly dm = row_poly(*wm, j, y, ordered);
          lit += weight * dm;
          cor += weight * dm.scale_lambda(scale);
        }
        const Rational norm = rpow(Rational(m), n);
        const Params p = Params().add("m", m).add("n", n).add("x", x);
        const LambdaPoly lhs = row_poly(*wm1, n, x, ordered);
        literal.check(lhs, lit / norm, p);
        corrected.check(lhs, cor / norm, p);
      }
  }
  return two_readings(id, literal, corrected, "level-m polynomial taken at lambda",
                      "level-m polynomial taken at m*lambda/(m+1)");
}

LambdaPoly rescaled_bell(const Triangle& s2, long n, long m, const Rational& x) {
  const Rational inv_m = make_rational(1, m);
  return row_poly(s2, n, x * inv_m).scale_lambda(inv_m);
}

IdentityReport check_thm23(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  const auto s2 = Tables{ctx}.S2(N);
  for (long m : cfg.m_set) {
    const auto w = Tables{ctx}.W(m, N);
    for (long n = 0; n <= N; ++n)
      for (const Rational& x : x_points(n)) {
        LambdaPoly rhs;
        for (long i = 0; i <= n; ++i)
          rhs += ff(LambdaPoly(1), n - i) * rescaled_bell(*s2, i, m, x) * (bin(n, i) * rpow(Rational(m), i));
        t.check(row_poly(*w, n, x), rhs, Params().add("m", m).add("n", n).add("x", x));
      }
  }
  return t.report("thm23");
}

IdentityReport check_thm26(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  const auto s2 = Tables{ctx}.S2(N);
  for (long m : cfg.m_set) {
    const auto w = Tables{ctx}.W(m, N);
    for (long n = 0; n <= N; ++n)
      for (const Rational& x : x_points(n)) {
        LambdaPoly rhs;
        for (long k = 0; k <= n; ++k) rhs += rf(1, n - k) * row_poly(*w, k, x) * (bin(n, k) * sign(n - k));
        t.check(rescaled_bell(*s2, n, m, x) * rpow(Rational(m), n), rhs, Params().add("m", m).add("n", n).add("x", x));
      }
  }
  return t.report("thm26");
}

// ---- binomial transform pair --------------------------------------------

std::vector<LambdaPoly> forward_transform(const std::vector<LambdaPoly>& b) {
  std::vector<LambdaPoly> a;
  const long n_max = static_cast<long>(b.size()) - 1;
  for (long n = 0; n <= n_max; ++n) {
    LambdaPoly acc;
    for (long k = 0; k <= n; ++k) acc += ff(LambdaPoly(1), n - k) * b[sz(k)] * bin(n, k);
    a.push_back(acc);
  }
  return a;
}

std::vector<LambdaPoly> inverse_transform(const std::vector<LambdaPoly>& a) {
  std::vector<LambdaPoly> b;
  const long n_max = static_cast<long>(a.size()) - 1;
  for (long n = 0; n <= n_max; ++n) {
    LambdaPoly acc;
    for (long k = 0; k <= n; ++k) acc += rf(1, n - k) * a[sz(k)] * (bin(n, k) * sign(n - k));
    b.push_back(acc);
  }
  return b;
}

IdentityReport check_lemma24(const VerifyConfig& cfg, const Context&) {
  Tally t;
  const long N = top(cfg);
  for (long n = 0; n <= N; ++n)
    for (long j = 0; j <= n; ++j) {
      LambdaPoly first, second;
      for (long k = j; k <= n; ++k) {
        const Rational c = bin(n, k) * bin(k, j);
        first += ff(LambdaPoly(1), n - k) * rf(1, k - j) * (c * sign(k - j));
        second += rf(1, n - k) * ff(LambdaPoly(1), k - j) * (c * sign(n - k));
      }
      const LambdaPoly delta(n == j ? 1 : 0);
      t.check(first, delta, Params().add("n", n).add("j", j).add("form", "first"));
      t.check(second, delta, Params().add("n", n).add("j", j).add("form", "second"));
    }
  return t.report("lemma24");
}

IdentityReport check_thm25(const VerifyConfig& cfg, const Context&) {
  Tally t;
  const long N = top(cfg);
  RationalSource rs(cfg.seed);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<LambdaPoly> seq;
    for (long n = 0; n <= N; ++n) seq.push_back(rs.next_poly(trial % 3));
    const auto there_and_back = inverse_transform(forward_transform(seq));
    const auto back_and_there = forward_transform(inverse_transform(seq));
    for (long n = 0; n <= N; ++n) {
      t.check(there_and_back[sz(n)], seq[sz(n)], Params().add("trial", trial).add("n", n).add("order", "forward-inverse"));
      t.check(back_and_there[sz(n)], seq[sz(n)], Params().add("trial", trial).add("n", n).add("order", "inverse-forward"));
    }
  }
  return t.report("thm25");
}

// ---- orthogonality -------------------------------------------------------

void check_inverse_pair(Tally& t, const Triangle& a, const Triangle& b, long N, const Params& base) {
  for (long n = 0; n <= N; ++n)
    for (long j = 0; j <= n; ++j) {
      LambdaPoly ab, ba;
      for (long k = j; k <= n; ++k) {
        ab += a.at(n, k) * b.at(k, j);
        ba += b.at(n, k) * a.at(k, j);
      }
      const LambdaPoly delta(n == j ? 1 : 0);
      Params p1 = base, p2 = base;
      t.check(ab, delta, p1.add("n", n).add("j", j).add("order", "first-second"));
      t.check(ba, delta, p2.add("n", n).add("j", j).add("order", "second-first"));
    }
}

IdentityReport check_orthogonality(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long m : cfg.m_set) check_inverse_pair(t, *Tables{ctx}.V(m, N), *Tables{ctx}.W(m, N), N, Params().add("m", m));
  return t.report("orthogonality");
}

IdentityReport check_stirling_orthogonality(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  check_inverse_pair(t, *Tables{ctx}.S1(N), *Tables{ctx}.S2(N), N, Params());
  return t.report("stirling_orthogonality");
}

// ---- Stirling and r-shifted families ---------------------------------------

IdentityReport check_eq17(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  compare_triangles(t, *Tables{ctx}.S2(N), deg_stirling2_gf(sz(N)), N, Params());
  return t.report("eq17");
}

IdentityReport check_eq18(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  compare_triangles(t, *Tables{ctx}.S1(N), deg_stirling1_gf(sz(N)), N, Params());
  return t.report("eq18");
}

IdentityReport check_eq68(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long m : cfg.m_set)
    for (long r : cfg.r_set)
      compare_triangles(t, *Tables{ctx}.get(Family::VdegR, m, r, N), r_whitney1_gf(m, r, sz(N)), N,
                        Params().add("m", m).add("r", r));
  return t.report("eq68");
}

IdentityReport check_eq71(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long m : cfg.m_set)
    for (long r : cfg.r_set)
      compare_triangles(t, *Tables{ctx}.get(Family::WdegR, m, r, N), r_whitney2_gf(m, r, sz(N)), N,
                        Params().add("m", m).add("r", r));
  return t.report("eq71");
}

std::vector<long> with_zero(std::vector<long> rs) {
  if (std::find(rs.begin(), rs.end(), 0L) == rs.end()) rs.insert(rs.begin(), 0L);
  return rs;
}

IdentityReport check_eq73(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long r : with_zero(cfg.r_set))
    compare_triangles(t, *Tables{ctx}.get(Family::S1degR, 1, r, N), deg_r_stirling1_unsigned_gf(r, sz(N)), N,
                      Params().add("r", r));
  return t.report("eq73");
}

IdentityReport check_eq77(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  for (long r : with_zero(cfg.r_set))
    compare_triangles(t, *Tables{ctx}.get(Family::S2degR, 1, r, N), deg_r_stirling2_gf(r, sz(N)), N, Params().add("r", r));
  return t.report("eq77");
}

Rational alternating(long n, long k) { return sign(n - k); }

IdentityReport check_eq74(const VerifyConfig& cfg, const Context&) {
  Tally t;
  const long N = top(cfg);
  for (long r : cfg.r_set)
    compare_triangles(t, r_whitney1_gf(1, r, sz(N)), deg_r_stirling1_unsigned_gf(r, sz(N)), N, Params().add("r", r),
                      alternating);
  return t.report("eq74");
}

IdentityReport check_eq75(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  const Tables tab{ctx};
  for (long r : cfg.r_set)
    compare_triangles(t, *tab.get(Family::VdegR, 1, r, N), *tab.get(Family::S1degR, 1, r, N), N,
                      Params().add("form", "bracket").add("r", r), alternating);
  for (long m : cfg.m_set)
    compare_triangles(t, *tab.get(Family::VdegR, m, 1, N), *tab.V(m, N), N, Params().add("form", "r=1").add("m", m));
  compare_triangles(t, build_r_whitney1(1, 0, sz(N)), *tab.S1(N), N, Params().add("form", "r=0"));
  return t.report("eq75");
}

IdentityReport check_eq77_reductions(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  const Tables tab{ctx};
  for (long r : cfg.r_set)
    compare_triangles(t, *tab.get(Family::WdegR, 1, r, N), *tab.get(Family::S2degR, 1, r, N), N,
                      Params().add("form", "brace").add("r", r));
  for (long m : cfg.m_set)
    compare_triangles(t, *tab.get(Family::WdegR, m, 1, N), *tab.W(m, N), N, Params().add("form", "r=1").add("m", m));
  compare_triangles(t, build_r_whitney2(1, 0, sz(N)), *tab.S2(N), N, Params().add("form", "r=0"));
  return t.report("eq77_reductions");
}

// ---- Bernoulli and Euler ---------------------------------------------------

IdentityReport check_thm27_bernoulli(const VerifyConfig& cfg, const Context&) {
  Tally t;
  const long N = top(cfg);
  for (long k = 0; k <= 4; ++k) {
    const auto gf = deg_bernoulli_gf(sz(N), k);
    for (long n = 0; n <= N; ++n) t.check(deg_bernoulli(n, k), gf[sz(n)], Params().add("k", k).add("n", n));
  }
  return t.report("thm27_bernoulli");
}

IdentityReport check_thm27_euler(const VerifyConfig& cfg, const Context&) {
  Tally t;
  const long N = top(cfg);
  const std::vector<Rational> alphas{Rational(0), Rational(1), Rational(2), Rational(3), make_rational(1, 2),
                                     make_rational(-3, 2)};
  for (const auto& alpha : alphas) {
    const auto gf = deg_euler_gf(sz(N), alpha);
    for (long n = 0; n <= N; ++n) t.check(deg_euler(n, alpha), gf[sz(n)], Params().add("alpha", alpha).add("n", n));
  }
  for (long alpha = 0; alpha <= 3; ++alpha) {
    const auto gf = deg_euler_gf_power(sz(N), alpha);
    for (long n = 0; n <= N; ++n)
      t.check(deg_euler(n, Rational(alpha)), gf[sz(n)], Params().add("alpha", alpha).add("n", n).add("route", "power"));
  }
  return t.report("thm27_euler");
}

IdentityReport check_eq81_binomial(const VerifyConfig& cfg, const Context&) {
  Tally literal, corrected;
  const long N = top(cfg);
  for (long alpha = 1; alpha <= 3; ++alpha) {
    const auto gf = deg_euler_gf_power(sz(N), alpha);
    for (long n = 0; n <= N; ++n) {
      const Params p = Params().add("alpha", alpha).add("n", n);
      literal.check(deg_euler(n, Rational(alpha), +1), gf[sz(n)], p);
      corrected.check(deg_euler(n, Rational(alpha), -1), gf[sz(n)], p);
    }
  }
  return two_readings("eq81_binomial", literal, corrected, "C(alpha+l+1, l)", "C(alpha+l-1, l)");
}

// ---- lambda -> 0 -----------------------------------------------------------
// Classical tables over plain rationals, built without the LambdaPoly
// machinery: expansion of products and forward substitution on point values.

using RTable = std::vector<std::vector<Rational>>;
using RPoly = std::vector<Rational>;

RPoly rpoly_mul_linear(const RPoly& p, const Rational& root) {  // p(u) (u - root)
  RPoly out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] -= p[i] * root;
  }
  return out;
}

// Coefficients of u^k in prod_{j<n} (u - roots(j)).
RTable expand_products(long N, const std::function<Rational(long)>& root) {
  RTable t;
  for (long n = 0; n <= N; ++n) {
    RPoly p{Rational(1)};
    for (long j = 0; j < n; ++j) p = rpoly_mul_linear(p, root(j));
    t.push_back(p);
  }
  return t;
}

// c_k with f(x) = sum_k c_k w_k (x)_k, from the values f(0..n): (x)_k vanishes
// at x < k, so the system is lower triangular.
RTable falling_coefficients(long N, const std::function<Rational(long n, long x)>& f,
                            const std::function<Rational(long k)>& weight) {
  RTable t;
  for (long n = 0; n <= N; ++n) {
    RPoly c(sz(n + 1));
    for (long x = 0; x <= n; ++x) {
      Rational acc = f(n, x);
      for (long k = 0; k < x; ++k) {
        Rational fall(1);
        for (long j = 0; j < k; ++j) fall *= Rational(x - j);
        acc -= c[sz(k)] * weight(k) * fall;
      }
      Rational fall(1);
      for (long j = 0; j < x; ++j) fall *= Rational(x - j);
      c[sz(x)] = acc / (weight(x) * fall);
    }
    t.push_back(c);
  }
  return t;
}

void compare_limit(Tally& t, const Triangle& deg, const RTable& classical, long N, const Params& base) {
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n; ++k) {
      Params p = base;
      t.check(LambdaPoly(deg.at(n, k).eval(0)), LambdaPoly(classical[sz(n)][sz(k)]), p.add("n", n).add("k", k));
    }
}

IdentityReport check_lambda0_limits(const VerifyConfig& cfg, const Context& ctx) {
  Tally t;
  const long N = top(cfg);
  const Tables tab{ctx};
  auto ipow = [](long b, long e) { return rpow(Rational(b), e); };
  // (x)_n = sum_k S1(n,k) x^k
  const RTable s1 = expand_products(N, [](long j) { return Rational(j); });
  // x^n = sum_k S2(n,k) (x)_k
  const RTable s2 = falling_coefficients(N, [&](long n, long x) { return ipow(x, n); }, [](long) { return Rational(1); });
  compare_limit(t, *tab.S1(N), s1, N, Params().add("family", "S1deg"));
  compare_limit(t, *tab.S2(N), s2, N, Params().add("family", "S2deg"));
  compare_limit(t, *tab.get(Family::S1, 1, 0, N), s1, N, Params().add("family", "S1"));
  compare_limit(t, *tab.get(Family::S2, 1, 0, N), s2, N, Params().add("family", "S2"));
  for (long m : cfg.m_set) {
    // (mx+1)^n = sum_k W_m(n,k) m^k (x)_k
    const RTable w = falling_coefficients(
        N, [&](long n, long x) { return ipow(m * x + 1, n); }, [&](long k) { return ipow(m, k); });
    // m^n (x)_n = sum_k V_m(n,k) u^k with u = mx + 1: prod_j (u - 1 - jm)
    const RTable v = expand_products(N, [m](long j) { return Rational(1 + j * m); });
    compare_limit(t, *tab.W(m, N), w, N, Params().add("family", "W").add("m", m));
    compare_limit(t, *tab.V(m, N), v, N, Params().add("family", "V").add("m", m));
    for (long r : cfg.r_set) {
      const RTable wr = falling_coefficients(
          N, [&](long n, long x) { return ipow(m * x + r, n); }, [&](long k) { return ipow(m, k); });
      const RTable vr = expand_products(N, [m, r](long j) { return Rational(r + j * m); });
      compare_limit(t, *tab.get(Family::WdegR, m, r, N), wr, N, Params().add("family", "Wr").add("m", m).add("r", r));
      compare_limit(t, *tab.get(Family::VdegR, m, r, N), vr, N, Params().add("family", "Vr").add("m", m).add("r", r));
    }
  }
  for (long r : with_zero(cfg.r_set)) {
    // <x+r>_n = sum_k c_k x^k at lambda = 0: expand prod_j (x + r + j).
    const RTable bracket = expand_products(N, [r](long j) { return Rational(-(r + j)); });
    // (x+r)^n = sum_k c_k (x)_k
    const RTable brace = falling_coefficients(
        N, [&](long n, long x) { return ipow(x + r, n); }, [](long) { return Rational(1); });
    compare_limit(t, *tab.get(Family::S1degR, 1, r, N), bracket, N, Params().add("family", "S1degR").add("r", r));
    compare_limit(t, *tab.get(Family::S2degR, 1, r, N), brace, N, Params().add("family", "S2degR").add("r", r));
  }
  return t.report("lambda0_limits");
}

// Ordinary power series over rationals, truncated at degree N.
RPoly ops_mul(const RPoly& a, const RPoly& b) {
  RPoly c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

RPoly ops_inverse(const RPoly& a) {
  RPoly b(a.size());
  b[0] = Rational(1) / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    Rational acc;
    for (std::size_t i = 1; i <= n; ++i) acc += a[i] * b[n - i];
    b[n] = -acc / a[0];
  }
  return b;
}

IdentityReport check_lambda0_specials(const VerifyConfig& cfg, const Context&) {
  Tally t;
  const long N = top(cfg);
  RPoly exp_shift(sz(N + 1)), exp_plus_one(sz(N + 1));  // (e^t - 1)/t and e^t + 1
  for (long i = 0; i <= N; ++i) {
    exp_shift[sz(i)] = Rational(1) / fact(i + 1);
    exp_plus_one[sz(i)] = Rational(1) / fact(i);
  }
  exp_plus_one[0] += 1;
  const RPoly bern = ops_inverse(exp_shift);
  RPoly euler = ops_inverse(exp_plus_one);
  for (auto& c : euler) c *= 2;
  for (long k = 0; k <= 4; ++k) {
    RPoly power(sz(N + 1));
    power[0] = 1;
    for (long i = 0; i < k; ++i) power = ops_mul(power, bern);
    for (long n = 0; n <= N; ++n)
      t.check(LambdaPoly(deg_bernoulli(n, k).eval(0)), LambdaPoly(power[sz(n)] * fact(n)),
              Params().add("kind", "bernoulli").add("k", k).add("n", n));
  }
  for (long alpha = 0; alpha <= 3; ++alpha) {
    RPoly power(sz(N + 1));
    power[0] = 1;
    for (long i = 0; i < alpha; ++i) power = ops_mul(power, euler);
    for (long n = 0; n <= N; ++n)
      t.check(LambdaPoly(deg_euler(n, Rational(alpha)).eval(0)), LambdaPoly(power[sz(n)] * fact(n)),
              Params().add("kind", "euler").add("alpha", alpha).add("n", n));
  }
  return t.report("lambda0_specials");
}

std::vector<IdentityCheck> make_catalog() {
  using F = std::function<IdentityReport(const VerifyConfig&, const Context&)>;
  auto w2 = [](std::string id, W2Path p) -> F {
    return [id, p](const VerifyConfig& c, const Context& x) { return check_w2_path(id, p, c, x); };
  };
  auto w1 = [](std::string id, W1Path p) -> F {
    return [id, p](const VerifyConfig& c, const Context& x) { return check_w1_path(id, p, c, x); };
  };
  auto transfer = [](std::string id, bool ordered) -> F {
    return [id, ordered](const VerifyConfig& c, const Context& x) { return check_cor22(id, ordered, c, x); };
  };
  return {
      {"thm1_gf", "W triangle equals coefficients of e_l(t) ((e_l^m(t)-1)/m)^k / k!", check_thm1_gf},
      {"cor2", "W_1(n,k) = S2l(n+1,k+1) + l n S2l(n,k+1)", check_cor2},
      {"thm3_gf", "Dowling polynomials equal coefficients of e_l(t) exp(x (e_l^m(t)-1)/m)", check_thm3_gf},
      {"cor4", "D_1(n) = Bel_{n+1} + n l Bel_n", check_cor4},
      {"thm5_gf", "V triangle equals coefficients of (log_l e_m(t))^k e_m^{-1}(t) / k!", check_thm5_gf},
      {"thm6", "triangular recurrence for W", check_thm6},
      {"thm7", "triangular recurrence for V", check_thm7},
      {"thm8", "V as a triple sum over S1l, S2, S1", w1("thm8", W1Path::stirling_triple_sum)},
      {"thm9", "Tanny-Dowling polynomials equal coefficients of e_l(t) / (1 - x (e_l^m(t)-1)/m)", check_thm9},
      {"thm10", "truncated Dobinski series within tolerance of D_m(n,x)", check_thm10},
      {"cor11", "x D_1(n,x) = Bel_{n+1}(x) + n l Bel_n(x)", check_cor11},
      {"thm12", "W as an alternating binomial sum of (lm+1)_{n,l}", w2("thm12", W2Path::binomial_sum)},
      {"thm12_zero", "the alternating binomial sum vanishes for n < k", check_thm12_zero},
      {"thm13", "W through S2 at l/m", w2("thm13", W2Path::rescaled_stirling)},
      {"thm14", "W as a k-th forward difference at 0", w2("thm14", W2Path::forward_difference)},
      {"lemma15", "sum_j (-1)^j C(n,j) (z-j)_{n,l} = n!", check_lemma15},
      {"thm16", "recursion for W(n+1,k) in terms of W(.,k) and W(.,k-1)", check_thm16},
      {"thm17", "recursion for the Dowling numbers D_m(n+1)", check_thm17},
      {"thm18", "V as a triple sum weighted by V(n-i,0)", w1("thm18", W1Path::column_zero_sum)},
      {"thm19", "V through S1 at l/m", w1("thm19", W1Path::rescaled_stirling)},
      {"thm20", "m^{n-k} S1_{l/m}(n,k) as a sum over V(n,i)", check_thm20},
      {"thm21", "W_{m+1} from W_m at m l/(m+1)", check_thm21},
      {"cor22", "D_{m+1}(n,x) from D_m(j, m x/(m+1))", transfer("cor22", false)},
      {"cor22_remark", "F_{m+1}(n,x) from F_m(j, m x/(m+1))", transfer("cor22_remark", true)},
      {"thm23", "D_m(n,x) through Bel_{i,l/m}(x/m)", check_thm23},
      {"lemma24", "the two binomial kernels are inverse (Kronecker delta)", check_lemma24},
      {"thm25", "binomial transform pair round trip on random sequences", check_thm25},
      {"thm26", "m^n Bel_{n,l/m}(x/m) as an inverse transform of D_m(k,x)", check_thm26},
      {"eq29_30", "Bel_{n+1}(x) and D_1(n) as sums of shifted S2l", check_eq29_30},
      {"orthogonality", "V and W triangles are mutually inverse", check_orthogonality},
      {"stirling_orthogonality", "S1l and S2l triangles are mutually inverse", check_stirling_orthogonality},
      {"eq17", "S2l equals coefficients of (e_l(t)-1)^k / k!", check_eq17},
      {"eq18", "S1l equals coefficients of (log_l(1+t))^k / k!", check_eq18},
      {"eq68", "r-Whitney V from its defining relation equals its generating function", check_eq68},
      {"eq71", "r-Whitney W from its defining relation equals its generating function", check_eq71},
      {"eq73", "r-Stirling bracket from its defining relation equals its generating function", check_eq73},
      {"eq74", "generating function of V^(r)_1 is the signed bracket generating function", check_eq74},
      {"eq75", "V^(r)_1 = (-1)^{n-k} bracket, V^(1)_m = V_m, V^(0)_1 = S1l", check_eq75},
      {"eq77", "r-Stirling brace from its defining relation equals its generating function", check_eq77},
      {"eq77_reductions", "W^(r)_1 = brace, W^(1)_m = W_m, W^(0)_1 = S2l", check_eq77_reductions},
      {"thm27_bernoulli", "degenerate Bernoulli sum equals (t/(e_l(t)-1))^k coefficients", check_thm27_bernoulli},
      {"thm27_euler", "degenerate Euler sum equals (2/(e_l(t)+1))^alpha coefficients", check_thm27_euler},
      {"eq81_binomial", "binomial index in the Euler expansion", check_eq81_binomial},
      {"lambda0_limits", "every triangle at l = 0 equals its classical counterpart", check_lambda0_limits},
      {"lambda0_specials", "Bernoulli and Euler numbers at l = 0 equal the classical ones", check_lambda0_specials},
  };
}

}  // namespace

const std::vector<IdentityCheck>& identity_catalog() {
  static const std::vector<IdentityCheck> catalog = make_catalog();
  return catalog;
}

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const auto& c : identity_catalog()) ids.push_back(c.id);
  return ids;
}

namespace {

void validate(const VerifyConfig& cfg) {
  if (cfg.n_max < 0) throw DomainError("n_max must be nonnegative");
  if (cfg.m_set.empty()) throw DomainError("m_set must not be empty");
  for (long m : cfg.m_set) validate_m(m);
  for (long r : cfg.r_set)
    if (r < 1) throw DomainError("r_set entries must be >= 1");
}

}  // namespace

IdentityReport run_identity(std::string_view id, const VerifyConfig& cfg, const Context& ctx) {
  validate(cfg);
  for (const auto& c : identity_catalog())
    if (c.id == id) return c.run(cfg, ctx);
  throw DomainError("unknown identity id '" + std::string(id) + "'");
}

IdentityReport run_identity(std::string_view id, long n_max, const std::vector<long>& m_set,
                            const std::vector<long>& r_set, std::uint64_t seed) {
  return run_identity(id, VerifyConfig{n_max, m_set, r_set, seed});
}

unsigned thread_cap_from_env() {
  if (const char* env = std::getenv("DOWLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<IdentityReport> verify_all(const VerifyConfig& cfg, const Context& ctx, unsigned threads) {
  validate(cfg);
  const auto& catalog = identity_catalog();
  std::vector<IdentityReport> out(catalog.size());
  std::vector<std::exception_ptr> errors(catalog.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) {
      try {
        out[i] = catalog[i].run(cfg, ctx);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::min<unsigned>(threads ? threads : thread_cap_from_env(), static_cast<unsigned>(catalog.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<IdentityReport> verify_all(long n_max, const std::vector<long>& m_set, const std::vector<long>& r_set,
                                       std::uint64_t seed) {
  return verify_all(VerifyConfig{n_max, m_set, r_set, seed});
}

bool all_passed(const std::vector<IdentityReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == Status::fail; });
}

nlohmann::json report_json(const IdentityReport& r) {
  nlohmann::json j{{"id", r.id}, {"params_tested", r.params_tested}, {"status", std::string(status_name(r.status))}};
  if (r.counterexample)
    j["counterexample"] = {{"params", r.counterexample->params}, {"lhs", r.counterexample->lhs}, {"rhs", r.counterexample->rhs}};
  if (!r.resolution.empty()) j["resolution"] = r.resolution;
  return j;
}

nlohmann::json reports_json(const std::vector<IdentityReport>& reports, const VerifyConfig& cfg) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return {{"version", 1}, {"seed", cfg.seed}, {"n_max", cfg.n_max}, {"m_set", cfg.m_set}, {"r_set", cfg.r_set}, {"reports", arr}};
}

}  // namespace dowlab
