#include "dowlab/whitney.hpp"

#include <cmath>
#include <string>

#include "dowlab/error.hpp"
#include "dowlab/factorial_bases.hpp"

namespace dowlab {

void validate_m(long m) {
  if (m < 1) throw DomainError("m must be a positive integer (group order), got " + std::to_string(m));
}

void WhitneyParams::validate() const {
  validate_m(m);
  if (r < 1) throw DomainError("r must be a positive integer, got " + std::to_string(r));
}

namespace {

Rational rat(long v) { return Rational(v); }

Rational power(long base, long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return Rational(p);
}

void check_index(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    throw IndexError("index (" + std::to_string(n) + ", " + std::to_string(k) + ") outside 0 <= k <= n");
}

Triangle empty_triangle(Family family, long m, long r, std::size_t n_max) {
  Triangle t{family, m, r, n_max, {}};
  t.rows.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) t.rows[n].resize(n + 1);
  return t;
}

// Memoized generating-function triangles.
std::shared_ptr<const Triangle> gf_w(long m, long r, std::size_t n_max) {
  return memoized_triangle("gf:W", m, r, n_max, [=](std::size_t size) { return r_whitney2_gf(m, r, size); });
}

std::shared_ptr<const Triangle> gf_v(long m, long r, std::size_t n_max) {
  return memoized_triangle("gf:V", m, r, n_max, [=](std::size_t size) { return r_whitney1_gf(m, r, size); });
}

std::function<TruncatedSeries(std::size_t)> power_columns(TruncatedSeries base, TruncatedSeries weight) {
  auto powers = std::make_shared<std::vector<TruncatedSeries>>();
  return [=](std::size_t k) {
    if (powers->empty()) powers->push_back(TruncatedSeries::one(base.order()));
    while (powers->size() <= k) powers->push_back(powers->back() * base);
    return ((*powers)[k] * weight) * LambdaPoly(Rational(1) / Rational(factorial(k)));
  };
}

}  // namespace

Triangle build_whitney2_recurrence(long m, std::size_t n_max) {
  validate_m(m);
  Triangle t = empty_triangle(Family::Wdeg, m, 1, n_max);
  const LambdaPoly lambda = LambdaPoly::lambda();
  t.rows[0][0] = 1;
  for (long n = 1; n <= static_cast<long>(n_max); ++n) {
    for (long k = 0; k <= n; ++k) {
      const LambdaPoly prev = t.value_or_zero(n - 1, k);
      LambdaPoly v = t.value_or_zero(n - 1, k - 1);
      v += prev * rat(m * k + 1);
      v -= prev * lambda * rat(n - 1);
      t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(v);
    }
  }
  return t;
}

Triangle build_whitney1_recurrence(long m, std::size_t n_max) {
  validate_m(m);
  Triangle t = empty_triangle(Family::Vdeg, m, 1, n_max);
  const LambdaPoly lambda = LambdaPoly::lambda();
  t.rows[0][0] = 1;
  for (long n = 1; n <= static_cast<long>(n_max); ++n) {
    for (long k = 0; k <= n; ++k) {
      const LambdaPoly prev = t.value_or_zero(n - 1, k);
      LambdaPoly v = t.value_or_zero(n - 1, k - 1);
      v += prev * rat(m - n * m - 1);
      v += prev * lambda * rat(k);
      t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(v);
    }
  }
  return t;
}

Triangle build_r_whitney2(long m, long r, std::size_t n_max) {
  validate_m(m);
  Triangle t = empty_triangle(Family::WdegR, m, r, n_max);
  const auto falling = NodeSequence::arithmetic(0, 1, n_max);
  const XPoly affine = XPoly::linear(m, r);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto c = newton_convert(falling_xpoly(affine, n, LambdaPoly::lambda()), falling);
    for (std::size_t k = 0; k < c.size(); ++k) t.rows[n][k] = c[k] / power(m, static_cast<long>(k));
  }
  return t;
}

Triangle build_r_whitney1(long m, long r, std::size_t n_max) {
  validate_m(m);
  // With u = mx + r: m^n (x)_n = prod_{j<n} (u - r - jm), and the target
  // basis (mx+r)_{k,lambda} is (u)_{k,lambda}, i.e. nodes j*lambda.
  Triangle t = empty_triangle(Family::VdegR, m, r, n_max);
  const auto source_nodes = NodeSequence::arithmetic(r, m, n_max);
  const auto lambda_nodes = NodeSequence::arithmetic(0, LambdaPoly::lambda(), n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto c = newton_convert(basis_poly(n, source_nodes), lambda_nodes);
    for (std::size_t k = 0; k < c.size(); ++k) t.rows[n][k] = c[k];
  }
  return t;
}

Triangle r_whitney2_gf(long m, long r, std::size_t n_max) {
  validate_m(m);
  const auto base = (deg_exp(m, 1, n_max) - TruncatedSeries::one(n_max)) * LambdaPoly(make_rational(1, m));
  return triangle_from_columns(Family::WdegR, m, r, n_max, power_columns(base, deg_exp(r, 1, n_max)));
}

Triangle r_whitney1_gf(long m, long r, std::size_t n_max) {
  validate_m(m);
  const auto e_m = binomial_series(make_rational(1, m), rat(m), n_max);
  const auto base = series_compose(deg_log(n_max), e_m - TruncatedSeries::one(n_max));
  const auto weight = binomial_series(make_rational(-r, m), rat(m), n_max);
  return triangle_from_columns(Family::VdegR, m, r, n_max, power_columns(base, weight));
}

LambdaPoly whitney2(long m, long n, long k) {
  check_index(n, k);
  return triangle(Family::Wdeg, m, 1, static_cast<std::size_t>(n))->at(n, k);
}

LambdaPoly whitney1(long m, long n, long k) {
  check_index(n, k);
  return triangle(Family::Vdeg, m, 1, static_cast<std::size_t>(n))->at(n, k);
}

LambdaPoly r_whitney2(long m, long r, long n, long k) {
  check_index(n, k);
  return triangle(Family::WdegR, m, r, static_cast<std::size_t>(n))->at(n, k);
}

LambdaPoly r_whitney1(long m, long r, long n, long k) {
  check_index(n, k);
  return triangle(Family::VdegR, m, r, static_cast<std::size_t>(n))->at(n, k);
}

LambdaPoly whitney2_alt(long m, long n, long k, W2Path path) {
  validate_m(m);
  if (n < 0 || k < 0) throw IndexError("negative index");
  const LambdaPoly lambda = LambdaPoly::lambda();
  const Rational norm = Rational(1) / (Rational(factorial(static_cast<std::size_t>(k))) * power(m, k));
  switch (path) {
    case W2Path::binomial_sum: {
      LambdaPoly acc;
      for (long l = 0; l <= k; ++l) {
        Rational c(binomial(static_cast<std::size_t>(k), static_cast<std::size_t>(l)));
        if ((k - l) % 2) c = -c;
        acc += lambda_falling(rat(l * m + 1), static_cast<std::size_t>(n), lambda) * c;
      }
      return acc * norm;
    }
    case W2Path::forward_difference: {
      // Iterated forward differences of f(x) = (mx+1)_{n,lambda} on x = 0..k.
      std::vector<LambdaPoly> diff;
      for (long x = 0; x <= k; ++x) diff.push_back(lambda_falling(rat(m * x + 1), static_cast<std::size_t>(n), lambda));
      for (long order = 0; order < k; ++order)
        for (std::size_t i = 0; i + 1 < diff.size() - static_cast<std::size_t>(order); ++i) diff[i] = diff[i + 1] - diff[i];
      return diff.front() * norm;
    }
    case W2Path::rescaled_stirling: {
      check_index(n, k);
      const Rational inv_m = make_rational(1, m);
      LambdaPoly acc;
      for (long i = k; i <= n; ++i) {
        const Rational c = Rational(binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(i))) * power(m, i - k);
        acc += lambda_falling(1, static_cast<std::size_t>(n - i), lambda) * deg_stirling2(i, k).scale_lambda(inv_m) * c;
      }
      return acc;
    }
    case W2Path::generating_function:
      check_index(n, k);
      return gf_w(m, 1, static_cast<std::size_t>(n))->at(n, k);
  }
  throw DomainError("unknown W2 path");
}

Integer whitney1_column0(long m, long n) {
  validate_m(m);
  Integer acc = 1;
  for (long j = 1; j < n; ++j) acc *= j * m + 1;
  return n % 2 ? Integer(-acc) : acc;
}

LambdaPoly whitney1_alt(long m, long n, long k, W1Path path) {
  validate_m(m);
  check_index(n, k);
  const LambdaPoly lambda = LambdaPoly::lambda();
  auto sign = [](long e) { return e % 2 ? Rational(-1) : Rational(1); };
  auto bin = [](long a, long b) { return Rational(binomial(static_cast<std::size_t>(a), static_cast<std::size_t>(b))); };
  auto s1 = [](long a, long b) { return Rational(stirling1(a, b)); };
  auto s2 = [](long a, long b) { return Rational(stirling2(a, b)); };
  switch (path) {
    case W1Path::stirling_triple_sum: {
      LambdaPoly acc;
      for (long j = k; j <= n; ++j) {
        const Rational outer = s1(n, j) * power(m, n - j);
        if (outer == 0) continue;
        for (long l = k; l <= j; ++l) {
          LambdaPoly inner;
          for (long i = l; i <= j; ++i) inner += deg_stirling1(i, l) * s2(j, i);
          acc += inner * lambda_rising(1, static_cast<std::size_t>(l - k), lambda) * (bin(l, k) * sign(l - k) * outer);
        }
      }
      return acc;
    }
    case W1Path::column_zero_sum: {
      LambdaPoly acc;
      for (long i = k; i <= n; ++i) {
        const Rational weight = bin(n, i) * Rational(whitney1_column0(m, n - i));
        for (long j = k; j <= i; ++j) {
          const Rational c = weight * power(m, i - j) * s1(i, j);
          if (c == 0) continue;
          for (long l = k; l <= j; ++l) acc += deg_stirling1(l, k) * (c * s2(j, l));
        }
      }
      return acc;
    }
    case W1Path::rescaled_stirling: {
      const Rational inv_m = make_rational(1, m);
      LambdaPoly acc;
      for (long j = k; j <= n; ++j) {
        const Rational c = sign(j - k) * bin(j, k) * power(m, n - j);
        acc += deg_stirling1(n, j).scale_lambda(inv_m) * lambda_rising(1, static_cast<std::size_t>(j - k), lambda) * c;
      }
      return acc;
    }
    case W1Path::generating_function:
      return gf_v(m, 1, static_cast<std::size_t>(n))->at(n, k);
  }
  throw DomainError("unknown W1 path");
}

LambdaPoly dowling_poly(long m, long n, const Rational& x) {
  if (n < 0) throw IndexError("dowling_poly: n must be nonnegative");
  const auto t = triangle(Family::Wdeg, m, 1, static_cast<std::size_t>(n));
  LambdaPoly acc;
  Rational xk(1);
  for (long k = 0; k <= n; ++k) {
    acc += t->at(n, k) * xk;
    xk *= x;
  }
  return acc;
}

LambdaPoly tanny_dowling_poly(long m, long n, const Rational& x) {
  if (n < 0) throw IndexError("tanny_dowling_poly: n must be nonnegative");
  const auto t = triangle(Family::Wdeg, m, 1, static_cast<std::size_t>(n));
  LambdaPoly acc;
  Rational xk(1);
  for (long k = 0; k <= n; ++k) {
    acc += t->at(n, k) * (xk * Rational(factorial(static_cast<std::size_t>(k))));
    xk *= x;
  }
  return acc;
}

TruncatedSeries dowling_gf(long m, const Rational& x, std::size_t order) {
  validate_m(m);
  const auto inner = (deg_exp(m, 1, order) - TruncatedSeries::one(order)) * LambdaPoly(x / rat(m));
  return deg_exp(1, 1, order) * series_exp(inner);
}

TruncatedSeries tanny_dowling_gf(long m, const Rational& x, std::size_t order) {
  validate_m(m);
  const auto inner = (deg_exp(m, 1, order) - TruncatedSeries::one(order)) * LambdaPoly(x / rat(m));
  return series_div(deg_exp(1, 1, order), TruncatedSeries::one(order) - inner, 0);
}

namespace {

long double to_long_double(const Rational& q) {
  mpf_class f(q, 256);
  mp_exp_t exp = 0;
  std::string digits = f.get_str(exp, 10, 40);
  if (digits.empty()) return 0.0L;
  bool negative = digits.front() == '-';
  if (negative) digits.erase(0, 1);
  const std::string text = (negative ? "-0." : "0.") + digits + "e" + std::to_string(exp);
  return std::strtold(text.c_str(), nullptr);
}

}  // namespace

DobinskiResult dobinski_eval(const DobinskiRequest& req) {
  validate_m(req.m);
  if (req.n < 0) throw DomainError("dobinski: n must be nonnegative");
  if (req.terms < 1) throw DomainError("dobinski: terms must be >= 1");
  if (!(req.tol > 0)) throw DomainError("dobinski: tol must be positive");

  const long double x = to_long_double(req.x);
  const long double lambda = to_long_double(req.lambda);
  const long double m = static_cast<long double>(req.m);

  // Kahan-compensated sum of w_k (mk+1)_{n,lambda}, w_k = (x/m)^k / k!.
  long double sum = 0.0L, carry = 0.0L, weight = 1.0L;
  for (long k = 0; k < req.terms; ++k) {
    if (k > 0) weight *= x / (m * static_cast<long double>(k));
    long double falling = 1.0L;
    const long double base = m * static_cast<long double>(k) + 1.0L;
    for (long j = 0; j < req.n; ++j) falling *= base - static_cast<long double>(j) * lambda;
    const long double y = weight * falling - carry;
    const long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }

  DobinskiResult out;
  out.truncated = std::exp(-x / m) * sum;
  out.exact = to_long_double(dowling_poly(req.m, req.n, req.x).eval(req.lambda));
  out.abs_diff = std::fabs(out.truncated - out.exact);
  out.pass = out.abs_diff < static_cast<long double>(req.tol);
  return out;
}

}  // namespace dowlab
