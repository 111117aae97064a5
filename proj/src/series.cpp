#include "dowlab/series.hpp"

#include <algorithm>

#include "dowlab/error.hpp"
#include "dowlab/factorial_bases.hpp"

namespace dowlab {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<LambdaPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) { return constant(1, order); }

TruncatedSeries TruncatedSeries::constant(const LambdaPoly& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::t(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

const LambdaPoly& TruncatedSeries::coeff(std::size_t n) const {
  if (n > order())
    throw IndexError("series coefficient " + std::to_string(n) + " past order " + std::to_string(order()));
  return coeffs_[n];
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const {
  std::vector<LambdaPoly> cs(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
  return TruncatedSeries(std::move(cs));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const LambdaPoly& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n_max = std::min(a.order(), b.order());
  std::vector<LambdaPoly> out(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    LambdaPoly acc;
    for (std::size_t k = 0; k <= n; ++k) {
      if (a.coeffs_[k].is_zero() || b.coeffs_[n - k].is_zero()) continue;
      acc += (a.coeffs_[k] * b.coeffs_[n - k]) * Rational(binomial(n, k));
    }
    out[n] = std::move(acc);
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
  TruncatedSeries result = one(order());
  TruncatedSeries base(*this);
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) { return f * g; }

namespace {

// f(t) / t^z in the EGF convention: b_n = n! a_{n+z} / (n+z)!.
std::vector<LambdaPoly> shift_down(const TruncatedSeries& f, std::size_t z, const char* which) {
  if (f.order() < z) throw DomainError(std::string("series_div: ") + which + " has order below known_zero_order");
  for (std::size_t i = 0; i < z; ++i)
    if (!f.coeff(i).is_zero())
      throw DomainError(std::string("series_div: ") + which + " has a nonzero coefficient below known_zero_order");
  std::vector<LambdaPoly> out(f.order() - z + 1);
  for (std::size_t n = 0; n < out.size(); ++n) {
    Integer falling = 1;  // (n+z)! / n!
    for (std::size_t j = n + 1; j <= n + z; ++j) falling *= static_cast<unsigned long>(j);
    out[n] = f.coeff(n + z) / Rational(falling);
  }
  return out;
}

}  // namespace

TruncatedSeries series_div(const TruncatedSeries& f, const TruncatedSeries& g, std::size_t known_zero_order) {
  const auto num = shift_down(f, known_zero_order, "numerator");
  const auto den = shift_down(g, known_zero_order, "denominator");
  if (den[0].is_zero() || !den[0].is_constant())
    throw DomainError("series_div: shifted denominator constant term is not a nonzero rational");
  const Rational unit = den[0].constant_term();
  const std::size_t n_max = std::min(num.size(), den.size()) - 1;
  std::vector<LambdaPoly> q(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    LambdaPoly acc = num[n];
    for (std::size_t k = 1; k <= n; ++k) {
      if (den[k].is_zero()) continue;
      acc -= (den[k] * q[n - k]) * Rational(binomial(n, k));
    }
    q[n] = acc / unit;
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (!g.coeff(0).is_zero()) throw DomainError("series_compose: inner series has a nonzero constant term");
  const std::size_t order = std::min(f.order(), g.order());
  const TruncatedSeries inner = g.truncate(order);
  // Horner in ordinary coefficients a_n / n!.
  TruncatedSeries acc = TruncatedSeries::constant(f.coeff(order) / Rational(factorial(order)), order);
  for (std::size_t n = order; n-- > 0;) {
    acc = acc * inner;
    acc += TruncatedSeries::constant(f.coeff(n) / Rational(factorial(n)), order);
  }
  return acc;
}

TruncatedSeries series_exp(const TruncatedSeries& f) {
  if (!f.coeff(0).is_zero()) throw DomainError("series_exp: argument has a nonzero constant term");
  const std::size_t order = f.order();
  std::vector<LambdaPoly> h(order + 1);
  h[0] = 1;
  // h' = f' h; in EGF terms h_{n+1} = sum_k C(n,k) f_{k+1} h_{n-k}.
  for (std::size_t n = 0; n < order; ++n) {
    LambdaPoly acc;
    for (std::size_t k = 0; k <= n; ++k) {
      const LambdaPoly& fk = f.coeff(k + 1);
      if (fk.is_zero()) continue;
      acc += (fk * h[n - k]) * Rational(binomial(n, k));
    }
    h[n + 1] = std::move(acc);
  }
  return TruncatedSeries(std::move(h));
}

TruncatedSeries deg_exp(const LambdaPoly& x, long m_scale, std::size_t order) {
  std::vector<LambdaPoly> a(order + 1);
  const LambdaPoly lambda = LambdaPoly::lambda();
  LambdaPoly falling(1);
  Rational scale(1);
  for (std::size_t n = 0; n <= order; ++n) {
    a[n] = falling * scale;
    falling *= x - lambda * Rational(static_cast<long>(n));
    scale *= m_scale;
  }
  return TruncatedSeries(std::move(a));
}

TruncatedSeries deg_log(std::size_t order) {
  std::vector<LambdaPoly> a(order + 1);
  const LambdaPoly lambda = LambdaPoly::lambda();
  LambdaPoly prod(1);
  for (std::size_t n = 1; n <= order; ++n) {
    a[n] = prod;
    prod *= lambda - LambdaPoly(static_cast<long>(n));
  }
  return TruncatedSeries(std::move(a));
}

TruncatedSeries binomial_series(const Rational& alpha, const Rational& c, std::size_t order) {
  std::vector<LambdaPoly> a(order + 1);
  Rational term(1);  // (alpha)_n c^n
  for (std::size_t n = 0; n <= order; ++n) {
    a[n] = term;
    term *= (alpha - Rational(static_cast<long>(n))) * c;
  }
  return TruncatedSeries(std::move(a));
}

const LambdaPoly& coeff(const TruncatedSeries& f, std::size_t n) { return f.coeff(n); }

}  // namespace dowlab
