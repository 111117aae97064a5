#include "dowlab/factorial_bases.hpp"

#include <mutex>

#include "dowlab/error.hpp"

namespace dowlab {

XPoly::XPoly(const LambdaPoly& c) : coeffs_{c} { normalize(); }

XPoly::XPoly(std::vector<LambdaPoly> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

XPoly XPoly::x() { return XPoly(std::vector<LambdaPoly>{LambdaPoly(), LambdaPoly(1)}); }

XPoly XPoly::linear(const LambdaPoly& a, const LambdaPoly& b) { return XPoly(std::vector<LambdaPoly>{b, a}); }

void XPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LambdaPoly XPoly::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : LambdaPoly(); }

LambdaPoly XPoly::eval(const LambdaPoly& x) const {
  LambdaPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

XPoly& XPoly::operator*=(const LambdaPoly& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LambdaPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return XPoly(std::move(out));
}

NodeSequence NodeSequence::arithmetic(const LambdaPoly& offset, const LambdaPoly& step, std::size_t count) {
  NodeSequence seq;
  seq.nodes.reserve(count);
  for (std::size_t j = 0; j < count; ++j) seq.nodes.push_back(offset + step * Rational(static_cast<long>(j)));
  return seq;
}

LambdaPoly lambda_falling(const LambdaPoly& x, std::size_t n, const LambdaPoly& step) {
  LambdaPoly acc(1);
  for (std::size_t j = 0; j < n; ++j) acc *= x - step * Rational(static_cast<long>(j));
  return acc;
}

LambdaPoly lambda_rising(const LambdaPoly& x, std::size_t n, const LambdaPoly& step) {
  LambdaPoly acc(1);
  for (std::size_t j = 0; j < n; ++j) acc *= x + step * Rational(static_cast<long>(j));
  return acc;
}

XPoly falling_xpoly(const XPoly& x, std::size_t n, const LambdaPoly& step) {
  XPoly acc(LambdaPoly(1));
  for (std::size_t j = 0; j < n; ++j) acc = acc * (x - XPoly(step * Rational(static_cast<long>(j))));
  return acc;
}

XPoly rising_xpoly(const XPoly& x, std::size_t n, const LambdaPoly& step) {
  XPoly acc(LambdaPoly(1));
  for (std::size_t j = 0; j < n; ++j) acc = acc * (x + XPoly(step * Rational(static_cast<long>(j))));
  return acc;
}

XPoly basis_poly(std::size_t n, const NodeSequence& nodes) {
  if (nodes.size() < n) throw DomainError("basis_poly: node sequence shorter than requested degree");
  XPoly acc(LambdaPoly(1));
  for (std::size_t j = 0; j < n; ++j) acc = acc * XPoly::linear(1, -nodes[j]);
  return acc;
}

std::vector<LambdaPoly> newton_convert(const XPoly& p, const NodeSequence& nodes) {
  if (p.is_zero()) return {};
  const auto degree = static_cast<std::size_t>(p.degree());
  if (nodes.size() < degree) throw DomainError("newton_convert: node sequence shorter than degree");

  std::vector<LambdaPoly> rest = p.coeffs();
  std::vector<LambdaPoly> out;
  out.reserve(degree + 1);
  for (std::size_t k = 0; k < degree; ++k) {
    // Divide rest by (X - a_k); the remainder is the k-th Newton coefficient.
    const LambdaPoly& a = nodes[k];
    const std::size_t d = rest.size() - 1;
    std::vector<LambdaPoly> quotient(d);
    LambdaPoly carry = rest[d];
    for (std::size_t i = d; i-- > 0;) {
      quotient[i] = carry;
      carry = rest[i] + a * carry;
    }
    out.push_back(carry);
    rest = std::move(quotient);
  }
  out.push_back(rest.front());
  return out;
}

XPoly newton_expand(const std::vector<LambdaPoly>& coeffs, const NodeSequence& nodes) {
  if (coeffs.empty()) return {};
  if (nodes.size() + 1 < coeffs.size()) throw DomainError("newton_expand: node sequence too short");
  XPoly acc(coeffs.back());
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * XPoly::linear(1, -nodes[k]) + XPoly(coeffs[k]);
  return acc;
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  static std::mutex mutex;
  static std::vector<std::vector<Integer>> pascal{{Integer(1)}};
  std::lock_guard lock(mutex);
  while (pascal.size() <= n) {
    const auto& prev = pascal.back();
    std::vector<Integer> row(prev.size() + 1);
    row.front() = row.back() = 1;
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    pascal.push_back(std::move(row));
  }
  return pascal[n][k];
}

Rational generalized_binomial(const Rational& alpha, std::size_t k) {
  Rational acc(1);
  for (std::size_t j = 0; j < k; ++j) {
    acc *= alpha - Rational(static_cast<long>(j));
    acc /= Rational(static_cast<long>(j + 1));
  }
  return acc;
}

Integer factorial(std::size_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace dowlab
