#pragma once

// Generalized falling/rising factorials and conversion into Newton form.
// Every defining relation of the Whitney and Stirling families is a change of
// basis between two node sequences, solved here by repeated synthetic division.

#include <cstddef>
#include <vector>

#include "dowlab/lambda_poly.hpp"

namespace dowlab {

// Polynomial in a formal variable X with LambdaPoly coefficients.
class XPoly {
 public:
  XPoly() = default;
  XPoly(const LambdaPoly& c);  // NOLINT(google-explicit-constructor)
  explicit XPoly(std::vector<LambdaPoly> coeffs);

  static XPoly x();
  // a*X + b
  static XPoly linear(const LambdaPoly& a, const LambdaPoly& b);

  const std::vector<LambdaPoly>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  LambdaPoly operator[](std::size_t i) const;

  LambdaPoly eval(const LambdaPoly& x) const;

  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const LambdaPoly& c);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(XPoly a, const LambdaPoly& c) { return a *= c; }
  friend bool operator==(const XPoly& a, const XPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  std::vector<LambdaPoly> coeffs_;
};

// Nodes a_0, a_1, ... of a Newton basis {prod_{j<k} (X - a_j)}.
struct NodeSequence {
  std::vector<LambdaPoly> nodes;

  // a_j = offset + j*step, j < count.
  static NodeSequence arithmetic(const LambdaPoly& offset, const LambdaPoly& step, std::size_t count);

  std::size_t size() const { return nodes.size(); }
  const LambdaPoly& operator[](std::size_t j) const { return nodes[j]; }
};

// prod_{j<n} (x - j*step); 1 for n == 0.
LambdaPoly lambda_falling(const LambdaPoly& x, std::size_t n, const LambdaPoly& step);
// prod_{j<n} (x + j*step); 1 for n == 0.
LambdaPoly lambda_rising(const LambdaPoly& x, std::size_t n, const LambdaPoly& step);

// The same products with x replaced by an affine XPoly; materializes e.g.
// (mX + r)_{n,lambda} in the power basis.
XPoly falling_xpoly(const XPoly& x, std::size_t n, const LambdaPoly& step);
XPoly rising_xpoly(const XPoly& x, std::size_t n, const LambdaPoly& step);

// prod_{j<n} (X - nodes[j]), monic of degree n. Requires nodes.size() >= n.
XPoly basis_poly(std::size_t n, const NodeSequence& nodes);

// c_0..c_deg with p(X) = sum_k c_k prod_{j<k}(X - a_j). Requires
// nodes.size() >= deg(p). The zero polynomial yields an empty list.
std::vector<LambdaPoly> newton_convert(const XPoly& p, const NodeSequence& nodes);

// Inverse of newton_convert: sum_k c_k basis_poly(k, nodes).
XPoly newton_expand(const std::vector<LambdaPoly>& coeffs, const NodeSequence& nodes);

// Exact binomial coefficient from a memoized Pascal table; 0 when k > n.
Integer binomial(std::size_t n, std::size_t k);
// Generalized C(alpha, k) = alpha (alpha-1) ... (alpha-k+1) / k!.
Rational generalized_binomial(const Rational& alpha, std::size_t k);
Integer factorial(std::size_t n);

}  // namespace dowlab
