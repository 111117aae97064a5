#pragma once

// Classical and degenerate Stirling numbers, degenerate r-Stirling numbers and
// degenerate Bell polynomials, plus the Triangle table type shared with the
// Whitney families.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "dowlab/lambda_poly.hpp"
#include "dowlab/series.hpp"

namespace dowlab {

enum class Family { S1, S2, S1deg, S2deg, S1degR, S2degR, Wdeg, Vdeg, WdegR, VdegR };

std::string_view family_name(Family f);
// Canonical names plus the short aliases W, V, Wr, Vr.
std::optional<Family> parse_family(std::string_view name);
bool family_uses_m(Family f);
bool family_uses_r(Family f);

// Lower-triangular table T[n][k], 0 <= k <= n <= n_max.
struct Triangle {
  Family family = Family::S2;
  long m = 1;
  long r = 0;
  std::size_t n_max = 0;
  std::vector<std::vector<LambdaPoly>> rows;

  // Throws IndexError unless 0 <= k <= n <= n_max.
  const LambdaPoly& at(long n, long k) const;
  // Zero outside 0 <= k <= n; IndexError only when n > n_max.
  LambdaPoly value_or_zero(long n, long k) const;

  // Rows 0..n_max of this table (n_max must not exceed the stored one).
  Triangle slice(std::size_t n_max) const;
  // Every entry specialized at lambda = lambda0.
  Triangle eval_lambda(const Rational& lambda0) const;

  friend bool operator==(const Triangle& a, const Triangle& b) = default;
};

// Memoized triangle for (family, m, r) with at least rows 0..n_max.
// Published triangles are immutable and safe to share across threads.
std::shared_ptr<const Triangle> triangle(Family family, long m, long r, std::size_t n_max);

// Shared memo for triangles produced by an arbitrary route. Keyed by
// (route, m, r); a request past the stored n_max rebuilds at a larger size.
std::shared_ptr<const Triangle> memoized_triangle(std::string_view route, long m, long r, std::size_t n_max,
                                                  const std::function<Triangle(std::size_t)>& build);

// Builds a triangle column by column from generating functions:
// T[n][k] = coefficient n of column_gf(k), which must have order >= n_max.
Triangle triangle_from_columns(Family family, long m, long r, std::size_t n_max,
                               const std::function<TruncatedSeries(std::size_t k)>& column_gf);

// Signed Stirling numbers of the first kind, (x)_n = sum_k S1(n,k) x^k.
Integer stirling1(long n, long k);
// x^n = sum_k S2(n,k) (x)_k.
Integer stirling2(long n, long k);

// (x)_n = sum_l S_{1,lambda}(n,l) (x)_{l,lambda}.
LambdaPoly deg_stirling1(long n, long k);
// (x)_{n,lambda} = sum_k S_{2,lambda}(n,k) (x)_k.
LambdaPoly deg_stirling2(long n, long k);
// Bel_{n,lambda}(x) = sum_k S_{2,lambda}(n,k) x^k.
LambdaPoly deg_bell(long n, const Rational& x);

// (x+r)_{n,lambda} = sum_k {n+r, k+r}_{r,lambda} (x)_k.
LambdaPoly deg_r_stirling2(long n, long k, long r);
// <x+r>_n = sum_k [n+r, k+r]_{r,lambda} <x>_{k,lambda}.
LambdaPoly deg_r_stirling1_unsigned(long n, long k, long r);

// Uncached builders along the defining relations (basis conversion).
Triangle build_stirling1(std::size_t n_max);
Triangle build_stirling2(std::size_t n_max);
Triangle build_deg_stirling1(std::size_t n_max);
Triangle build_deg_stirling2(std::size_t n_max);
Triangle build_deg_r_stirling2(long r, std::size_t n_max);
Triangle build_deg_r_stirling1_unsigned(long r, std::size_t n_max);

// Independent generating-function paths:
//   (1/k!)(e_lambda(t) - 1)^k                          -> S_{2,lambda}
//   (1/k!)(log_lambda(1 + t))^k                        -> S_{1,lambda}
//   (1/k!)(e_lambda(t) - 1)^k e_lambda^r(t)            -> r-Stirling brace
//   (1 - t)^{-r} (1/k!)(-log_lambda(1 - t))^k          -> r-Stirling bracket
Triangle deg_stirling2_gf(std::size_t n_max);
Triangle deg_stirling1_gf(std::size_t n_max);
Triangle deg_r_stirling2_gf(long r, std::size_t n_max);
Triangle deg_r_stirling1_unsigned_gf(long r, std::size_t n_max);

}  // namespace dowlab
