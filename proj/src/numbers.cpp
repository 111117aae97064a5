#include "dowlab/numbers.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <mutex>
#include <tuple>

#include "dowlab/error.hpp"
#include "dowlab/factorial_bases.hpp"
#include "dowlab/whitney.hpp"

namespace dowlab {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::S1: return "S1";
    case Family::S2: return "S2";
    case Family::S1deg: return "S1deg";
    case Family::S2deg: return "S2deg";
    case Family::S1degR: return "S1degR";
    case Family::S2degR: return "S2degR";
    case Family::Wdeg: return "Wdeg";
    case Family::Vdeg: return "Vdeg";
    case Family::WdegR: return "WdegR";
    case Family::VdegR: return "VdegR";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  static const std::pair<std::string_view, Family> table[] = {
      {"S1", Family::S1},         {"S2", Family::S2},         {"S1deg", Family::S1deg},
      {"S2deg", Family::S2deg},   {"S1degR", Family::S1degR}, {"S2degR", Family::S2degR},
      {"Wdeg", Family::Wdeg},     {"Vdeg", Family::Vdeg},     {"WdegR", Family::WdegR},
      {"VdegR", Family::VdegR},   {"W", Family::Wdeg},        {"V", Family::Vdeg},
      {"Wr", Family::WdegR},      {"Vr", Family::VdegR},
  };
  for (const auto& [key, family] : table)
    if (key == name) return family;
  return std::nullopt;
}

bool family_uses_m(Family f) {
  return f == Family::Wdeg || f == Family::Vdeg || f == Family::WdegR || f == Family::VdegR;
}

bool family_uses_r(Family f) {
  return f == Family::S1degR || f == Family::S2degR || f == Family::WdegR || f == Family::VdegR;
}

const LambdaPoly& Triangle::at(long n, long k) const {
  if (n < 0 || k < 0 || k > n || static_cast<std::size_t>(n) > n_max)
    throw IndexError("triangle index (" + std::to_string(n) + ", " + std::to_string(k) + ") outside 0 <= k <= n <= " +
                     std::to_string(n_max));
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

LambdaPoly Triangle::value_or_zero(long n, long k) const {
  if (n >= 0 && static_cast<std::size_t>(n) > n_max)
    throw IndexError("triangle row " + std::to_string(n) + " past n_max " + std::to_string(n_max));
  if (n < 0 || k < 0 || k > n) return {};
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Triangle Triangle::slice(std::size_t new_max) const {
  if (new_max > n_max) throw IndexError("slice past n_max");
  Triangle t{family, m, r, new_max, {}};
  t.rows.assign(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(new_max + 1));
  return t;
}

Triangle Triangle::eval_lambda(const Rational& lambda0) const {
  Triangle t{family, m, r, n_max, rows};
  for (auto& row : t.rows)
    for (auto& e : row) e = LambdaPoly(e.eval(lambda0));
  return t;
}

namespace {

Triangle empty_triangle(Family family, long m, long r, std::size_t n_max) {
  Triangle t{family, m, r, n_max, {}};
  t.rows.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) t.rows[n].resize(n + 1);
  return t;
}

// Row n holds the Newton coefficients of source(n) over `target` nodes.
template <typename Source>
Triangle convert_rows(Family family, long m, long r, std::size_t n_max, const NodeSequence& target, Source source) {
  Triangle t = empty_triangle(family, m, r, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto c = newton_convert(source(n), target);
    for (std::size_t k = 0; k < c.size() && k <= n; ++k) t.rows[n][k] = c[k];
  }
  return t;
}

Triangle build(Family family, long m, long r, std::size_t n_max) {
  switch (family) {
    case Family::S1: return build_stirling1(n_max);
    case Family::S2: return build_stirling2(n_max);
    case Family::S1deg: return build_deg_stirling1(n_max);
    case Family::S2deg: return build_deg_stirling2(n_max);
    case Family::S1degR: return build_deg_r_stirling1_unsigned(r, n_max);
    case Family::S2degR: return build_deg_r_stirling2(r, n_max);
    case Family::Wdeg: return build_whitney2_recurrence(m, n_max);
    case Family::Vdeg: return build_whitney1_recurrence(m, n_max);
    case Family::WdegR: return build_r_whitney2(m, r, n_max);
    case Family::VdegR: return build_r_whitney1(m, r, n_max);
  }
  throw DomainError("unknown family");
}

void check_index(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    throw IndexError("index (" + std::to_string(n) + ", " + std::to_string(k) + ") outside 0 <= k <= n");
}

}  // namespace

std::shared_ptr<const Triangle> memoized_triangle(std::string_view route, long m, long r, std::size_t n_max,
                                                  const std::function<Triangle(std::size_t)>& build) {
  using Key = std::tuple<std::string, long, long>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const Triangle>> cache;
  const Key key{std::string(route), m, r};
  std::size_t target = n_max;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) {
      if (it->second->n_max >= n_max) return it->second;
      target = std::max(n_max, it->second->n_max + it->second->n_max / 2);
    }
  }
  // Built outside the lock; a racing builder of the same key only wastes work.
  auto built = std::make_shared<const Triangle>(build(target));
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot || slot->n_max < built->n_max) slot = built;
  return slot->n_max >= n_max ? slot : built;
}

std::shared_ptr<const Triangle> triangle(Family family, long m, long r, std::size_t n_max) {
  if (family_uses_m(family))
    validate_m(m);
  else
    m = 1;
  if (!family_uses_r(family)) r = (family == Family::Wdeg || family == Family::Vdeg) ? 1 : 0;
  if (r < 0) throw DomainError("r must be nonnegative");
  if ((family == Family::WdegR || family == Family::VdegR) && r < 1) throw DomainError("r-Whitney families need r >= 1");
  return memoized_triangle(family_name(family), m, r, n_max,
                           [&](std::size_t size) { return build(family, m, r, size); });
}

Triangle triangle_from_columns(Family family, long m, long r, std::size_t n_max,
                               const std::function<TruncatedSeries(std::size_t k)>& column_gf) {
  Triangle t = empty_triangle(family, m, r, n_max);
  for (std::size_t k = 0; k <= n_max; ++k) {
    const TruncatedSeries col = column_gf(k);
    if (col.order() < n_max) throw DomainError("column generating function truncated below n_max");
    for (std::size_t n = 0; n < k; ++n)
      if (!col.coeff(n).is_zero()) throw DomainError("column generating function is not lower triangular");
    for (std::size_t n = k; n <= n_max; ++n) t.rows[n][k] = col.coeff(n);
  }
  return t;
}

Triangle build_stirling1(std::size_t n_max) {
  // S1(n+1,k) = S1(n,k-1) - n S1(n,k)
  Triangle t = empty_triangle(Family::S1, 1, 0, n_max);
  t.rows[0][0] = 1;
  for (std::size_t n = 0; n < n_max; ++n) {
    for (std::size_t k = 0; k <= n + 1; ++k) {
      LambdaPoly v = t.value_or_zero(static_cast<long>(n), static_cast<long>(k) - 1);
      v -= t.value_or_zero(static_cast<long>(n), static_cast<long>(k)) * Rational(static_cast<long>(n));
      t.rows[n + 1][k] = v;
    }
  }
  return t;
}

Triangle build_stirling2(std::size_t n_max) {
  const auto falling = NodeSequence::arithmetic(0, 1, n_max);
  return convert_rows(Family::S2, 1, 0, n_max, falling, [](std::size_t n) {
    XPoly p(LambdaPoly(1));
    for (std::size_t j = 0; j < n; ++j) p = p * XPoly::x();
    return p;
  });
}

Triangle build_deg_stirling1(std::size_t n_max) {
  const auto lambda_nodes = NodeSequence::arithmetic(0, LambdaPoly::lambda(), n_max);
  const auto falling = NodeSequence::arithmetic(0, 1, n_max);
  return convert_rows(Family::S1deg, 1, 0, n_max, lambda_nodes, [&](std::size_t n) { return basis_poly(n, falling); });
}

Triangle build_deg_stirling2(std::size_t n_max) {
  const auto lambda_nodes = NodeSequence::arithmetic(0, LambdaPoly::lambda(), n_max);
  const auto falling = NodeSequence::arithmetic(0, 1, n_max);
  return convert_rows(Family::S2deg, 1, 0, n_max, falling, [&](std::size_t n) { return basis_poly(n, lambda_nodes); });
}

Triangle build_deg_r_stirling2(long r, std::size_t n_max) {
  const auto falling = NodeSequence::arithmetic(0, 1, n_max);
  const XPoly shifted = XPoly::linear(1, r);
  return convert_rows(Family::S2degR, 1, r, n_max, falling,
                      [&](std::size_t n) { return falling_xpoly(shifted, n, LambdaPoly::lambda()); });
}

Triangle build_deg_r_stirling1_unsigned(long r, std::size_t n_max) {
  // <X>_{k,lambda} = prod_{j<k} (X + j lambda): nodes -j lambda.
  const auto rising_lambda = NodeSequence::arithmetic(0, -LambdaPoly::lambda(), n_max);
  const XPoly shifted = XPoly::linear(1, r);
  return convert_rows(Family::S1degR, 1, r, n_max, rising_lambda,
                      [&](std::size_t n) { return rising_xpoly(shifted, n, 1); });
}

Integer stirling1(long n, long k) {
  check_index(n, k);
  return triangle(Family::S1, 1, 0, static_cast<std::size_t>(n))->at(n, k).constant_term().get_num();
}

Integer stirling2(long n, long k) {
  check_index(n, k);
  return triangle(Family::S2, 1, 0, static_cast<std::size_t>(n))->at(n, k).constant_term().get_num();
}

LambdaPoly deg_stirling1(long n, long k) {
  check_index(n, k);
  return triangle(Family::S1deg, 1, 0, static_cast<std::size_t>(n))->at(n, k);
}

LambdaPoly deg_stirling2(long n, long k) {
  check_index(n, k);
  return triangle(Family::S2deg, 1, 0, static_cast<std::size_t>(n))->at(n, k);
}

LambdaPoly deg_bell(long n, const Rational& x) {
  if (n < 0) throw IndexError("deg_bell: n must be nonnegative");
  const auto t = triangle(Family::S2deg, 1, 0, static_cast<std::size_t>(n));
  LambdaPoly acc;
  Rational power(1);
  for (long k = 0; k <= n; ++k) {
    acc += t->at(n, k) * power;
    power *= x;
  }
  return acc;
}

LambdaPoly deg_r_stirling2(long n, long k, long r) {
  check_index(n, k);
  return triangle(Family::S2degR, 1, r, static_cast<std::size_t>(n))->at(n, k);
}

LambdaPoly deg_r_stirling1_unsigned(long n, long k, long r) {
  check_index(n, k);
  return triangle(Family::S1degR, 1, r, static_cast<std::size_t>(n))->at(n, k);
}

namespace {

// (1/k!) base^k, with base^k built incrementally across columns.
std::function<TruncatedSeries(std::size_t)> power_columns(TruncatedSeries base, TruncatedSeries weight) {
  auto powers = std::make_shared<std::vector<TruncatedSeries>>();
  return [=](std::size_t k) {
    if (powers->empty()) powers->push_back(TruncatedSeries::one(base.order()));
    while (powers->size() <= k) powers->push_back(powers->back() * base);
    return ((*powers)[k] * weight) * LambdaPoly(Rational(1) / Rational(factorial(k)));
  };
}

}  // namespace

Triangle deg_stirling2_gf(std::size_t n_max) {
  const auto base = deg_exp(1, 1, n_max) - TruncatedSeries::one(n_max);
  return triangle_from_columns(Family::S2deg, 1, 0, n_max, power_columns(base, TruncatedSeries::one(n_max)));
}

Triangle deg_stirling1_gf(std::size_t n_max) {
  return triangle_from_columns(Family::S1deg, 1, 0, n_max,
                               power_columns(deg_log(n_max), TruncatedSeries::one(n_max)));
}

Triangle deg_r_stirling2_gf(long r, std::size_t n_max) {
  const auto base = deg_exp(1, 1, n_max) - TruncatedSeries::one(n_max);
  return triangle_from_columns(Family::S2degR, 1, r, n_max, power_columns(base, deg_exp(r, 1, n_max)));
}

Triangle deg_r_stirling1_unsigned_gf(long r, std::size_t n_max) {
  // -log_lambda(1 - t) and (1 - t)^{-r}
  const auto neg_log = -series_compose(deg_log(n_max), -TruncatedSeries::t(n_max));
  const auto weight = binomial_series(Rational(-r), Rational(-1), n_max);
  return triangle_from_columns(Family::S1degR, 1, r, n_max, power_columns(neg_log, weight));
}

}  // namespace dowlab
