#pragma once

// Diagonal ternary quadratic forms a1 X1^2 + a2 X2^2 + a3 X3^2: invariants,
// primitive solutions in a box, and the Heath-Brown bound
//
//   N <= C (1 + (B1 B2 B3 Delta0^2 / Delta)^(1/3)) d(Delta)
//
// evaluated without its constant.

#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>
#include <vector>

#include "dp4/conic.hpp"
#include "dp4/detail/intmath.hpp"
#include "dp4/detail/parallel.hpp"
#include "dp4/errors.hpp"

namespace dp4 {

struct TernaryQuadric {
  std::array<i64, 3> diag{};

  i128 operator()(i64 X1, i64 X2, i64 X3) const {
    return static_cast<i128>(diag[0]) * X1 * X1 + static_cast<i128>(diag[1]) * X2 * X2 +
           static_cast<i128>(diag[2]) * X3 * X3;
  }
  friend bool operator==(const TernaryQuadric&, const TernaryQuadric&) = default;
};

struct QuadricInvariants {
  i128 delta = 0;   // |det M|
  i128 delta0 = 0;  // gcd of the 2x2 minors
};

namespace quadrics {

/// Number of divisors, by trial division.
inline i64 divisor_count(i128 n) {
  n = detail::abs128(n);
  if (n == 0) throw BadInput("divisor_count: 0 has infinitely many divisors");
  i64 d = 1;
  for (i128 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    d *= e + 1;
  }
  if (n > 1) d *= 2;
  return d;
}

/// For M = diag(a1, a2, a3) the nonzero 2x2 minors are the pairwise products.
inline QuadricInvariants invariants(const TernaryQuadric& q) {
  const auto& a = q.diag;
  if (a[0] == 0 || a[1] == 0 || a[2] == 0) throw SingularForm("invariants: determinant is zero");
  const i128 p01 = static_cast<i128>(a[0]) * a[1], p02 = static_cast<i128>(a[0]) * a[2],
             p12 = static_cast<i128>(a[1]) * a[2];
  QuadricInvariants inv;
  inv.delta = detail::abs128(p01 * a[2]);
  inv.delta0 = detail::gcd128(detail::gcd128(p01, p02), p12);
  return inv;
}

inline double hb_bound(const TernaryQuadric& q, i64 B1, i64 B2, i64 B3) {
  if (B1 < 1 || B2 < 1 || B3 < 1) throw BadInput("hb_bound: box sides must be >= 1");
  const QuadricInvariants inv = invariants(q);
  const long double num = static_cast<long double>(B1) * static_cast<long double>(B2) *
                          static_cast<long double>(B3) * static_cast<long double>(inv.delta0) *
                          static_cast<long double>(inv.delta0);
  const long double ratio = num / static_cast<long double>(inv.delta);
  return static_cast<double>((1 + std::cbrt(ratio)) * static_cast<long double>(divisor_count(inv.delta)));
}

namespace detail_quad {

// #{1 <= y <= n : gcd(y, g) = 1}, g >= 1.
inline i64 coprime_upto(i64 n, i64 g) {
  std::vector<i64> primes;
  for (i64 p = 2; p <= g / p; ++p)
    if (g % p == 0) {
      primes.push_back(p);
      while (g % p == 0) g /= p;
    }
  if (g > 1) primes.push_back(g);
  i64 total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
    i64 d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask >> i & 1U) d *= primes[i], ++bits;
    total += (bits % 2 == 0 ? 1 : -1) * (n / d);
  }
  return total;
}

// #{|y| <= n : gcd(y, g) = 1}; g = 0 leaves y = +-1.
inline i64 coprime_in_range(i64 n, i64 g) {
  if (n < 1) return g == 1 ? 1 : 0;
  if (g == 0) return 2;
  return 2 * coprime_upto(n, g) + (g == 1 ? 1 : 0);
}

}  // namespace detail_quad

/// Primitive integer vectors (both signs) with q(X) = 0 and |Xi| <= Bi.
/// Two coordinates are scanned and the third solved for; a coordinate with
/// zero coefficient is free and counted by coprimality instead.
inline i64 count_box(const TernaryQuadric& q, i64 B1, i64 B2, i64 B3) {
  if (B1 < 0 || B2 < 0 || B3 < 0) throw BadInput("count_box: negative box");
  const std::array<i64, 3> box{B1, B2, B3};
  const auto& a = q.diag;
  const int zeros = static_cast<int>(std::count(a.begin(), a.end(), 0));
  i64 n = 0;
  if (zeros == 3) {
    for (i64 x = -B1; x <= B1; ++x)
      for (i64 y = -B2; y <= B2; ++y)
        for (i64 z = -B3; z <= B3; ++z)
          if (detail::gcd64(detail::gcd64(x, y), z) == 1) ++n;
    return n;
  }
  if (zeros == 2) {
    // The nonzero coordinate vanishes; the other two form a primitive pair.
    const std::size_t k = a[0] != 0 ? 0 : (a[1] != 0 ? 1 : 2);
    const std::size_t i1 = (k + 1) % 3, i2 = (k + 2) % 3;
    for (i64 u = -box[i1]; u <= box[i1]; ++u) n += detail_quad::coprime_in_range(box[i2], detail::abs64(u));
    return n;
  }
  if (zeros == 1) {
    const std::size_t f = a[0] == 0 ? 0 : (a[1] == 0 ? 1 : 2);
    const std::size_t i1 = (f + 1) % 3, i2 = (f + 2) % 3;
    // Scan the smaller of the two constrained coordinates, solve for the other.
    const std::size_t su = box[i1] <= box[i2] ? i1 : i2, sw = su == i1 ? i2 : i1;
    for (i64 u = -box[su]; u <= box[su]; ++u) {
      const i128 rest = static_cast<i128>(a[su]) * u * u;
      if (rest % a[sw] != 0) continue;
      i128 root;
      if (!detail::is_square(-rest / a[sw], root) || root > box[sw]) continue;
      const i64 w = static_cast<i64>(root);
      const i64 g = detail::gcd64(u, w);
      n += (w == 0 ? 1 : 2) * detail_quad::coprime_in_range(box[f], g);
    }
    return n;
  }
  // Solve for the coordinate with the widest range.
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (box[i] > box[k]) k = i;
  const std::size_t i1 = (k + 1) % 3, i2 = (k + 2) % 3;
  const i128 ak = a[k];
  for (i64 u = -box[i1]; u <= box[i1]; ++u) {
    for (i64 v = -box[i2]; v <= box[i2]; ++v) {
      const i128 rest = static_cast<i128>(a[i1]) * u * u + static_cast<i128>(a[i2]) * v * v;
      if (rest % ak != 0) continue;
      i128 root;
      if (!detail::is_square(-rest / ak, root) || root > box[k]) continue;
      const i64 w = static_cast<i64>(root);
      if (detail::gcd64(detail::gcd64(u, v), w) != 1) continue;
      n += (w == 0) ? 1 : 2;
    }
  }
  return n;
}

/// count_box for the fiber conic Q_{r,s} with box (b, b, c), via the
/// parametrized enumeration: twice the number of projective classes.
inline i64 count_box_fiber(i64 r, i64 s, i64 b, i64 c) {
  i64 classes = 0;
  conic::for_each_point(r, s, conic::Box{b, c}, [&](const conic::Solution&) { ++classes; });
  return 2 * classes;
}

struct SurveyRow {
  i64 r = 0, s = 0;
  i64 count = 0;
  double hb = 0;
  double ratio = 0;
};

struct SurveyReport {
  std::vector<SurveyRow> rows;  // ordered by (max(|r|,|s|), r, s)
  std::vector<SurveyRow> skipped;  // singular fibers, r^2 = s^2
  double max_ratio = 0;
  double mean_ratio = 0;
  double max_first_half = 0;
  double max_second_half = 0;
  bool bounded = true;  // max_second_half <= 2 * max_first_half
};

/// count_box(Q_{r,s}, B/m, B/m, B) / hb_bound over every normalized fiber
/// with m = max(|r|,|s|) <= rmax. Fibers with r^2 = s^2 have Delta = 0; they
/// are listed in skipped with their count and no ratio.
inline SurveyReport hb_ratio_survey(i64 B, i64 rmax, unsigned workers = detail::default_workers()) {
  if (B < 1) throw BadInput("hb_ratio_survey: B must be >= 1");
  SurveyReport rep;
  if (rmax < 1) return rep;
  std::vector<std::tuple<i64, i64, i64>> keys;  // (m, r, s)
  for (i64 r = 0; r <= rmax; ++r)
    for (i64 s = -rmax; s <= rmax; ++s) {
      if (detail::gcd64(r, s) != 1 || (r == 0 && s != 1)) continue;
      keys.emplace_back(std::max(r, detail::abs64(s)), r, s);
    }
  std::sort(keys.begin(), keys.end());
  std::vector<SurveyRow> rows(keys.size());
  detail::parallel_for(keys.size(), workers, [&](std::size_t i) {
    auto [m, r, s] = keys[i];
    SurveyRow row{r, s, 0, 0, 0};
    const i64 b = B / m;
    const TernaryQuadric q{{r * r + s * s, -(r * r - s * s), -2}};
    if (r * r == s * s) {
      row.count = count_box(q, b, b, B);
    } else {
      row.count = count_box_fiber(r, s, b, B);
      row.hb = hb_bound(q, std::max<i64>(b, 1), std::max<i64>(b, 1), B);
      row.ratio = static_cast<double>(row.count) / row.hb;
    }
    rows[i] = row;
  });
  for (const SurveyRow& row : rows) (row.r * row.r == row.s * row.s ? rep.skipped : rep.rows).push_back(row);
  const std::size_t half = rep.rows.size() / 2;
  double sum = 0;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const double x = rep.rows[i].ratio;
    sum += x;
    rep.max_ratio = std::max(rep.max_ratio, x);
    if (i < half)
      rep.max_first_half = std::max(rep.max_first_half, x);
    else
      rep.max_second_half = std::max(rep.max_second_half, x);
  }
  if (!rep.rows.empty()) rep.mean_ratio = sum / static_cast<double>(rep.rows.size());
  rep.bounded = rep.rows.size() < 2 || rep.max_second_half <= 2 * rep.max_first_half;
  return rep;
}

}  // namespace quadrics
}  // namespace dp4
