#pragma once

// Primitive points of the fiber conics
//
//   Q_{r,s}(X) = (r^2+s^2) X1^2 - (r^2-s^2) X2^2 - 2 X3^2 = 0
//
// inside a box |X1|,|X2| <= b, |X3| <= c, one representative per class
// {X, -X}. Two independent routes are provided:
//
//   * scan_box: loop over (X1, X2) and solve for X3. Cost ~ b^2.
//   * enumerate: parametrize the conic through its rational point (1,1,s),
//
//       f1 = x^2 + 4sxy + 2Ay^2
//       f2 = x^2 - 2Ay^2                      (A = r^2+s^2, D = r^2-s^2)
//       f3 = -sx^2 - 2Axy - 2sAy^2,
//
//     so that every primitive solution is F(x,y)/g for a unique coprime pair
//     {(x,y), -(x,y)} with content g = gcd(F(x,y)). For coprime (x,y) the
//     content divides 4*|A*D|; for an odd prime p, p^k | g exactly when
//     s*x + A*y = 0 (mod p^k) and k <= v_p(AD). The 2-part is found by
//     lifting classes of P^1(Z/2^k). Each admissible content g then selects
//     a lattice of index g, which is walked along a reduced basis inside
//     the real region |f1|,|f2| <= g*b. Cost is roughly proportional to
//     the number of points found rather than to the box area.
//
// enumerate requires D != 0; the two fibers with r^2 = s^2 have a reducible
// quadric and only the box scan handles them.

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "dp4/detail/intmath.hpp"
#include "dp4/errors.hpp"

namespace dp4::conic {

struct Box {
  i64 b = 0;  // bound on |X1| and |X2|
  i64 c = 0;  // bound on |X3|
};

struct Solution {
  i64 X1, X2, X3;
};

inline i128 q_value(i64 r, i64 s, i128 X1, i128 X2, i128 X3) {
  i128 A = static_cast<i128>(r) * r + static_cast<i128>(s) * s;
  i128 D = static_cast<i128>(r) * r - static_cast<i128>(s) * s;
  return A * X1 * X1 - D * X2 * X2 - 2 * X3 * X3;
}

/// Box scan. Representatives have X1 > 0, or X1 = 0 and X2 > 0.
template <class Visit>
void scan_box(i64 r, i64 s, Box box, Visit&& visit) {
  const i128 A = static_cast<i128>(r) * r + static_cast<i128>(s) * s;
  const i128 D = static_cast<i128>(r) * r - static_cast<i128>(s) * s;
  for (i64 X1 = 0; X1 <= box.b; ++X1) {
    const i128 a1 = A * X1 * X1;
    for (i64 X2 = (X1 == 0 ? 1 : -box.b); X2 <= box.b; ++X2) {
      const i128 rhs = a1 - D * static_cast<i128>(X2) * X2;
      if (rhs < 0 || (rhs & 1) != 0) continue;
      i128 root;
      if (!detail::is_square(rhs / 2, root)) continue;
      if (root > box.c) continue;
      if (detail::gcd64(detail::gcd64(X1, X2), static_cast<i64>(root)) != 1) continue;
      visit(Solution{X1, X2, static_cast<i64>(root)});
      if (root != 0) visit(Solution{X1, X2, -static_cast<i64>(root)});
    }
  }
}

namespace detail_enum {

using dp4::detail::abs128;
using dp4::detail::ceil_div;
using dp4::detail::floor_div;
using dp4::detail::mod;

struct Forms {
  i128 A, D, s;
  // F(x, y)
  std::array<i128, 3> eval(i128 x, i128 y) const {
    i128 xx = x * x, xy = x * y, yy = y * y;
    return {xx + 4 * s * xy + 2 * A * yy, xx - 2 * A * yy, -s * xx - 2 * A * xy - 2 * s * A * yy};
  }
};

struct PrimePower {
  i64 p;
  int e;
};

inline std::vector<PrimePower> factor(i128 n) {
  std::vector<PrimePower> out;
  n = abs128(n);
  for (i64 p = 2; static_cast<i128>(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({static_cast<i64>(n), 1});
  return out;
}

// Classes [x0 : y0] of P^1(Z/2^k) with 2^k | F(x0, y0), for k = 0..kmax.
inline std::vector<std::vector<std::pair<i128, i128>>> two_adic_classes(const Forms& F, int kmax) {
  std::vector<std::vector<std::pair<i128, i128>>> levels(static_cast<std::size_t>(kmax) + 1);
  levels[0].push_back({1, 0});  // k = 0: no condition; unused lattice data
  if (kmax == 0) return levels;
  auto divisible = [&](i128 x, i128 y, int k) {
    i128 m = i128{1} << k;
    for (i128 v : F.eval(x, y))
      if (mod(v, m) != 0) return false;
    return true;
  };
  for (auto [x, y] : std::array<std::pair<i128, i128>, 3>{{{1, 0}, {0, 1}, {1, 1}}})
    if (divisible(x, y, 1)) levels[1].push_back({x, y});
  for (int k = 1; k < kmax; ++k) {
    i128 step = i128{1} << k;
    for (auto [x, y] : levels[static_cast<std::size_t>(k)]) {
      for (int t = 0; t < 2; ++t) {
        // Normalize the class so that one coordinate is 1.
        i128 nx = x, ny = y;
        if ((x & 1) != 0)
          ny = y + t * step;
        else
          nx = x + t * step;
        if (divisible(nx, ny, k + 1)) levels[static_cast<std::size_t>(k) + 1].push_back({nx, ny});
      }
    }
  }
  return levels;
}

// Integer sub-intervals of [lo, hi] that may contain t with |q(t)| <= T,
// q(t) = a t^2 + b t + c. Between consecutive roots of q = +-T the sign of
// |q| - T is constant, so each piece is decided at its midpoint; integers
// within rounding distance of a root or of the vertex are added separately.
// Callers re-check every candidate exactly.
struct Interval {
  i64 lo, hi;
};

inline void quad_band(double a, double b, double c, double T, i64 lo, i64 hi,
                      std::vector<Interval>& out) {
  out.clear();
  if (lo > hi) return;
  double cuts[6];
  int n = 0;
  auto add_roots = [&](double cc) {
    if (a == 0) {
      if (b != 0) cuts[n++] = -cc / b;
      return;
    }
    double disc = b * b - 4 * a * cc;
    if (disc < 0) return;
    double sq = std::sqrt(disc);
    double qq = -0.5 * (b + (b >= 0 ? sq : -sq));
    if (qq != 0) {
      cuts[n++] = qq / a;
      cuts[n++] = cc / qq;
    } else {
      cuts[n++] = 0;
    }
  };
  add_roots(c - T);
  add_roots(c + T);
  if (a != 0) cuts[n++] = -b / (2 * a);  // catches a band shrinking to a tangency point
  const double flo = static_cast<double>(lo), fhi = static_cast<double>(hi);
  double pts[8];
  int m = 0;
  pts[m++] = flo;
  for (int i = 0; i < n; ++i)
    if (cuts[i] > flo && cuts[i] < fhi) pts[m++] = cuts[i];
  pts[m++] = fhi;
  std::sort(pts, pts + m);
  auto value = [&](double t) { return (a * t + b) * t + c; };
  auto tol = [&](double t) {
    return 1e-12 * (std::fabs(a) * t * t + std::fabs(b * t) + std::fabs(c) + T) + 1e-9;
  };
  auto push = [&](double l, double h) {
    i64 il = std::max(lo, static_cast<i64>(std::ceil(l)));
    i64 ih = std::min(hi, static_cast<i64>(std::floor(h)));
    if (il > ih) return;
    if (!out.empty() && il <= out.back().hi + 1)
      out.back().hi = std::max(out.back().hi, ih);
    else
      out.push_back({il, ih});
  };
  for (int i = 0; i < m; ++i) {
    const double t = pts[i];
    const double eps = 1e-6 * (1 + std::fabs(t));
    if (std::fabs(value(t)) <= T + tol(t)) push(t - eps, t + eps);
    if (i + 1 < m) {
      const double h = pts[i + 1];
      const double mid = 0.5 * (t + h);
      if (std::fabs(value(mid)) <= T + tol(mid)) push(t - eps, h + 1e-6 * (1 + std::fabs(h)));
    }
  }
}

inline void intersect(const std::vector<Interval>& a, const std::vector<Interval>& b,
                      std::vector<Interval>& out) {
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    i64 lo = std::max(a[i].lo, b[j].lo), hi = std::min(a[i].hi, b[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi)
      ++i;
    else
      ++j;
  }
}

// Real region {(x, y) : y >= 0, |q_k(x, y)| <= T_k} for three binary forms
// with no common double zero. It is star-shaped around the origin, so the
// extremes of a linear functional are attained along finitely many
// directions: where two constraints meet, where one is tangent to a level
// line of the functional, or on the line y = 0. The region for bounds
// g*T_k is the same set scaled by sqrt(g).
struct Region {
  struct Q {
    double a, b, c, T;
    double at(double x, double y) const { return (a * x + b * y) * x + c * y * y; }
  };
  std::array<Q, 3> q;
  std::vector<std::pair<double, double>> corners;  // fixed extreme candidates

  explicit Region(const std::array<Q, 3>& forms) : q(forms) {
    auto keep = [&](double dx, double dy) {
      if (dy < 0) dx = -dx, dy = -dy;
      if (dx != 0 || dy != 0) corners.push_back(reach(dx, dy));
    };
    keep(1, 0);
    keep(-1, 0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        for (double sg : {1.0, -1.0}) {
          // q_i / T_i = sg * q_j / T_j along x = t y
          const Q& f = q[i];
          const Q& h = q[j];
          double a = f.a / f.T - sg * h.a / h.T, b = f.b / f.T - sg * h.b / h.T,
                      c = f.c / f.T - sg * h.c / h.T;
          if (a == 0) {
            if (b != 0) keep(-c / b, 1);
            continue;
          }
          double disc = b * b - 4 * a * c;
          if (disc < 0) continue;
          double sq = std::sqrt(disc);
          double qq = -0.5 * (b + (b >= 0 ? sq : -sq));
          if (qq != 0) {
            keep(qq / a, 1);
            keep(c / qq, 1);
          } else {
            keep(0, 1);
          }
        }
  }

  // Boundary point in direction (dx, dy).
  std::pair<double, double> reach(double dx, double dy) const {
    double m = 0;
    for (const Q& f : q) m = std::max(m, std::fabs(f.at(dx, dy)) / f.T);
    double k = 1 / std::sqrt(m);
    return {dx * k, dy * k};
  }

  // [min, max] of wx*x + wy*y over the region (unit scale).
  std::pair<double, double> extent(double wx, double wy) const {
    double lo = 0, hi = 0;
    auto take = [&](std::pair<double, double> p) {
      double v = wx * p.first + wy * p.second;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    };
    for (const auto& p : corners) take(p);
    for (const Q& f : q) {
      // grad q parallel to w: direction M^{-1} w with M = [[a, b/2], [b/2, c]]
      double tx = f.c * wx - f.b / 2 * wy, ty = -f.b / 2 * wx + f.a * wy;
      if (ty < 0) tx = -tx, ty = -ty;
      if (tx == 0 && ty == 0) continue;
      take(reach(tx, ty));
      if (ty == 0) take(reach(-tx, 0));
    }
    return {lo, hi};
  }
};

struct Vec2 {
  i64 x, y;
};

inline i128 dot(Vec2 u, Vec2 v) { return static_cast<i128>(u.x) * v.x + static_cast<i128>(u.y) * v.y; }
inline i128 cross(Vec2 u, Vec2 v) { return static_cast<i128>(u.x) * v.y - static_cast<i128>(u.y) * v.x; }

// Inner product used for basis reduction. Any positive definite choice is
// correct; one matched to the search region keeps rows short.
struct Metric {
  double xx = 1, xy = 0, yy = 1;
  double operator()(Vec2 u, Vec2 v) const {
    double ux = static_cast<double>(u.x), uy = static_cast<double>(u.y);
    double vx = static_cast<double>(v.x), vy = static_cast<double>(v.y);
    return xx * ux * vx + xy * (ux * vy + uy * vx) + yy * uy * vy;
  }
};

// Lagrange-Gauss reduction in the given metric.
inline void reduce(Vec2& u, Vec2& v, const Metric& G) {
  if (G(u, u) > G(v, v)) std::swap(u, v);
  for (int iter = 0; iter < 256; ++iter) {
    double nu = G(u, u);
    auto k = static_cast<i64>(std::floor(G(u, v) / nu + 0.5));
    if (k != 0) v = {v.x - k * u.x, v.y - k * u.y};
    if (G(v, v) >= nu) return;
    std::swap(u, v);
  }
}

// Inverse second-moment matrix of a star-shaped region, from its radial
// function sampled on a half circle.
inline Metric shape_metric(const Region& region) {
  constexpr int kSamples = 48;
  static const auto dirs = [] {
    std::array<std::pair<double, double>, kSamples> d{};
    for (int i = 0; i < kSamples; ++i) {
      double th = 3.14159265358979323846 * (i + 0.5) / kSamples;
      d[static_cast<std::size_t>(i)] = {std::cos(th), std::sin(th)};
    }
    return d;
  }();
  double mxx = 0, mxy = 0, myy = 0;
  for (auto [dx, dy] : dirs) {
    auto [x, y] = region.reach(dx, dy);
    double r2 = x * x + y * y;
    double w = r2 * r2;
    mxx += w * dx * dx;
    mxy += w * dx * dy;
    myy += w * dy * dy;
  }
  double det = mxx * myy - mxy * mxy;
  if (!(det > 0) || !std::isfinite(det)) return {};
  double scale = 1 / std::sqrt(det);
  return {myy * scale, -mxy * scale, mxx * scale};
}

// Inverse of a modulo m > 1, gcd(a, m) = 1.
inline i64 inverse64(i64 a, i64 m) {
  i64 r0 = m, r1 = a % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return t0 < 0 ? t0 + m : t0;
}

// Basis of {(x, y) : alpha x + beta y = 0 (mod g)}, gcd(alpha, beta, g) = 1.
inline std::pair<Vec2, Vec2> lattice_basis(i64 alpha, i64 beta, i64 g, const Metric& G = {}) {
  Vec2 u{1, 0}, v{0, 1};
  if (g != 1) {
    i64 h = std::gcd(alpha, g);
    i64 gh = g / h;
    i64 x0 = 0;
    if (gh != 1) {
      i64 inv = inverse64(alpha / h, gh);
      x0 = static_cast<i64>(mod(-static_cast<i128>(beta) * inv, gh));
    }
    u = {gh, 0};
    v = {x0, h};
  }
  reduce(u, v, G);
  return {u, v};
}

// Bilinear part of f: f(p + q) = f(p) + f(q) + bil(p, q).
inline std::array<i128, 3> bilinear(const Forms& F, Vec2 p, Vec2 q) {
  auto fp = F.eval(p.x, p.y), fq = F.eval(q.x, q.y), fs = F.eval(i128{p.x} + q.x, i128{p.y} + q.y);
  return {fs[0] - fp[0] - fq[0], fs[1] - fp[1] - fq[1], fs[2] - fp[2] - fq[2]};
}

}  // namespace detail_enum

/// True when enumerate can handle the fiber without overflowing 64-bit
/// lattice arithmetic.
inline bool enumerable(i64 r, i64 s, Box box) {
  const i128 A = static_cast<i128>(r) * r + static_cast<i128>(s) * s;
  const i128 D = static_cast<i128>(r) * r - static_cast<i128>(s) * s;
  if (D == 0) return false;
  const i128 g = 4 * A * dp4::detail::abs128(D);
  return g < (i128{1} << 50) && box.b < (i64{1} << 40) && box.c < (i64{1} << 40);
}

/// Parametrized enumeration. Requires enumerable(r, s, box). Representatives
/// are F(x,y)/g with y > 0 or (x,y) = (1,0), so signs are arbitrary.
template <class Visit>
void enumerate(i64 r, i64 s, Box box, Visit&& visit) {
  using namespace detail_enum;
  using dp4::detail::gcd64;
  const i128 A = static_cast<i128>(r) * r + static_cast<i128>(s) * s;
  const i128 D = static_cast<i128>(r) * r - static_cast<i128>(s) * s;
  if (D == 0) throw BadInput("conic::enumerate: reducible fiber (r^2 = s^2)");
  if (box.b < 0 || box.c < 0) return;
  if (!enumerable(r, s, box)) throw BadInput("conic::enumerate: fiber or box too large");
  const Forms F{A, D, s};

  // Prime-power structure of the possible contents.
  std::vector<PrimePower> odd;
  int v2 = 0;
  for (PrimePower pp : factor(A))
    if (pp.p == 2) v2 += pp.e; else odd.push_back(pp);
  for (PrimePower pp : factor(D))
    if (pp.p == 2) v2 += pp.e; else odd.push_back(pp);
  // A and D share no odd prime (gcd(A, D) divides 2).
  std::sort(odd.begin(), odd.end(), [](auto l, auto h) { return l.p < h.p; });
  const int k2max = 2 + v2;
  const auto classes2 = two_adic_classes(F, k2max);

  const double fA = static_cast<double>(A), fs = static_cast<double>(s);
  const double Tb = std::max(static_cast<double>(box.b), 0.5);
  const double Tc = std::max(static_cast<double>(box.c), 0.5);
  const Region region({Region::Q{1, 4 * fs, 2 * fA, Tb}, Region::Q{1, 0, -2 * fA, Tb},
                       Region::Q{-fs, -2 * fA, -2 * fs * fA, Tc}});
  const Metric metric = shape_metric(region);

  std::vector<int> expo(odd.size(), 0);
  std::vector<Interval> band1, band2, cur;

  auto run_lattice = [&](i64 g, i64 alpha, i64 beta) {
    const double scale = std::sqrt(static_cast<double>(g));
    const i128 gb = static_cast<i128>(g) * box.b, gc = static_cast<i128>(g) * box.c;
    const double T = static_cast<double>(g) * Tb;

    auto [u, v] = lattice_basis(alpha, beta, g, metric);
    // p = i u + j v has j = cross(u, p) / det and i = cross(p, v) / det.
    auto span = [&](Vec2 w) {
      auto e = region.extent(-static_cast<double>(w.y), static_cast<double>(w.x));
      return std::pair{e.first * scale, e.second * scale};
    };
    auto eu = span(u), ev = span(v);
    if (ev.second - ev.first < eu.second - eu.first) {
      std::swap(u, v);
      std::swap(eu, ev);
    }
    const double fdet = static_cast<double>(cross(u, v));  // +-g
    auto index_range = [&](std::pair<double, double> e, double sign) {
      double p = sign * e.first / fdet, q = sign * e.second / fdet;
      double lo = std::min(p, q), hi = std::max(p, q);
      return std::pair{static_cast<i64>(std::ceil(lo - 1e-6 * (1 + std::fabs(lo)))),
                       static_cast<i64>(std::floor(hi + 1e-6 * (1 + std::fabs(hi))))};
    };
    const auto [jlo, jhi] = index_range(eu, 1);
    const auto [ilo, ihi] = index_range(ev, -1);  // cross(p, v) = -cross(v, p)

    const auto Fu = F.eval(u.x, u.y), Fv = F.eval(v.x, v.y);
    const auto Fuv = bilinear(F, u, v);
    for (i64 j = jlo; j <= jhi; ++j) {
      const double fj = static_cast<double>(j);
      // y = i u.y + j v.y >= 0
      i64 lo = ilo, hi = ihi;
      const i64 yj = j * v.y;
      if (u.y > 0)
        lo = std::max(lo, static_cast<i64>(ceil_div(-yj, u.y)));
      else if (u.y < 0)
        hi = std::min(hi, static_cast<i64>(floor_div(-yj, u.y)));
      else if (yj < 0)
        continue;
      if (lo > hi) continue;
      quad_band(static_cast<double>(Fu[0]), static_cast<double>(Fuv[0]) * fj,
                static_cast<double>(Fv[0]) * fj * fj, T, lo, hi, band1);
      if (band1.empty()) continue;
      quad_band(static_cast<double>(Fu[1]), static_cast<double>(Fuv[1]) * fj,
                static_cast<double>(Fv[1]) * fj * fj, T, lo, hi, band2);
      intersect(band1, band2, cur);
      for (const Interval& iv : cur) {
        for (i64 i = iv.lo; i <= iv.hi; ++i) {
          const i64 x = i * u.x + j * v.x, y = i * u.y + j * v.y;
          if (y == 0) {
            if (x != 1) continue;
          } else if (y < 0) {
            continue;
          }
          const auto f = F.eval(x, y);
          if (abs128(f[0]) > gb || abs128(f[1]) > gb || abs128(f[2]) > gc) continue;
          if (gcd64(x, y) != 1) continue;
          const i64 X1 = static_cast<i64>(f[0] / g), X2 = static_cast<i64>(f[1] / g), X3 = static_cast<i64>(f[2] / g);
          if (static_cast<i128>(X1) * g != f[0] || static_cast<i128>(X2) * g != f[1] ||
              static_cast<i128>(X3) * g != f[2])
            continue;
          if (gcd64(gcd64(X1, X2), X3) != 1) continue;
          visit(Solution{X1, X2, X3});
        }
      }
    }
  };

  // Walk every admissible content g = 2^k2 * prod p^k_p with its classes.
  for (;;) {
    i64 godd = 1;
    i64 a_odd = 0, b_odd = 0;  // congruence data mod godd
    for (std::size_t i = 0; i < odd.size(); ++i) {
      if (expo[i] == 0) continue;
      i64 pk = 1;
      for (int e = 0; e < expo[i]; ++e) pk *= odd[i].p;
      // class [-A : s]: s x + A y = 0 (mod p^k)
      i64 a = static_cast<i64>(mod(s, pk)), b = static_cast<i64>(mod(A, pk));
      if (godd == 1) {
        a_odd = a;
        b_odd = b;
      } else {
        i128 inv = dp4::detail::inverse_mod(godd % pk, pk);
        a_odd = static_cast<i64>(a_odd + static_cast<i128>(godd) * mod((a - a_odd) * inv, pk));
        b_odd = static_cast<i64>(b_odd + static_cast<i128>(godd) * mod((b - b_odd) * inv, pk));
      }
      godd *= pk;
    }
    for (int k2 = 0; k2 <= k2max; ++k2) {
      const i64 p2 = i64{1} << k2;
      const i64 g = godd * p2;
      if (k2 == 0) {
        run_lattice(g, godd == 1 ? 0 : a_odd, godd == 1 ? 1 : b_odd);
        continue;
      }
      for (auto [x0, y0] : classes2[static_cast<std::size_t>(k2)]) {
        i64 a2 = static_cast<i64>(mod(y0, p2)), b2 = static_cast<i64>(mod(-x0, p2));
        i64 alpha = a2, beta = b2;
        if (godd != 1) {
          i128 inv = dp4::detail::inverse_mod(p2 % godd, godd);
          alpha = static_cast<i64>(a2 + static_cast<i128>(p2) * mod((a_odd - a2) * inv, godd));
          beta = static_cast<i64>(b2 + static_cast<i128>(p2) * mod((b_odd - b2) * inv, godd));
        }
        run_lattice(g, alpha, beta);
      }
    }
    // odometer over odd exponents
    std::size_t i = 0;
    while (i < odd.size() && expo[i] == odd[i].e) expo[i++] = 0;
    if (i == odd.size()) break;
    ++expo[i];
  }
}

/// Box scan for small boxes or reducible fibers, parametrization otherwise.
template <class Visit>
void for_each_point(i64 r, i64 s, Box box, Visit&& visit) {
  if (box.b <= 6 || !enumerable(r, s, box))
    scan_box(r, s, box, visit);
  else
    enumerate(r, s, box, visit);
}

}  // namespace dp4::conic
