#pragma once

// Explicit points of V from the fibers with s even. On Q_{r,s} the point
// (1, 1, s) gives the parametrization
//
//   f1 = x^2 + 4sxy + 2(r^2+s^2)y^2
//   f2 = x^2 - 2(r^2+s^2)y^2
//   f3 = -s x^2 - 2(r^2+s^2)xy - 2s(r^2+s^2)y^2
//
// and for gcd(x, 2sy) = 1 the content of (f1, f2, f3) is
// gcd(x, r^2+s^2) * gcd(x+2sy, r^2-s^2).

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "dp4/counting.hpp"
#include "dp4/detail/intmath.hpp"
#include "dp4/errors.hpp"
#include "dp4/quadrics.hpp"
#include "dp4/surface.hpp"

namespace dp4 {

struct ParamInput {
  i64 r = 1, s = 0, x = 1, y = 0;
};

struct FormTriple {
  i64 f1 = 0, f2 = 0, f3 = 0;
  i64 content = 1;
};

namespace lowerbound {

using detail::gcd64;

inline TernaryQuadric q_rs(i64 r, i64 s) {
  if (r == 0 && s == 0) throw BadInput("q_rs: (r, s) = (0, 0)");
  return TernaryQuadric{{r * r + s * s, -(r * r - s * s), -2}};
}

inline FiberCoords base_point(i64 /*r*/, i64 s) { return {1, 1, s}; }

inline bool admissible(const ParamInput& in) {
  if (in.s % 2 != 0 || gcd64(in.r, in.s) != 1) return false;
  const i128 two_sy = 2 * static_cast<i128>(in.s) * in.y;
  return detail::gcd128(in.x, two_sy) == 1;
}

inline FormTriple forms_eval(const ParamInput& in) {
  if (in.s % 2 != 0) throw BadInput("forms_eval: s must be even");
  if (gcd64(in.r, in.s) != 1) throw BadInput("forms_eval: gcd(r, s) must be 1");
  if (!admissible(in)) throw BadInput("forms_eval: gcd(x, 2sy) must be 1");
  const i128 r = in.r, s = in.s, x = in.x, y = in.y;
  const i128 A = r * r + s * s;
  FormTriple t;
  t.f1 = detail::narrow(x * x + 4 * s * x * y + 2 * A * y * y);
  t.f2 = detail::narrow(x * x - 2 * A * y * y);
  t.f3 = detail::narrow(-s * x * x - 2 * A * x * y - 2 * s * A * y * y);
  t.content = gcd64(gcd64(t.f1, t.f2), t.f3);
  return t;
}

/// Predicted content gcd(x, r^2+s^2) * gcd(x+2sy, r^2-s^2).
inline i64 content_formula(const ParamInput& in) {
  const i64 A = in.r * in.r + in.s * in.s, D = in.r * in.r - in.s * in.s;
  return gcd64(in.x, A) * gcd64(in.x + 2 * in.s * in.y, D);
}

inline bool content_lemma_check(const ParamInput& in) { return forms_eval(in).content == content_formula(in); }

/// The four conditions on (u, v) for x = a u, x + 2sy = b v with
/// a | r^2+s^2 = a c and b | r^2-s^2 = b d:
///   (1) gcd(u, c) = gcd(v, d) = 1
///   (2) gcd(a, v) = gcd(u, b) = gcd(u, v) = gcd(u, s) = 1
///   (3) 2s | a u - b v
///   (4) 1 <= u <= (B b / (4 a s))^(1/2), 1 <= v <= (B a / (4 b s))^(1/2)
/// The box (4) depends on the height bound B. Requires s >= 1.
inline bool decomposition_predicates(i64 r, i64 s, i64 a, i64 b, i64 u, i64 v, i64 B) {
  const i64 A = r * r + s * s, D = r * r - s * s;
  if (s < 1) throw BadInput("decomposition_predicates: s must be >= 1");
  if (a < 1 || A % a != 0) throw NotADivisor("decomposition_predicates: a does not divide r^2+s^2");
  if (b < 1 || D % b != 0) throw NotADivisor("decomposition_predicates: b does not divide r^2-s^2");
  const i64 c = A / a, d = D / b;
  const bool cond1 = gcd64(u, c) == 1 && gcd64(v, d) == 1;
  const bool cond2 = gcd64(a, v) == 1 && gcd64(u, b) == 1 && gcd64(u, v) == 1 && gcd64(u, s) == 1;
  const bool cond3 = (static_cast<i128>(a) * u - static_cast<i128>(b) * v) % (2 * s) == 0;
  // u^2 <= B b / (4 a s) and v^2 <= B a / (4 b s), cleared of denominators
  const bool cond4 = u >= 1 && v >= 1 && static_cast<i128>(4) * a * s * u * u <= static_cast<i128>(B) * b &&
                     static_cast<i128>(4) * b * s * v * v <= static_cast<i128>(B) * a;
  return cond1 && cond2 && cond3 && cond4;
}

struct GenCaps {
  i64 max_points = 0;     // stop after this many distinct points; 0 = no cap
  i64 max_per_fiber = 0;  // per (r, s); 0 = no cap
};

struct GeneratedPoint {
  SurfacePoint point;
  i64 r = 0, s = 0, x = 0, y = 0, n = 0;
};

/// Points built from (r, s) with s even, gcd(r, s) = 1, 1 <= r, s <= B^eta,
/// and (x, y) with gcd(x, 2sy) = 1 in the boxes
///   1 <= x <= (B n / (4s))^(1/2),  |y| <= (B n / (16 s^3))^(1/2),
/// n the content. Every output is re-checked for height and line membership;
/// the list is sorted by point and free of duplicates.
inline std::vector<GeneratedPoint> generate_points(i64 B, double eta, GenCaps caps = {}) {
  if (B < 16) throw BadInput("generate_points: B must be >= 16");
  if (!(eta > 0 && eta <= 0.5)) throw BadInput("generate_points: eta must lie in (0, 1/2]");
  auto limit = static_cast<i64>(std::floor(std::pow(static_cast<long double>(B), static_cast<long double>(eta)) + 1e-9L));
  while (limit > 1 && std::pow(static_cast<long double>(limit), 1 / static_cast<long double>(eta)) > B) --limit;
  std::map<Coords, GeneratedPoint> out;
  for (i64 s = 2; s <= limit; s += 2) {
    for (i64 r = 1; r <= limit; ++r) {
      if (gcd64(r, s) != 1) continue;
      const i64 A = r * r + s * s, D = detail::abs64(r * r - s * s);
      // n <= A * |D|; the exact box is re-checked with the actual content.
      const i128 nmax = static_cast<i128>(A) * D;
      const auto xmax = static_cast<i64>(detail::isqrt128(static_cast<u128>(B * nmax / (4 * s))));
      const auto ymax = static_cast<i64>(detail::isqrt128(static_cast<u128>(B * nmax / (16 * static_cast<i128>(s) * s * s))));
      i64 in_fiber = 0;
      for (i64 x = 1; x <= xmax; ++x) {
        for (i64 y = -ymax; y <= ymax; ++y) {
          ParamInput in{r, s, x, y};
          if (!admissible(in)) continue;
          const FormTriple t = forms_eval(in);
          const i64 n = t.content;
          if (static_cast<i128>(4) * s * x * x > static_cast<i128>(B) * n) continue;
          if (static_cast<i128>(16) * s * s * s * y * y > static_cast<i128>(B) * n) continue;
          const Coords raw{r * (t.f1 / n), s * (t.f2 / n), s * (t.f1 / n), r * (t.f2 / n), t.f3 / n};
          const SurfacePoint p = surface::normalize_primitive(raw);
          if (p.height > B || p.on_line()) continue;
          if (out.emplace(p.x, GeneratedPoint{p, r, s, x, y, n}).second) ++in_fiber;
          if (caps.max_points > 0 && static_cast<i64>(out.size()) >= caps.max_points) goto done;
          if (caps.max_per_fiber > 0 && in_fiber >= caps.max_per_fiber) goto next_fiber;
        }
      }
    next_fiber:;
    }
  }
done:
  std::vector<GeneratedPoint> list;
  list.reserve(out.size());
  for (auto& [x, g] : out) list.push_back(g);
  return list;
}

}  // namespace lowerbound
}  // namespace dp4
