#pragma once

// Points of the quartic del Pezzo surface
//
//   V :  x1*x2 - x3*x4 = 0,   x1^2 + x2^2 + x3^2 - x4^2 - 2*x5^2 = 0
//
// in P^4(Q), stored as canonical primitive integer 5-vectors.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "dp4/detail/intmath.hpp"
#include "dp4/errors.hpp"

namespace dp4 {

using Coords = std::array<i64, 5>;

/// Rational lines L1..L8 of V. The remaining eight lines are defined over
/// Q(i) only and carry no rational points.
enum class LineId : int { L1 = 1, L2, L3, L4, L5, L6, L7, L8 };

inline std::string to_string(LineId id) { return "L" + std::to_string(static_cast<int>(id)); }

/// Picard rank of V over Q. Consumed as a constant; never recomputed.
inline constexpr int kPicardRank = 5;

struct SurfacePoint {
  Coords x{};
  i64 height = 0;
  std::optional<LineId> line;

  const i64& operator[](std::size_t i) const { return x[i]; }
  bool on_line() const { return line.has_value(); }

  friend bool operator==(const SurfacePoint& a, const SurfacePoint& b) { return a.x == b.x; }
  friend auto operator<=>(const SurfacePoint& a, const SurfacePoint& b) { return a.x <=> b.x; }
};

/// Coprime pair with the first nonzero entry positive.
struct ProjectivePair {
  i64 first = 1;
  i64 second = 0;

  i64 norm() const { return std::max(detail::abs64(first), detail::abs64(second)); }
  friend bool operator==(const ProjectivePair&, const ProjectivePair&) = default;
  friend auto operator<=>(const ProjectivePair&, const ProjectivePair&) = default;
};

namespace surface {

/// Value of x1*x2 - x3*x4.
inline i128 first_form(const Coords& x) {
  return static_cast<i128>(x[0]) * x[1] - static_cast<i128>(x[2]) * x[3];
}

/// Value of x1^2 + x2^2 + x3^2 - x4^2 - 2*x5^2.
inline i128 second_form(const Coords& x) {
  auto sq = [](i64 v) { return static_cast<i128>(v) * v; };
  return sq(x[0]) + sq(x[1]) + sq(x[2]) - sq(x[3]) - 2 * sq(x[4]);
}

inline bool is_on_surface(const Coords& x) { return first_form(x) == 0 && second_form(x) == 0; }

inline i64 height(const Coords& x) {
  i64 h = 0;
  for (i64 v : x) h = std::max(h, detail::abs64(v));
  return h;
}

inline i64 content(const Coords& x) {
  i64 g = 0;
  for (i64 v : x) g = detail::gcd64(g, v);
  return g;
}

/// Divide by the content and make the first nonzero coordinate positive.
/// No surface check; callers that need one use normalize_primitive.
inline Coords canonical(Coords x) {
  i64 g = content(x);
  if (g == 0) throw ZeroVector("zero vector has no projective class");
  auto first = std::find_if(x.begin(), x.end(), [](i64 v) { return v != 0; });
  if (*first < 0) g = -g;
  for (i64& v : x) v /= g;
  return x;
}

inline bool is_canonical(const Coords& x) {
  if (content(x) != 1) return false;
  auto first = std::find_if(x.begin(), x.end(), [](i64 v) { return v != 0; });
  return *first > 0;
}

/// Pattern test for the eight rational lines. Ties go to the smallest index.
inline std::optional<LineId> line_id(const Coords& x) {
  const i64 x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4];
  if (x3 == x1 && x4 == x2) {
    if (x5 == x1) return LineId::L1;
    if (x5 == -x1) return LineId::L2;
  }
  if (x3 == -x1 && x4 == -x2) {
    if (x5 == x1) return LineId::L3;
    if (x5 == -x1) return LineId::L4;
  }
  if (x3 == x2 && x4 == x1) {
    if (x5 == x2) return LineId::L5;
    if (x5 == -x2) return LineId::L6;
  }
  if (x3 == -x2 && x4 == -x1) {
    if (x5 == x2) return LineId::L7;
    if (x5 == -x2) return LineId::L8;
  }
  return std::nullopt;
}

/// Canonical representative of the projective point raw. Throws ZeroVector
/// or NotOnSurface.
inline SurfacePoint normalize_primitive(const Coords& raw) {
  if (std::all_of(raw.begin(), raw.end(), [](i64 v) { return v == 0; }))
    throw ZeroVector("normalize_primitive: zero vector");
  if (!is_on_surface(raw)) throw NotOnSurface("normalize_primitive: point is not on V");
  SurfacePoint p;
  p.x = canonical(raw);
  p.height = height(p.x);
  p.line = line_id(p.x);
  return p;
}

/// Build a SurfacePoint from coordinates already known to be canonical and
/// on V (hot paths of the counters).
inline SurfacePoint make_trusted(const Coords& x) {
  return SurfacePoint{x, height(x), line_id(x)};
}

inline ProjectivePair reduce_pair(i64 a, i64 b) {
  i64 g = detail::gcd64(a, b);
  if (g == 0) throw ZeroVector("reduce_pair: (0, 0)");
  if (a < 0 || (a == 0 && b < 0)) g = -g;
  return {a / g, b / g};
}

/// The two conic-bundle projections V -> P^1.
///   axis 1: [x1, x3], or [x4, x2] when x1 = x3 = 0
///   axis 2: [x1, x4], or [x3, x2] when x1 = x4 = 0
inline ProjectivePair project(int axis, const Coords& x) {
  if (axis == 1) {
    if (x[0] != 0 || x[2] != 0) return reduce_pair(x[0], x[2]);
    return reduce_pair(x[3], x[1]);
  }
  if (axis == 2) {
    if (x[0] != 0 || x[3] != 0) return reduce_pair(x[0], x[3]);
    return reduce_pair(x[2], x[1]);
  }
  throw BadInput("project: axis must be 1 or 2");
}

inline ProjectivePair project(int axis, const SurfacePoint& p) { return project(axis, p.x); }

// Point text format: "x1 x2 x3 x4 x5".
inline std::string format_point(const Coords& x) {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? " " : "") << x[i];
  return os.str();
}

inline Coords parse_point(const std::string& text) {
  std::istringstream is(text);
  Coords x{};
  for (i64& v : x)
    if (!(is >> v)) throw BadInput("parse_point: expected five integers: '" + text + "'");
  std::string rest;
  if (is >> rest) throw BadInput("parse_point: trailing input: '" + text + "'");
  return x;
}

}  // namespace surface

inline std::ostream& operator<<(std::ostream& os, const SurfacePoint& p) {
  return os << surface::format_point(p.x);
}

}  // namespace dp4
