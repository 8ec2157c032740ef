#pragma once

// Exact counters for N_U(B), the number of rational points of height <= B on
// V minus its lines.
//
//   brute_enumerate  loop over (x1, x2), take x3 | x1*x2, solve for x5
//   fiber_count      sum over every fiber of the first projection
//   split_count      both projections; a point is counted in the fiber of
//                    f1 when ||f1(x)||^2 <= B, otherwise in the fiber of f2
//
// The split counter only visits fibers with max(|r|,|s|)^2 <= B. Because
// ||f1(x)|| * ||f2(x)|| <= ||x||, every point of height <= B has one of its
// two projections in that range.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dp4/conic.hpp"
#include "dp4/detail/intmath.hpp"
#include "dp4/detail/parallel.hpp"
#include "dp4/errors.hpp"
#include "dp4/surface.hpp"

namespace dp4 {

/// Normalized key (r, s) of a fiber; same normalization as ProjectivePair.
struct FiberKey {
  i64 r = 1;
  i64 s = 0;

  i64 norm() const { return std::max(detail::abs64(r), detail::abs64(s)); }
  friend bool operator==(const FiberKey&, const FiberKey&) = default;
  friend auto operator<=>(const FiberKey&, const FiberKey&) = default;
};

struct FiberCoords {
  i64 X1 = 0, X2 = 0, X3 = 0;
  friend bool operator==(const FiberCoords&, const FiberCoords&) = default;
};

enum class Method { brute, fiber, split };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::fiber: return "fiber";
    case Method::split: return "split";
  }
  return "?";
}

struct CountRecord {
  i64 bound = 0;
  Method method = Method::brute;
  i64 count = 0;
  double seconds = 0;
};

/// Returns true when a (sign-free) point must be counted, i.e. lies on U.
/// Replaceable in tests to inject a faulty filter.
using LineFilter = bool (*)(const Coords&);

inline bool off_lines(const Coords& x) { return !surface::line_id(x).has_value(); }

struct CountOptions {
  unsigned workers = detail::default_workers();
  i64 brute_ceiling = 2000;
  i64 fiber_ceiling = 1000000;
  LineFilter filter = off_lines;
};

class MismatchError : public error {
 public:
  MismatchError(i64 bound, i64 brute, i64 fiber, std::vector<Coords> only_brute, std::vector<Coords> only_fiber)
      : error("count mismatch at B=" + std::to_string(bound) + ": brute " + std::to_string(brute) + ", fiber " +
              std::to_string(fiber)),
        bound(bound),
        only_brute(std::move(only_brute)),
        only_fiber(std::move(only_fiber)) {}

  i64 bound;
  std::vector<Coords> only_brute;  // symmetric difference, brute side
  std::vector<Coords> only_fiber;  // symmetric difference, fiber side
};

namespace counting {

namespace detail_count {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline void check_bound(i64 B, i64 ceiling, const char* what) {
  if (B < 1) throw BadInput(std::string(what) + ": B must be >= 1");
  if (B > ceiling)
    throw BoundTooLarge(std::string(what) + ": B=" + std::to_string(B) + " exceeds ceiling " +
                        std::to_string(ceiling));
}

// Smallest-prime-factor table on 0..n.
inline std::vector<std::int32_t> spf_table(i64 n) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(n) + 1, 0);
  for (i64 i = 2; i <= n; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0) continue;
    for (i64 j = i; j <= n; j += i)
      if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
  }
  return spf;
}

struct PE {
  i64 p;
  int e;
};

inline void factor_into(i64 n, const std::vector<std::int32_t>& spf, std::vector<PE>& out) {
  while (n > 1) {
    i64 p = spf[static_cast<std::size_t>(n)];
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    auto it = std::find_if(out.begin(), out.end(), [p](const PE& q) { return q.p == p; });
    if (it == out.end())
      out.push_back({p, e});
    else
      it->e += e;
  }
}

// Divisors d of the factored number with lo <= d <= hi.
inline void divisors_in(const std::vector<PE>& fac, i64 lo, i64 hi, std::vector<i64>& out) {
  out.clear();
  out.push_back(1);
  for (const PE& pe : fac) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      i64 d = out[i];
      for (int k = 0; k < pe.e; ++k) {
        d *= pe.p;
        if (d > hi) break;
        out.push_back(d);
      }
    }
  }
  std::erase_if(out, [lo](i64 d) { return d < lo; });
}

}  // namespace detail_count

/// Exhaustive count of U-points with height <= B. With collect, the points
/// are returned in ascending lexicographic order.
inline CountRecord brute_enumerate(i64 B, bool collect = false, std::vector<SurfacePoint>* points = nullptr,
                                   const CountOptions& opt = {}) {
  using namespace detail_count;
  check_bound(B, opt.brute_ceiling, "brute_enumerate");
  const auto t0 = std::chrono::steady_clock::now();
  const auto spf = spf_table(B);
  const auto nb = static_cast<std::size_t>(B) + 1;
  std::vector<i64> counts(nb, 0);
  std::vector<std::vector<Coords>> found(collect ? nb : 0);
  const LineFilter filter = opt.filter;

  detail::parallel_for(nb, opt.workers, [&](std::size_t idx) {
    const i64 x1 = static_cast<i64>(idx);
    i64 local = 0;
    std::vector<Coords>* sink = collect ? &found[idx] : nullptr;
    auto emit = [&](i64 x2, i64 x3, i64 x4) {
      i128 S = static_cast<i128>(x1) * x1 + static_cast<i128>(x2) * x2 + static_cast<i128>(x3) * x3 -
               static_cast<i128>(x4) * x4;
      if (S < 0 || (S & 1) != 0) return;
      i128 root;
      if (!detail::is_square(S / 2, root) || root > B) return;
      const i64 x5 = static_cast<i64>(root);
      if (detail::gcd64(detail::gcd64(detail::gcd64(x1, x2), detail::gcd64(x3, x4)), x5) != 1) return;
      for (i64 sgn : {1, -1}) {
        if (sgn == -1 && x5 == 0) break;
        Coords x{x1, x2, x3, x4, sgn * x5};
        if (!surface::is_canonical(x) || !filter(x)) continue;
        ++local;
        if (sink) sink->push_back(x);
      }
    };
    // x1 * x2 = 0 forces x3 = 0 or x4 = 0.
    auto zero_product = [&](i64 x2) {
      for (i64 t = -B; t <= B; ++t) {
        emit(x2, 0, t);
        if (t != 0) emit(x2, t, 0);
      }
    };
    std::vector<PE> fac;
    std::vector<i64> divs;
    for (i64 x2 = -B; x2 <= B; ++x2) {
      if (x1 == 0 || x2 == 0) {
        zero_product(x2);
        continue;
      }
      const i64 P = x1 * x2;
      const i64 absP = detail::abs64(P);
      fac.clear();
      factor_into(x1, spf, fac);
      factor_into(detail::abs64(x2), spf, fac);
      divisors_in(fac, (absP + B - 1) / B, B, divs);
      for (i64 d : divs) {
        emit(x2, d, P / d);
        emit(x2, -d, -P / d);
      }
    }
    counts[idx] = local;
  });

  CountRecord rec{B, Method::brute, 0, 0};
  for (i64 c : counts) rec.count += c;
  if (collect && points) {
    points->clear();
    for (auto& v : found)
      for (const Coords& x : v) points->push_back(surface::make_trusted(x));
    std::sort(points->begin(), points->end());
  }
  rec.seconds = seconds_since(t0);
  return rec;
}

/// The fiber of the first projection containing p, and coordinates in it:
/// x = (r X1, s X2, s X1, r X2, X3).
inline std::pair<FiberKey, FiberCoords> fiber_of(const SurfacePoint& p) {
  const Coords& x = p.x;
  const ProjectivePair key = surface::project(1, x);
  const i64 r = key.first, s = key.second;
  FiberCoords X;
  X.X1 = r != 0 ? x[0] / r : x[2] / s;
  X.X2 = s != 0 ? x[1] / s : x[3] / r;
  X.X3 = x[4];
  return {FiberKey{r, s}, X};
}

/// Point of V from fiber coordinates (inverse of fiber_of). Canonical.
inline SurfacePoint lift_to_surface(const FiberKey& key, const FiberCoords& X) {
  Coords x{key.r * X.X1, key.s * X.X2, key.s * X.X1, key.r * X.X2, X.X3};
  return surface::normalize_primitive(x);
}

namespace detail_count {

inline Coords lift1(i64 r, i64 s, const conic::Solution& X) {
  return {r * X.X1, s * X.X2, s * X.X1, r * X.X2, X.X3};
}

// Fiber (r, s) of the second projection lives on Q_{s,r}.
inline Coords lift2(i64 r, i64 s, const conic::Solution& X) {
  return {r * X.X2, s * X.X1, r * X.X1, s * X.X2, X.X3};
}

// Below this box size a plain scan beats the parametrization.
inline constexpr i64 kScanThreshold = 24;

template <class Visit>
void fiber_points(i64 r, i64 s, conic::Box box, Visit&& visit) {
  const i64 D = r * r - s * s;
  if (D == 0 || box.b <= kScanThreshold)
    conic::scan_box(r, s, box, visit);
  else
    conic::enumerate(r, s, box, visit);
}

inline FiberKey normalized_key(const FiberKey& key) {
  ProjectivePair p = surface::reduce_pair(key.r, key.s);
  if (p.first != key.r || p.second != key.s) throw BadInput("fiber key is not normalized");
  return {p.first, p.second};
}

// Normalized keys with max(|r|, |s|) = m.
template <class Visit>
void keys_of_norm(i64 m, Visit&& visit) {
  if (m == 1) {
    for (FiberKey k : {FiberKey{0, 1}, FiberKey{1, 0}, FiberKey{1, 1}, FiberKey{1, -1}}) visit(k);
    return;
  }
  for (i64 t = 1; t < m; ++t) {
    if (detail::gcd64(t, m) != 1) continue;
    visit(FiberKey{m, t});
    visit(FiberKey{m, -t});
    visit(FiberKey{t, m});
    visit(FiberKey{t, -m});
  }
}

}  // namespace detail_count

/// Number of U-points of height <= B in the fiber key of the first projection.
/// Box scan below a threshold, conic parametrization above it.
inline i64 count_fiber(const FiberKey& key, i64 B, LineFilter filter = off_lines) {
  using namespace detail_count;
  normalized_key(key);
  if (B < 1) throw BadInput("count_fiber: B must be >= 1");
  const i64 b = B / key.norm();
  if (b == 0) return 0;
  i64 n = 0;
  fiber_points(key.r, key.s, conic::Box{b, B}, [&](const conic::Solution& X) {
    if (filter(lift1(key.r, key.s, X))) ++n;
  });
  return n;
}

/// Same count by box scan only; reference route.
inline i64 count_fiber_box(const FiberKey& key, i64 B, LineFilter filter = off_lines) {
  using namespace detail_count;
  normalized_key(key);
  if (B < 1) throw BadInput("count_fiber_box: B must be >= 1");
  const i64 b = B / key.norm();
  i64 n = 0;
  conic::scan_box(key.r, key.s, conic::Box{b, B}, [&](const conic::Solution& X) {
    if (filter(lift1(key.r, key.s, X))) ++n;
  });
  return n;
}

/// Canonical U-points of height <= B in one fiber, unsorted.
inline void collect_fiber(const FiberKey& key, i64 B, std::vector<Coords>& out, LineFilter filter = off_lines) {
  using namespace detail_count;
  const i64 b = B / key.norm();
  if (b == 0) return;
  fiber_points(key.r, key.s, conic::Box{b, B}, [&](const conic::Solution& X) {
    Coords x = lift1(key.r, key.s, X);
    if (filter(x)) out.push_back(surface::canonical(x));
  });
}

/// Sum of count_fiber over every normalized key with max(|r|, |s|) <= B.
inline CountRecord fiber_count(i64 B, const CountOptions& opt = {}) {
  using namespace detail_count;
  check_bound(B, opt.fiber_ceiling, "fiber_count");
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<i64> per_norm(static_cast<std::size_t>(B) + 1, 0);
  detail::parallel_for(static_cast<std::size_t>(B), opt.workers, [&](std::size_t i) {
    const i64 m = static_cast<i64>(i) + 1;
    i64 n = 0;
    keys_of_norm(m, [&](FiberKey k) { n += count_fiber(k, B, opt.filter); });
    per_norm[i] = n;
  });
  CountRecord rec{B, Method::fiber, 0, 0};
  for (i64 c : per_norm) rec.count += c;
  rec.seconds = seconds_since(t0);
  return rec;
}

/// Canonical U-points of height <= B gathered fiber by fiber, sorted.
inline std::vector<Coords> fiber_point_set(i64 B, const CountOptions& opt = {}) {
  using namespace detail_count;
  check_bound(B, opt.fiber_ceiling, "fiber_point_set");
  std::vector<Coords> pts;
  for (i64 m = 1; m <= B; ++m) keys_of_norm(m, [&](FiberKey k) { collect_fiber(k, B, pts, opt.filter); });
  std::sort(pts.begin(), pts.end());
  return pts;
}

/// Count over fibers of norm <= sqrt(B) of both projections. Equal to
/// fiber_count(B); cost grows roughly like the answer instead of B^2.
///
/// Shortcuts, each checked against fiber_count in the tests:
///   * fibers with r^2 = s^2 hold line points only and are skipped;
///   * (x1,x2,x3,x4,x5) -> (x1,-x2,-x3,x4,x5) maps the first-projection fiber
///     (r, s) onto (r, -s), and (x1,x2,-x3,-x4,x5) does the same for the
///     second projection, so only s > 0 is visited and doubled;
///   * the first-projection fiber (m, t) and the second-projection fiber
///     (t, m) lie on the same conic Q_{m,t}, which is enumerated once.
inline CountRecord split_count(i64 B, const CountOptions& opt = {}) {
  using namespace detail_count;
  check_bound(B, opt.fiber_ceiling, "split_count");
  const auto t0 = std::chrono::steady_clock::now();
  const i64 root = static_cast<i64>(detail::isqrt(static_cast<u64>(B)));
  const LineFilter filter = opt.filter;
  // Points of Q_{R,S} counted for fiber (R, S) of f1 and fiber (S, R) of f2.
  auto conic_pair = [&](i64 R, i64 S, conic::Box box) {
    i64 n = 0;
    fiber_points(R, S, box, [&](const conic::Solution& X) {
      if (filter(lift1(R, S, X))) ++n;
      Coords x = lift2(S, R, X);
      if (surface::project(1, x).norm() > root && filter(x)) ++n;
    });
    return n;
  };
  std::vector<i64> partial(static_cast<std::size_t>(root), 0);
  detail::parallel_for(partial.size(), opt.workers, [&](std::size_t task) {
    const i64 m = static_cast<i64>(task) + 1;
    const conic::Box box{B / m, B};
    i64 n = 0;
    if (m == 1) {
      n = conic_pair(1, 0, box) + conic_pair(0, 1, box);
    } else {
      for (i64 t = 1; t < m; ++t)
        if (detail::gcd64(t, m) == 1) n += 2 * (conic_pair(m, t, box) + conic_pair(t, m, box));
    }
    partial[task] = n;
  });
  CountRecord rec{B, Method::split, 0, 0};
  for (i64 c : partial) rec.count += c;
  rec.seconds = seconds_since(t0);
  return rec;
}

/// Dispatch by method; brute and fiber are the literal definitions.
inline CountRecord count(i64 B, Method method, const CountOptions& opt = {}) {
  switch (method) {
    case Method::brute: return brute_enumerate(B, false, nullptr, opt);
    case Method::fiber: return fiber_count(B, opt);
    case Method::split: return split_count(B, opt);
  }
  throw BadInput("unknown method");
}

struct ReconcileRow {
  i64 bound;
  CountRecord brute, fiber;
};

/// Brute and fiber counts for each B (ascending). The fiber side uses
/// fiber_filter, so a faulty filter can be injected. Throws MismatchError at
/// the smallest disagreeing B.
inline std::vector<ReconcileRow> reconcile(std::vector<i64> bounds, const CountOptions& opt = {},
                                           LineFilter fiber_filter = off_lines) {
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  for (i64 B : bounds) detail_count::check_bound(B, opt.brute_ceiling, "reconcile");
  std::vector<ReconcileRow> rows;
  CountOptions fopt = opt;
  fopt.filter = fiber_filter;
  for (i64 B : bounds) {
    CountRecord b = brute_enumerate(B, false, nullptr, opt);
    CountRecord f = fiber_count(B, fopt);
    if (b.count != f.count) {
      std::vector<SurfacePoint> bp;
      brute_enumerate(B, true, &bp, opt);
      std::vector<Coords> bx, fx = fiber_point_set(B, fopt), only_b, only_f;
      for (const auto& p : bp) bx.push_back(p.x);
      std::set_difference(bx.begin(), bx.end(), fx.begin(), fx.end(), std::back_inserter(only_b));
      std::set_difference(fx.begin(), fx.end(), bx.begin(), bx.end(), std::back_inserter(only_f));
      throw MismatchError(B, b.count, f.count, std::move(only_b), std::move(only_f));
    }
    rows.push_back({B, b, f});
  }
  return rows;
}

}  // namespace counting
}  // namespace dp4
