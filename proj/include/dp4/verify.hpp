#pragma once

// Invariant suites run by `dp4 verify`. Each suite records how many cases it
// checked, how many failed, and the first counterexample.

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dp4/arith.hpp"
#include "dp4/counting.hpp"
#include "dp4/lowerbound.hpp"
#include "dp4/quadrics.hpp"
#include "dp4/surface.hpp"

namespace dp4::verify {

struct SuiteReport {
  std::string suite;
  std::string range;
  i64 checked = 0;
  i64 failures = 0;
  std::string first_failure;
  std::string note;
  double seconds = 0;

  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  u64 seed = 1;
  unsigned workers = detail::default_workers();
  /// f' as used by the inversion-identity suite; replaceable to inject faults.
  std::function<Rational(i64)> f_prime = arith::f_prime_closed;
};

namespace detail_verify {

class Tally {
 public:
  explicit Tally(SuiteReport& r) : r_(r) {}

  template <class Describe>
  bool check(bool ok, Describe&& describe) {
    ++r_.checked;
    if (!ok) {
      if (r_.failures == 0) r_.first_failure = describe();
      ++r_.failures;
    }
    return ok;
  }

 private:
  SuiteReport& r_;
};

inline std::string pt(const Coords& x) { return "(" + surface::format_point(x) + ")"; }

inline std::vector<SurfacePoint> brute_points(i64 B, unsigned workers) {
  std::vector<SurfacePoint> pts;
  CountOptions opt;
  opt.workers = workers;
  counting::brute_enumerate(B, true, &pts, opt);
  return pts;
}

// Does x match the k-th rational line pattern (k = 1..8)?
inline bool matches_pattern(int k, const Coords& x) {
  const auto [x1, x2, x3, x4, x5] = x;
  switch (k) {
    case 1: return x3 == x1 && x4 == x2 && x5 == x1;
    case 2: return x3 == x1 && x4 == x2 && x5 == -x1;
    case 3: return x3 == -x1 && x4 == -x2 && x5 == x1;
    case 4: return x3 == -x1 && x4 == -x2 && x5 == -x1;
    case 5: return x3 == x2 && x4 == x1 && x5 == x2;
    case 6: return x3 == x2 && x4 == x1 && x5 == -x2;
    case 7: return x3 == -x2 && x4 == -x1 && x5 == x2;
    case 8: return x3 == -x2 && x4 == -x1 && x5 == -x2;
    default: return false;
  }
}

inline Coords line_point(int k, i64 a, i64 b) {
  switch (k) {
    case 1: return {a, b, a, b, a};
    case 2: return {a, b, a, b, -a};
    case 3: return {a, b, -a, -b, a};
    case 4: return {a, b, -a, -b, -a};
    case 5: return {a, b, b, a, b};
    case 6: return {a, b, b, a, -b};
    case 7: return {a, b, -b, -a, b};
    default: return {a, b, -b, -a, -b};
  }
}

struct Gauss {
  i64 re = 0, im = 0;
};

inline Gauss gmul(Gauss a, Gauss b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

// The 16 lines as [a, b, u a + v b, u' a + v' b, w a + w' b] with Gaussian
// coefficients; k = 1..16.
inline std::array<Gauss, 5> line_vector(int k, Gauss a, Gauss b) {
  const Gauss I{0, 1}, mI{0, -1};
  auto neg = [](Gauss z) { return Gauss{-z.re, -z.im}; };
  switch (k) {
    case 1: return {a, b, a, b, a};
    case 2: return {a, b, a, b, neg(a)};
    case 3: return {a, b, neg(a), neg(b), a};
    case 4: return {a, b, neg(a), neg(b), neg(a)};
    case 5: return {a, b, b, a, b};
    case 6: return {a, b, b, a, neg(b)};
    case 7: return {a, b, neg(b), neg(a), b};
    case 8: return {a, b, neg(b), neg(a), neg(b)};
    case 9: return {a, b, gmul(I, a), gmul(mI, b), b};
    case 10: return {a, b, gmul(I, a), gmul(mI, b), neg(b)};
    case 11: return {a, b, gmul(mI, a), gmul(I, b), b};
    case 12: return {a, b, gmul(mI, a), gmul(I, b), neg(b)};
    case 13: return {a, b, gmul(mI, b), gmul(I, a), a};
    case 14: return {a, b, gmul(mI, b), gmul(I, a), neg(a)};
    case 15: return {a, b, gmul(I, b), gmul(mI, a), a};
    default: return {a, b, gmul(I, b), gmul(mI, a), neg(a)};
  }
}

// A nonzero vector over Z[i] is a multiple of a rational vector iff
// v_j * conj(v_0) is real for every j, v_0 its first nonzero entry.
inline bool is_rational_point(const std::array<Gauss, 5>& v) {
  const Gauss* z = nullptr;
  for (const Gauss& c : v)
    if (c.re != 0 || c.im != 0) {
      z = &c;
      break;
    }
  if (z == nullptr) return false;
  for (const Gauss& c : v)
    if (static_cast<i128>(c.im) * z->re - static_cast<i128>(c.re) * z->im != 0) return false;
  return true;
}

template <class Fn>
SuiteReport run(const std::string& name, const std::string& range, Fn&& body) {
  SuiteReport r;
  r.suite = name;
  r.range = range;
  const auto t0 = std::chrono::steady_clock::now();
  Tally t(r);
  try {
    body(t, r);
  } catch (const std::exception& e) {
    t.check(false, [&] { return std::string("exception: ") + e.what(); });
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace detail_verify

using detail_verify::Tally;

// ------------------------------------------------------------ surface

inline SuiteReport height_lemma(i64 B, const VerifyOptions& opt) {
  return detail_verify::run("height-lemma", "B<=" + std::to_string(B), [&](Tally& t, SuiteReport& r) {
    i64 equal = 0;
    for (const SurfacePoint& p : detail_verify::brute_points(B, opt.workers)) {
      const i64 prod = surface::project(1, p).norm() * surface::project(2, p).norm();
      t.check(prod <= p.height, [&] { return detail_verify::pt(p.x) + ": product " + std::to_string(prod); });
      if (prod == p.height) ++equal;
    }
    t.check(equal > 0, [] { return std::string("no equality case found"); });
    r.note = std::to_string(equal) + " equality cases";
  });
}

inline SuiteReport normalize_classes(i64 B, const VerifyOptions& opt) {
  return detail_verify::run("normalize", "B<=" + std::to_string(B), [&](Tally& t, SuiteReport&) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<i64> scale(2, 50);
    for (const SurfacePoint& p : detail_verify::brute_points(B, opt.workers)) {
      Coords neg, mult;
      const i64 k = scale(rng) * ((rng() & 1U) ? 1 : -1);
      for (std::size_t i = 0; i < 5; ++i) neg[i] = -p.x[i], mult[i] = k * p.x[i];
      t.check(surface::normalize_primitive(p.x).x == p.x, [&] { return detail_verify::pt(p.x) + " not fixed"; });
      t.check(surface::normalize_primitive(neg).x == p.x, [&] { return detail_verify::pt(neg) + " sign class"; });
      t.check(surface::normalize_primitive(mult).x == p.x, [&] { return detail_verify::pt(mult) + " scalar class"; });
    }
  });
}

inline SuiteReport line_patterns(i64 range, const VerifyOptions&) {
  return detail_verify::run("line-patterns", "|a|,|b|<=" + std::to_string(range), [&](Tally& t, SuiteReport&) {
    for (int k = 1; k <= 8; ++k)
      for (i64 a = -range; a <= range; ++a)
        for (i64 b = -range; b <= range; ++b) {
          if (detail::gcd64(a, b) != 1) continue;
          const Coords x = surface::canonical(detail_verify::line_point(k, a, b));
          const auto id = surface::line_id(x);
          int first = 0;
          for (int j = 1; j <= 8 && first == 0; ++j)
            if (detail_verify::matches_pattern(j, x)) first = j;
          t.check(surface::is_on_surface(x) && id.has_value() && static_cast<int>(*id) == first,
                  [&] { return "L" + std::to_string(k) + " " + detail_verify::pt(x); });
        }
  });
}

/// L9..L16 carry no rational point. A rational point has x1 : x2 rational,
/// so after scaling a and b are integers; the scan then checks every entry.
/// A smaller scan over Gaussian a, b does without that reduction, and the
/// rational lines serve as a positive control for the checker.
inline SuiteReport complex_lines(i64 range, i64 gauss_range, const VerifyOptions&) {
  using detail_verify::Gauss;
  return detail_verify::run(
      "complex-lines", "|a|,|b|<=" + std::to_string(range) + "; Gaussian parts<=" + std::to_string(gauss_range),
      [&](Tally& t, SuiteReport& r) {
        i64 found = 0, controls = 0;
        for (int k = 1; k <= 16; ++k)
          for (i64 a = -range; a <= range; ++a)
            for (i64 b = -range; b <= range; ++b) {
              if (a == 0 && b == 0) continue;
              if (k <= 8 && (detail::abs64(a) > 20 || detail::abs64(b) > 20)) continue;
              const bool rational = detail_verify::is_rational_point(detail_verify::line_vector(k, {a, 0}, {b, 0}));
              if (k <= 8) {
                ++controls;
                t.check(rational, [&] { return "control L" + std::to_string(k) + " rejected"; });
              } else if (t.check(!rational, [&] {
                           return "L" + std::to_string(k) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
                         }) == false) {
                ++found;
              }
            }
        const i64 g = gauss_range;
        for (int k = 9; k <= 16; ++k)
          for (i64 ar = -g; ar <= g; ++ar)
            for (i64 ai = -g; ai <= g; ++ai)
              for (i64 br = -g; br <= g; ++br)
                for (i64 bi = -g; bi <= g; ++bi) {
                  if (ar == 0 && ai == 0 && br == 0 && bi == 0) continue;
                  const bool rational = detail_verify::is_rational_point(detail_verify::line_vector(k, {ar, ai}, {br, bi}));
                  if (!t.check(!rational, [&] { return "L" + std::to_string(k) + " Gaussian point"; })) ++found;
                }
        r.note = std::to_string(found) + " rational points on L9-L16, " + std::to_string(controls) + " controls";
      });
}

// ----------------------------------------------------------- counting

inline SuiteReport partition(i64 Bmax, const VerifyOptions& opt) {
  return detail_verify::run("partition", "B<=" + std::to_string(Bmax), [&](Tally& t, SuiteReport&) {
    CountOptions copt;
    copt.workers = opt.workers;
    for (i64 B = 1; B <= Bmax; ++B) {
      const i64 brute = counting::brute_enumerate(B, false, nullptr, copt).count;
      const i64 fiber = counting::fiber_count(B, copt).count;
      const i64 split = counting::split_count(B, copt).count;
      t.check(brute == fiber && fiber == split, [&] {
        return "B=" + std::to_string(B) + " brute " + std::to_string(brute) + " fiber " + std::to_string(fiber) +
               " split " + std::to_string(split);
      });
    }
    std::map<FiberKey, i64> per_key;
    for (const SurfacePoint& p : detail_verify::brute_points(Bmax, opt.workers)) {
      const auto [key, X] = counting::fiber_of(p);
      ++per_key[key];
      const i64 m = key.norm(), h = p.height;
      t.check(surface::reduce_pair(key.r, key.s) == ProjectivePair{key.r, key.s},
              [&] { return detail_verify::pt(p.x) + " key not normalized"; });
      t.check(counting::lift_to_surface(key, X).x == p.x, [&] { return detail_verify::pt(p.x) + " lift"; });
      t.check(detail::gcd64(detail::gcd64(X.X1, X.X2), X.X3) == 1, [&] { return detail_verify::pt(p.x) + " primitivity"; });
      for (i64 Bt : {h - 1, h}) {
        const bool in_box = detail::abs64(X.X1) <= Bt / m && detail::abs64(X.X2) <= Bt / m && detail::abs64(X.X3) <= Bt;
        t.check(in_box == (h <= Bt), [&] { return detail_verify::pt(p.x) + " box at B=" + std::to_string(Bt); });
      }
      t.check(conic::q_value(key.r, key.s, X.X1, X.X2, -X.X3) == 0, [&] { return detail_verify::pt(p.x) + " X3 parity"; });
    }
    for (const auto& [key, n] : per_key)
      t.check(counting::count_fiber(key, Bmax) == n, [&] {
        return "fiber (" + std::to_string(key.r) + "," + std::to_string(key.s) + ") count";
      });
  });
}

inline SuiteReport determinism(i64 B, const VerifyOptions&) {
  return detail_verify::run("determinism", "B=" + std::to_string(B), [&](Tally& t, SuiteReport&) {
    std::vector<i64> counts;
    for (unsigned w : {1U, 2U, 5U}) {
      CountOptions o;
      o.workers = w;
      counts.push_back(counting::fiber_count(B, o).count);
      counts.push_back(counting::split_count(B, o).count);
    }
    for (i64 c : counts) t.check(c == counts.front(), [&] { return "worker-dependent count " + std::to_string(c); });
  });
}

// --------------------------------------------------------- lowerbound

inline SuiteReport content_lemma(const VerifyOptions&) {
  return detail_verify::run("content-lemma", "r,s<=20, 1<=x<=60, |y|<=40", [&](Tally& t, SuiteReport&) {
    for (i64 r = 1; r <= 20; ++r)
      for (i64 s = 2; s <= 20; s += 2) {
        if (detail::gcd64(r, s) != 1) continue;
        for (i64 x = 1; x <= 60; ++x)
          for (i64 y = -40; y <= 40; ++y) {
            const ParamInput in{r, s, x, y};
            if (!lowerbound::admissible(in)) continue;
            t.check(lowerbound::content_lemma_check(in), [&] {
              return "(r,s,x,y)=(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(x) + "," +
                     std::to_string(y) + ")";
            });
          }
      }
  });
}

/// Distinct admissible (x, y) in a fiber give distinct points of V.
inline SuiteReport fiber_distinctness(const VerifyOptions&) {
  return detail_verify::run("fiber-distinctness", "r,s<=20, 1<=x<=60, |y|<=40", [&](Tally& t, SuiteReport&) {
    for (i64 r = 1; r <= 20; ++r)
      for (i64 s = 2; s <= 20; s += 2) {
        if (detail::gcd64(r, s) != 1) continue;
        std::set<Coords> seen;
        for (i64 x = 1; x <= 60; ++x)
          for (i64 y = -40; y <= 40; ++y) {
            const ParamInput in{r, s, x, y};
            if (!lowerbound::admissible(in)) continue;
            const FormTriple f = lowerbound::forms_eval(in);
            const Coords raw{r * f.f1, s * f.f2, s * f.f1, r * f.f2, f.f3};
            const Coords c = surface::normalize_primitive(raw).x;
            t.check(seen.insert(c).second, [&] {
              return "collision in fiber (" + std::to_string(r) + "," + std::to_string(s) + ") at " + detail_verify::pt(c);
            });
          }
      }
  });
}

inline SuiteReport q_vanishing(i64 samples, const VerifyOptions& opt) {
  return detail_verify::run("q-vanishing", std::to_string(samples) + " samples, r,s<=1000", [&](Tally& t, SuiteReport&) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<i64> rs(1, 1000), xy(-1000, 1000);
    for (i64 done = 0; done < samples;) {
      const ParamInput in{rs(rng), 2 * ((rs(rng) + 1) / 2), xy(rng), xy(rng)};
      if (!lowerbound::admissible(in)) continue;
      ++done;
      const FormTriple f = lowerbound::forms_eval(in);
      t.check(lowerbound::q_rs(in.r, in.s)(f.f1, f.f2, f.f3) == 0, [&] {
        return "(r,s,x,y)=(" + std::to_string(in.r) + "," + std::to_string(in.s) + "," + std::to_string(in.x) + "," +
               std::to_string(in.y) + ")";
      });
    }
  });
}

inline SuiteReport generator_subset(i64 B, double eta, const VerifyOptions& opt) {
  return detail_verify::run("generator", "B=" + std::to_string(B) + ", eta=" + std::to_string(eta),
                            [&](Tally& t, SuiteReport& r) {
                              const auto gen = lowerbound::generate_points(B, eta);
                              std::set<Coords> u;
                              for (const auto& p : detail_verify::brute_points(B, opt.workers)) u.insert(p.x);
                              std::set<Coords> seen;
                              for (const auto& g : gen) {
                                const Coords& x = g.point.x;
                                t.check(surface::is_on_surface(x) && surface::is_canonical(x) &&
                                            !surface::line_id(x).has_value() && surface::height(x) <= B,
                                        [&] { return detail_verify::pt(x) + " invalid"; });
                                t.check(seen.insert(x).second, [&] { return detail_verify::pt(x) + " repeated"; });
                                t.check(u.count(x) == 1, [&] { return detail_verify::pt(x) + " not in U-set"; });
                              }
                              t.check(!gen.empty(), [] { return std::string("no points generated"); });
                              r.note = std::to_string(gen.size()) + " points";
                            });
}

// ----------------------------------------------------------- quadrics

inline SuiteReport quadric_invariants(i64 samples, const VerifyOptions& opt) {
  return detail_verify::run("quadric-invariants", std::to_string(samples) + " random forms", [&](Tally& t, SuiteReport&) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<i64> coef(-60, 60), box(1, 12);
    for (i64 i = 0; i < samples; ++i) {
      TernaryQuadric q{{coef(rng), coef(rng), coef(rng)}};
      if (q.diag[0] == 0 || q.diag[1] == 0 || q.diag[2] == 0) continue;
      // Full matrix and all nine 2x2 minors.
      i128 M[3][3] = {{q.diag[0], 0, 0}, {0, q.diag[1], 0}, {0, 0, q.diag[2]}};
      i128 g = 0;
      for (int r1 = 0; r1 < 3; ++r1)
        for (int r2 = r1 + 1; r2 < 3; ++r2)
          for (int c1 = 0; c1 < 3; ++c1)
            for (int c2 = c1 + 1; c2 < 3; ++c2) g = detail::gcd128(g, M[r1][c1] * M[r2][c2] - M[r1][c2] * M[r2][c1]);
      const i128 det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                       M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
      const QuadricInvariants inv = quadrics::invariants(q);
      const auto desc = [&] {
        return "diag(" + std::to_string(q.diag[0]) + "," + std::to_string(q.diag[1]) + "," + std::to_string(q.diag[2]) + ")";
      };
      t.check(inv.delta == detail::abs128(det) && inv.delta0 == g, desc);
      const i64 n = quadrics::count_box(q, box(rng), box(rng), box(rng));
      t.check(n % 2 == 0, [&] { return desc() + " odd count"; });
    }
  });
}

inline SuiteReport hb_survey(i64 B, i64 rmax, const VerifyOptions& opt) {
  return detail_verify::run("hb-survey", "B=" + std::to_string(B) + ", max(|r|,|s|)<=" + std::to_string(rmax),
                            [&](Tally& t, SuiteReport& r) {
                              const auto rep = quadrics::hb_ratio_survey(B, rmax, opt.workers);
                              for (const auto& row : rep.rows)
                                t.check(row.count % 2 == 0, [&] {
                                  return "fiber (" + std::to_string(row.r) + "," + std::to_string(row.s) + ") odd count";
                                });
                              t.check(rep.bounded, [&] {
                                return "max ratio " + std::to_string(rep.max_second_half) + " vs " +
                                       std::to_string(rep.max_first_half);
                              });
                              std::ostringstream os;
                              os << rep.rows.size() << " fibers, max ratio first half " << rep.max_first_half
                                 << ", second half " << rep.max_second_half;
                              r.note = os.str();
                            });
}

// -------------------------------------------------------------- arith

/// sum_{m | n} f'(m) = d(n) f(n)^2 with f' supplied by the options.
inline SuiteReport inversion_identity(i64 N, const VerifyOptions& opt) {
  return detail_verify::run("f-prime-inversion", "n<=" + std::to_string(N), [&](Tally& t, SuiteReport&) {
    std::vector<Rational> fp(static_cast<std::size_t>(N) + 1);
    for (i64 n = 1; n <= N; ++n) fp[static_cast<std::size_t>(n)] = opt.f_prime(n);
    for (i64 n = 1; n <= N; ++n) {
      Rational lhs = 0;
      for (i64 m : arith::divisors(n)) lhs += fp[static_cast<std::size_t>(m)];
      const Rational f = arith::f_density(n);
      const Rational rhs = Rational(arith::divisor_count(n)) * f * f;
      if (!t.check(lhs == rhs, [&] { return "n=" + std::to_string(n) + ": " + lhs.get_str() + " != " + rhs.get_str(); }))
        break;
    }
  });
}

inline SuiteReport f_prime_local(i64 P, int E, const VerifyOptions&) {
  return detail_verify::run("f-prime-local", "p<=" + std::to_string(P) + ", e<=" + std::to_string(E),
                            [&](Tally& t, SuiteReport&) {
                              for (i64 p : arith::primes_up_to(P)) {
                                i64 pe = 1;
                                for (int e = 1; e <= E; ++e) {
                                  pe *= p;
                                  t.check(arith::f_prime(pe) == arith::f_prime_local(p, e),
                                          [&] { return "p=" + std::to_string(p) + " e=" + std::to_string(e); });
                                }
                              }
                            });
}

inline SuiteReport sieve_multiplicative(i64 N, i64 pairs, const VerifyOptions& opt) {
  return detail_verify::run("sieve", "N=" + std::to_string(N) + ", " + std::to_string(pairs) + " pairs",
                            [&](Tally& t, SuiteReport&) {
                              std::mt19937_64 rng(opt.seed);
                              for (SieveKind kind : {SieveKind::mobius, SieveKind::phi, SieveKind::divisor}) {
                                const FnTable tab = arith::sieve(kind, N);
                                std::uniform_int_distribution<i64> pick(1, 1000);
                                for (i64 done = 0; done < pairs;) {
                                  const i64 m = pick(rng), n = pick(rng);
                                  if (m * n > N || detail::gcd64(m, n) != 1) continue;
                                  ++done;
                                  t.check(tab(m * n) == tab(m) * tab(n),
                                          [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); });
                                }
                                for (i64 n = 1; n <= std::min<i64>(N, 2000); ++n) {
                                  i64 expect = 0;
                                  switch (kind) {
                                    case SieveKind::mobius: expect = arith::mobius(n); break;
                                    case SieveKind::phi: expect = arith::coprime_count(n, n); break;
                                    case SieveKind::divisor: expect = arith::divisor_count(n); break;
                                  }
                                  t.check(tab(n) == expect, [&] { return "table value at n=" + std::to_string(n); });
                                }
                              }
                            });
}

inline SuiteReport F_table(i64 P, i64 pairs, const VerifyOptions& opt) {
  return detail_verify::run("F-table", "p<=" + std::to_string(P) + ", " + std::to_string(pairs) + " coprime pairs",
                            [&](Tally& t, SuiteReport&) {
                              for (i64 p : arith::primes_up_to(P))
                                t.check(arith::F_count(p) == arith::F_prime_table(p), [&] { return "p=" + std::to_string(p); });
                              std::mt19937_64 rng(opt.seed);
                              std::uniform_int_distribution<i64> pick(1, 1000000);
                              for (i64 done = 0; done < pairs;) {
                                const i64 m = pick(rng), n = pick(rng);
                                if (detail::gcd64(m, n) != 1) continue;
                                ++done;
                                t.check(arith::F_count(m * n) == arith::F_count(m) * arith::F_count(n),
                                        [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); });
                              }
                            });
}

inline const std::vector<std::pair<std::string, PolySpec>>& rho_family() {
  static const std::vector<std::pair<std::string, PolySpec>> fam{
      {"x^2+1", PolySpec{1, 0, 1}}, {"x+1", PolySpec{1, 1}}, {"x-1", PolySpec{-1, 1}}, {"x^4-1", PolySpec{-1, 0, 0, 0, 1}}};
  return fam;
}

/// Parts (a)-(d): rho(p) <= g, rho(p^e) <= g p^(e-1), rho(p^e) = rho(p) when
/// p does not divide Disc, rho(p^e) <= 2 g^3 p^(e(1-1/g)).
inline SuiteReport rho_properties(i64 P, int E, const VerifyOptions&) {
  return detail_verify::run("rho-properties", "p<=" + std::to_string(P) + ", e<=" + std::to_string(E),
                            [&](Tally& t, SuiteReport&) {
                              for (const auto& [name, f] : rho_family()) {
                                const int g = f.degree();
                                const mpz_class disc = arith::discriminant(f);
                                for (i64 p : arith::primes_up_to(P)) {
                                  const i64 r1 = arith::rho_poly(f, p);
                                  i64 pe = 1;
                                  for (int e = 1; e <= E; ++e) {
                                    pe *= p;
                                    const i64 re = arith::rho_poly(f, pe);
                                    const auto at = [&, e = e] { return name + " p=" + std::to_string(p) + " e=" + std::to_string(e); };
                                    t.check(r1 <= g, at);
                                    t.check(re <= g * (pe / p), at);
                                    if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p)) == 0)
                                      t.check(re == r1, at);
                                    const long double bound =
                                        2.0L * g * g * g * std::pow(static_cast<long double>(p), e * (1.0L - 1.0L / g));
                                    t.check(static_cast<long double>(re) <= bound, at);
                                  }
                                }
                              }
                            });
}

inline SuiteReport hensel_vs_scan(i64 M, const VerifyOptions&) {
  return detail_verify::run("hensel-vs-scan", "m<=" + std::to_string(M), [&](Tally& t, SuiteReport&) {
    for (const auto& [name, f] : rho_family())
      for (i64 m = 1; m <= M; ++m)
        t.check(arith::rho_lifted(f, m) == arith::rho_brute(f, m) && arith::rho_poly(f, m) == arith::rho_brute(f, m),
                [&, &name = name] { return name + " m=" + std::to_string(m); });
  });
}

inline SuiteReport rosser_schoenfeld(i64 N, const VerifyOptions&) {
  return detail_verify::run("rosser-schoenfeld", "67<=n<=" + std::to_string(N), [&](Tally& t, SuiteReport& r) {
    const auto bad = arith::rosser_schoenfeld_violation(67, N);
    t.check(!bad.has_value(), [&] { return "n=" + std::to_string(*bad); });
    r.checked = N - 66;
  });
}

inline SuiteReport dedekind(i64 T, double tol, const VerifyOptions& opt) {
  return detail_verify::run("dedekind-landau", "t=" + std::to_string(T), [&](Tally& t, SuiteReport& r) {
    const double ratio = arith::dedekind_ratio({PolySpec{1, 0, 1}, PolySpec{1, 1}, PolySpec{1, -1}}, T, opt.workers);
    t.check(std::fabs(ratio - 3) <= tol, [&] { return "ratio " + std::to_string(ratio); });
    const double linear = arith::dedekind_ratio({PolySpec{1, 1}}, T, opt.workers);
    t.check(std::fabs(linear - 1) <= 0.1, [&] { return "linear ratio " + std::to_string(linear); });
    r.note = "ratio " + std::to_string(ratio);
  });
}

inline SuiteReport phi_average(i64 N, const VerifyOptions&) {
  return detail_verify::run("phi-average", "N=" + std::to_string(N), [&](Tally& t, SuiteReport& r) {
    const auto s = arith::phi_sum_check(N);
    t.check(s.rel_error < 1e-3, [&] { return "relative error " + std::to_string(s.rel_error); });
    t.check(arith::coprime_count(100, 6) == 33, [] { return std::string("coprime_count(100,6)"); });
    r.note = "relative error " + std::to_string(s.rel_error);
  });
}

inline SuiteReport dirichlet_growth(i64 M1, i64 M2, const VerifyOptions&) {
  return detail_verify::run("dirichlet", "M=" + std::to_string(M1) + ".." + std::to_string(M2), [&](Tally& t, SuiteReport& r) {
    const double a = arith::dirichlet_partial(M1).ratio_log3, b = arith::dirichlet_partial(M2).ratio_log3;
    const double factor = std::max(a, b) / std::min(a, b);
    t.check(factor < 3, [&] { return "ratio factor " + std::to_string(factor); });
    r.note = "ratio factor " + std::to_string(factor);
  });
}

inline SuiteReport nair(const VerifyOptions&) {
  return detail_verify::run("nair", "f=1-x^4, (1,1000] and (1000,2000]", [&](Tally& t, SuiteReport& r) {
    const PolySpec f{1, 0, 0, 0, -1};
    const auto a = arith::nair_experiment(f, 1, 1000), b = arith::nair_experiment(f, 1000, 2000);
    const double factor = std::max(a.ratio, b.ratio) / std::min(a.ratio, b.ratio);
    t.check(std::isfinite(a.ratio) && std::isfinite(b.ratio) && factor < 4,
            [&] { return "ratio factor " + std::to_string(factor); });
    r.note = "ratios " + std::to_string(a.ratio) + ", " + std::to_string(b.ratio);
  });
}

// -------------------------------------------------------------- runner

struct Suite {
  std::string name;
  std::function<SuiteReport(const VerifyOptions&)> run;
};

inline std::vector<Suite> default_suites() {
  return {
      {"height-lemma", [](const VerifyOptions& o) { return height_lemma(500, o); }},
      {"normalize", [](const VerifyOptions& o) { return normalize_classes(200, o); }},
      {"line-patterns", [](const VerifyOptions& o) { return line_patterns(50, o); }},
      {"complex-lines", [](const VerifyOptions& o) { return complex_lines(1000, 10, o); }},
      {"partition", [](const VerifyOptions& o) { return partition(200, o); }},
      {"determinism", [](const VerifyOptions& o) { return determinism(300, o); }},
      {"content-lemma", [](const VerifyOptions& o) { return content_lemma(o); }},
      {"fiber-distinctness", [](const VerifyOptions& o) { return fiber_distinctness(o); }},
      {"q-vanishing", [](const VerifyOptions& o) { return q_vanishing(10000, o); }},
      {"generator", [](const VerifyOptions& o) { return generator_subset(2000, 0.25, o); }},
      {"quadric-invariants", [](const VerifyOptions& o) { return quadric_invariants(500, o); }},
      {"hb-survey", [](const VerifyOptions& o) { return hb_survey(10000, 50, o); }},
      {"f-prime-inversion", [](const VerifyOptions& o) { return inversion_identity(10000, o); }},
      {"f-prime-local", [](const VerifyOptions& o) { return f_prime_local(100, 6, o); }},
      {"sieve", [](const VerifyOptions& o) { return sieve_multiplicative(1000000, 200, o); }},
      {"F-table", [](const VerifyOptions& o) { return F_table(10000, 500, o); }},
      {"rho-properties", [](const VerifyOptions& o) { return rho_properties(500, 6, o); }},
      {"hensel-vs-scan", [](const VerifyOptions& o) { return hensel_vs_scan(10000, o); }},
      {"rosser-schoenfeld", [](const VerifyOptions& o) { return rosser_schoenfeld(1000000, o); }},
      {"dedekind-landau", [](const VerifyOptions& o) { return dedekind(1000000, 0.3, o); }},
      {"phi-average", [](const VerifyOptions& o) { return phi_average(100000, o); }},
      {"dirichlet", [](const VerifyOptions& o) { return dirichlet_growth(1000, 1000000, o); }},
      {"nair", [](const VerifyOptions& o) { return nair(o); }},
  };
}

}  // namespace dp4::verify
