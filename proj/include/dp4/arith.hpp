#pragma once

// Arithmetic functions and polynomial congruences: sieves for mu, phi and d,
// the densities f and f', root counts rho_f(m), the quartic count F(m), and
// the finite-range experiments built on them.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dp4/detail/intmath.hpp"
#include "dp4/detail/parallel.hpp"
#include "dp4/errors.hpp"

namespace dp4 {

using Rational = mpq_class;

enum class SieveKind { mobius, phi, divisor };

struct FnTable {
  i64 limit = 0;
  std::vector<i64> values;  // values[n] for 1 <= n <= limit; values[0] unused

  i64 operator()(i64 n) const {
    if (n < 1 || n > limit) throw BadInput("FnTable: index out of range");
    return values[static_cast<std::size_t>(n)];
  }
};

/// Integer polynomial, coefficients from the constant term up.
struct PolySpec {
  std::vector<i64> coeffs;

  PolySpec() = default;
  PolySpec(std::initializer_list<i64> c) : coeffs(c) { trim(); }
  explicit PolySpec(std::vector<i64> c) : coeffs(std::move(c)) { trim(); }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  i128 operator()(i128 x) const {
    i128 v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
  }
  friend PolySpec operator*(const PolySpec& a, const PolySpec& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    std::vector<i64> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs.size(); ++j)
        c[i + j] = detail::narrow(static_cast<i128>(c[i + j]) + static_cast<i128>(a.coeffs[i]) * b.coeffs[j]);
    return PolySpec(std::move(c));
  }
};

/// Binary form sum_i a[i] r^(d-i) s^i, so f(1, x) = sum_i a[i] x^i,
/// f(1, 0) = a[0] and f(0, 1) = a[d].
struct BinaryForm {
  std::vector<i64> coeffs;

  PolySpec dehomogenized() const { return PolySpec(coeffs); }
  i64 at_1_0() const { return coeffs.empty() ? 0 : coeffs.front(); }
  i64 at_0_1() const { return coeffs.empty() ? 0 : coeffs.back(); }
};

namespace arith {

// ---------------------------------------------------------------- sieves

inline FnTable sieve(SieveKind kind, i64 N) {
  if (N < 1) throw BadInput("sieve: N must be >= 1");
  const auto n = static_cast<std::size_t>(N);
  // Linear sieve keeping the exponent of the smallest prime.
  std::vector<i64> v(n + 1, 0), pk(n + 1, 0);  // pk[m] = p^e for the smallest prime p of m
  std::vector<int> ex(n + 1, 0);
  std::vector<i64> primes;
  v[1] = 1;
  for (std::size_t m = 2; m <= n; ++m) {
    if (pk[m] == 0) {
      primes.push_back(static_cast<i64>(m));
      pk[m] = static_cast<i64>(m);
      ex[m] = 1;
      switch (kind) {
        case SieveKind::mobius: v[m] = -1; break;
        case SieveKind::phi: v[m] = static_cast<i64>(m) - 1; break;
        case SieveKind::divisor: v[m] = 2; break;
      }
    }
    for (i64 p : primes) {
      const std::size_t q = m * static_cast<std::size_t>(p);
      if (q > n) break;
      if (m % static_cast<std::size_t>(p) == 0) {
        pk[q] = pk[m] * p;
        ex[q] = ex[m] + 1;
        const auto rest = static_cast<std::size_t>(static_cast<i64>(m) / pk[m]);
        i64 local = 0;  // value at p^(e+1)
        switch (kind) {
          case SieveKind::mobius: local = 0; break;
          case SieveKind::phi: local = pk[q] - pk[q] / p; break;
          case SieveKind::divisor: local = ex[q] + 1; break;
        }
        v[q] = v[rest] * local;
        break;
      }
      pk[q] = p;
      ex[q] = 1;
      v[q] = v[m] * v[static_cast<std::size_t>(p)];
    }
  }
  return FnTable{N, std::move(v)};
}

/// Primes up to N by the sieve of Eratosthenes.
inline std::vector<i64> primes_up_to(i64 N) {
  std::vector<i64> out;
  if (N < 2) return out;
  std::vector<bool> comp(static_cast<std::size_t>(N) + 1, false);
  for (i64 p = 2; p <= N; ++p) {
    if (comp[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (i64 q = p * p; q <= N; q += p) comp[static_cast<std::size_t>(q)] = true;
  }
  return out;
}

/// pi(n) for 0 <= n <= N.
inline std::vector<i64> prime_pi_table(i64 N) {
  std::vector<i64> pi(static_cast<std::size_t>(std::max<i64>(N, 0)) + 1, 0);
  std::size_t k = 0;
  const auto ps = primes_up_to(N);
  for (i64 n = 0; n <= N; ++n) {
    while (k < ps.size() && ps[k] <= n) ++k;
    pi[static_cast<std::size_t>(n)] = static_cast<i64>(k);
  }
  return pi;
}

struct PrimePower {
  i64 p;
  int e;
};

inline std::vector<PrimePower> factorize(i64 n) {
  if (n < 1) throw BadInput("factorize: n must be >= 1");
  std::vector<PrimePower> f;
  for (i64 p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> d{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t k = d.size();
    i64 pw = 1;
    for (int i = 1; i <= e; ++i) {
      pw *= p;
      for (std::size_t j = 0; j < k; ++j) d.push_back(d[j] * pw);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

inline int mobius(i64 n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

inline i64 divisor_count(i64 n) {
  i64 d = 1;
  for (auto [p, e] : factorize(n)) d *= e + 1;
  return d;
}

// ------------------------------------------------------- f and f'

/// f(n) = prod_{p | n} (1 - 1/p), f(1) = 1.
inline Rational f_density(i64 n) {
  if (n < 1) throw BadInput("f_density: n must be >= 1");
  Rational f = 1;
  for (auto [p, e] : factorize(n)) f *= Rational(p - 1, p);
  f.canonicalize();
  return f;
}

/// f'(n) = sum_{m | n} mu(n/m) d(m) f(m)^2.
inline Rational f_prime(i64 n) {
  if (n < 1) throw BadInput("f_prime: n must be >= 1");
  Rational sum = 0;
  for (i64 m : divisors(n)) {
    const int mu = mobius(n / m);
    if (mu == 0) continue;
    const Rational f = f_density(m);
    sum += Rational(mu * divisor_count(m)) * f * f;
  }
  sum.canonicalize();
  return sum;
}

/// f'(p^e): 2(1 - 1/p)^2 - 1 for e = 1, (1 - 1/p)^2 for e >= 2.
inline Rational f_prime_local(i64 p, int e) {
  const Rational w(p - 1, p);
  Rational v = e == 1 ? Rational(2 * w * w - 1) : Rational(w * w);
  v.canonicalize();
  return v;
}

/// f' through its values at prime powers.
inline Rational f_prime_closed(i64 n) {
  if (n < 1) throw BadInput("f_prime_closed: n must be >= 1");
  Rational v = 1;
  for (auto [p, e] : factorize(n)) v *= f_prime_local(p, e);
  v.canonicalize();
  return v;
}

// ------------------------------------------------ polynomials mod p

namespace detail_poly {

using detail::mulmod;
using Poly = std::vector<u64>;  // low to high, reduced mod p, no trailing zeros

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly reduce(const PolySpec& f, u64 p) {
  Poly a(f.coeffs.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<u64>(detail::mod(f.coeffs[i], p));
  trim(a);
  return a;
}

inline u64 inv(u64 a, u64 p) { return static_cast<u64>(detail::inverse_mod(a, p)); }

/// a mod b, b nonzero.
inline Poly rem(Poly a, const Poly& b, u64 p) {
  const u64 lead = inv(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 q = mulmod(a.back(), lead, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(q, b[i], p)) % p;
    trim(a);
  }
  return a;
}

inline Poly quot(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) return {};
  const u64 lead = inv(b.back(), p);
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const u64 c = mulmod(a[k + b.size() - 1], lead, p);
    q[k] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] = (a[k + i] + p - mulmod(c, b[i], p)) % p;
  }
  trim(q);
  return q;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(c);
  return c;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const u64 l = inv(a.back(), p);
    for (u64& c : a) c = mulmod(c, l, p);
  }
  return a;
}

/// base^e mod m.
inline Poly powmod(Poly base, u64 e, const Poly& m, u64 p) {
  Poly result{1};
  base = rem(base, m, p);
  while (e != 0) {
    if (e & 1U) result = rem(mul(result, base, p), m, p);
    base = rem(mul(base, base, p), m, p);
    e >>= 1U;
  }
  return result;
}

inline Poly sub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

/// Product of the distinct linear factors of a (nonzero) mod p.
inline Poly linear_part(const Poly& a, u64 p) {
  if (a.size() <= 1) return {1};
  Poly xp = powmod(Poly{0, 1}, p, a, p);
  return gcd(a, sub(xp, Poly{0, 1}, p), p);
}

inline void split(const Poly& g, u64 p, std::vector<u64>& roots) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    roots.push_back(mulmod(p - g[0], inv(g[1], p), p));
    return;
  }
  if (p <= 64) {
    for (u64 x = 0; x < p; ++x) {
      u64 v = 0;
      for (auto it = g.rbegin(); it != g.rend(); ++it) v = (mulmod(v, x, p) + *it) % p;
      if (v == 0) roots.push_back(x);
    }
    return;
  }
  for (u64 a = 0;; ++a) {
    Poly h = powmod(Poly{a % p, 1}, (p - 1) / 2, g, p);
    h = gcd(g, sub(h, Poly{1}, p), p);
    if (h.size() > 1 && h.size() < g.size()) {
      split(h, p, roots);
      split(quot(g, h, p), p, roots);
      return;
    }
  }
}

}  // namespace detail_poly

/// Distinct roots of f mod the prime p, ascending. Throws
/// DegenerateModulus when f vanishes identically mod p.
inline std::vector<u64> roots_mod_prime(const PolySpec& f, i64 p) {
  if (p < 2) throw BadInput("roots_mod_prime: p must be prime");
  const auto a = detail_poly::reduce(f, static_cast<u64>(p));
  if (a.empty()) throw DegenerateModulus("f vanishes identically mod " + std::to_string(p));
  std::vector<u64> roots;
  detail_poly::split(detail_poly::linear_part(a, static_cast<u64>(p)), static_cast<u64>(p), roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Exhaustive count of n mod m with f(n) = 0 mod m.
inline i64 rho_brute(const PolySpec& f, i64 m) {
  if (m < 1) throw BadInput("rho_brute: m must be >= 1");
  const auto M = static_cast<u64>(m);
  std::vector<u64> c(f.coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<u64>(detail::mod(f.coeffs[i], m));
  i64 count = 0;
  for (u64 x = 0; x < M; ++x) {
    u64 v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = (detail::mulmod(v, x, M) + *it) % M;
    if (v == 0) ++count;
  }
  return count;
}

namespace detail_poly {

inline u64 eval_mod(const PolySpec& f, u64 x, u64 m) {
  u64 v = 0;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
    v = (mulmod(v, x, m) + static_cast<u64>(detail::mod(*it, m))) % m;
  return v;
}

inline PolySpec derivative(const PolySpec& f) {
  std::vector<i64> d;
  for (std::size_t i = 1; i < f.coeffs.size(); ++i) d.push_back(detail::narrow(static_cast<i128>(f.coeffs[i]) * static_cast<i128>(i)));
  return PolySpec(std::move(d));
}

}  // namespace detail_poly

/// rho_f(p^e) by lifting the roots mod p one power at a time:
/// f(r + t p^k) = f(r) + t p^k f'(r) mod p^(k+1).
inline i64 rho_hensel(const PolySpec& f, i64 p, int e) {
  if (e < 1) throw BadInput("rho_hensel: e must be >= 1");
  std::vector<u64> roots = roots_mod_prime(f, p);
  const PolySpec df = detail_poly::derivative(f);
  const auto P = static_cast<u64>(p);
  u64 pk = P;
  for (int k = 1; k < e; ++k) {
    const u64 next = pk * P;
    std::vector<u64> lifted;
    for (u64 r : roots) {
      const u64 v = detail_poly::eval_mod(f, r, next);  // divisible by p^k
      const u64 w = v / pk;                             // f(r)/p^k mod p
      const u64 d = detail_poly::eval_mod(df, r, P);
      if (d != 0) {
        const u64 t = detail::mulmod((P - w) % P, detail_poly::inv(d, P), P);
        lifted.push_back(r + t * pk);
      } else if (w == 0) {
        for (u64 t = 0; t < P; ++t) lifted.push_back(r + t * pk);
      }
    }
    roots = std::move(lifted);
    pk = next;
  }
  return static_cast<i64>(roots.size());
}

/// rho_f(m) with every prime power counted by lifting (no scan).
inline i64 rho_lifted(const PolySpec& f, i64 m) {
  if (m < 1) throw BadInput("rho_lifted: m must be >= 1");
  i64 count = 1;
  for (auto [p, e] : factorize(m)) count *= rho_hensel(f, p, e);
  return count;
}

/// Prime powers up to this size are counted by direct scan.
inline constexpr i64 kRhoScanLimit = 1000000;

/// rho_f(m) as the product over p^e || m (Chinese remainder theorem).
inline i64 rho_poly(const PolySpec& f, i64 m) {
  if (m < 1) throw BadInput("rho_poly: m must be >= 1");
  i64 count = 1;
  for (auto [p, e] : factorize(m)) {
    if (detail_poly::reduce(f, static_cast<u64>(p)).empty())
      throw DegenerateModulus("f vanishes identically mod " + std::to_string(p));
    i64 pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    // The scan costs p^e evaluations; primes use the root finder instead.
    count *= (e > 1 && pe <= kRhoScanLimit) ? rho_brute(f, pe) : rho_hensel(f, p, e);
    if (count == 0) return 0;
  }
  return count;
}

inline const PolySpec& quartic_units() {
  static const PolySpec f{-1, 0, 0, 0, 1};  // x^4 - 1
  return f;
}

/// Solutions r mod m of r^4 = s^4 for a unit s, i.e. rho_{x^4-1}(m).
inline i64 F_count(i64 m) { return rho_poly(quartic_units(), m); }

/// F at a prime by residue class: 1 at 2, 2 for p = 3 mod 4, 4 for p = 1 mod 4.
inline i64 F_prime_table(i64 p) { return p == 2 ? 1 : (p % 4 == 3 ? 2 : 4); }

inline i64 rho_star(const BinaryForm& F, i64 p) {
  if (F.at_1_0() == 0 || F.at_0_1() == 0) throw BadForm("rho_star: f(1,0) f(0,1) must be nonzero");
  const i64 base = static_cast<i64>(roots_mod_prime(F.dehomogenized(), p).size());
  return F.at_0_1() % p == 0 ? base + 1 : base;
}

/// Disc(f) = (-1)^(n(n-1)/2) Res(f, f') / a_n, with the resultant taken as
/// the Sylvester determinant (fraction-free elimination).
inline mpz_class discriminant(const PolySpec& f) {
  const int n = f.degree();
  if (n < 1) throw BadInput("discriminant: degree must be >= 1");
  if (n == 1) return 1;
  const PolySpec df = detail_poly::derivative(f);
  const int m = n - 1, size = n + m;
  std::vector<std::vector<mpz_class>> S(static_cast<std::size_t>(size), std::vector<mpz_class>(static_cast<std::size_t>(size), 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) S[i][i + j] = static_cast<long>(f.coeffs[static_cast<std::size_t>(n - j)]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) S[m + i][i + j] = static_cast<long>(df.coeffs[static_cast<std::size_t>(m - j)]);
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (S[k][k] == 0) {
      int r = k + 1;
      while (r < size && S[r][k] == 0) ++r;
      if (r == size) return 0;
      std::swap(S[k], S[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) S[i][j] = (S[i][j] * S[k][k] - S[i][k] * S[k][j]) / prev;
      S[i][k] = 0;
    }
    prev = S[k][k];
  }
  mpz_class res = sign * S[size - 1][size - 1];
  mpz_class disc = res / static_cast<long>(f.coeffs.back());
  if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

// ---------------------------------------------------- experiments

/// (1/pi(t)) sum_{p <= t} rho_f(p) for f the product of the factors.
inline double dedekind_ratio(const std::vector<PolySpec>& factors, i64 t, unsigned workers = detail::default_workers()) {
  if (t < 2) throw BadInput("dedekind_ratio: t must be >= 2");
  PolySpec f{1};
  for (const auto& g : factors) f = f * g;
  const auto ps = primes_up_to(t);
  std::vector<i64> rho(ps.size());
  detail::parallel_for(ps.size(), workers, [&](std::size_t i) {
    rho[i] = static_cast<i64>(roots_mod_prime(f, ps[i]).size());
  });
  const i64 total = std::accumulate(rho.begin(), rho.end(), i64{0});
  return static_cast<double>(total) / static_cast<double>(ps.size());
}

struct PhiSum {
  i64 sum = 0;
  double rel_error = 0;  // |sum - 3N^2/pi^2| / (3N^2/pi^2)
};

inline PhiSum phi_sum_check(i64 N) {
  if (N < 2) throw BadInput("phi_sum_check: N must be >= 2");
  const FnTable phi = sieve(SieveKind::phi, N);
  PhiSum r;
  for (i64 n = 1; n <= N; ++n) r.sum += phi.values[static_cast<std::size_t>(n)];
  const long double main = 3.0L * static_cast<long double>(N) * static_cast<long double>(N) / (M_PIl * M_PIl);
  r.rel_error = static_cast<double>(std::fabs(static_cast<long double>(r.sum) - main) / main);
  return r;
}

/// #{1 <= n <= N : gcd(n, c) = 1} by inclusion-exclusion over the primes of c.
inline i64 coprime_count(i64 N, i64 c) {
  if (N < 1 || c < 1) throw BadInput("coprime_count: N and c must be >= 1");
  const auto fac = factorize(c);
  i64 total = 0;
  const std::size_t k = fac.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    i64 d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1U) d *= fac[i].p, ++bits;
    total += (bits % 2 == 0 ? 1 : -1) * (N / d);
  }
  return total;
}

struct DirichletSum {
  i64 M = 0;
  Rational sum;
  double ratio_log3 = 0;  // sum / (ln M)^3; NaN for M <= e
};

/// sum over m <= M with gcd(m, 6) = 1 of F(m) f(m) f'(m) / m, exactly.
/// Terms are built from a smallest-prime-factor table and added pairwise
/// along a balanced tree so operand sizes stay matched.
inline DirichletSum dirichlet_partial(i64 M) {
  if (M < 1) throw BadInput("dirichlet_partial: M must be >= 1");
  std::vector<std::int32_t> spf(static_cast<std::size_t>(M) + 1, 0);
  for (i64 i = 2; i <= M; ++i)
    if (spf[static_cast<std::size_t>(i)] == 0)
      for (i64 j = i; j <= M; j += i)
        if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
  std::vector<Rational> terms;
  for (i64 m = 1; m <= M; ++m) {
    if (m % 2 == 0 || m % 3 == 0) continue;
    // F(m) f(m) f'(m) / m, multiplicative apart from the 1/m.
    mpz_class num = 1, den = m;
    for (i64 n = m; n > 1;) {
      const i64 p = spf[static_cast<std::size_t>(n)];
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      const long F = p % 4 == 1 ? 4 : 2;  // p does not divide Disc(x^4 - 1) = -256
      // f(p) f'(p^e) = ((p-1)/p) * (e == 1 ? ((p-1)^2 * 2 - p^2) / p^2 : (p-1)^2 / p^2)
      const mpz_class w = p - 1, pp = p;
      const mpz_class fp = e == 1 ? mpz_class(2 * w * w - pp * pp) : mpz_class(w * w);
      num *= F * w * fp;
      den *= pp * pp * pp;
    }
    Rational t(num, den);
    t.canonicalize();
    terms.push_back(std::move(t));
  }
  while (terms.size() > 1) {
    std::vector<Rational> next((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next[i / 2] = terms[i] + terms[i + 1];
    if (terms.size() % 2 == 1) next.back() = terms.back();
    terms = std::move(next);
  }
  DirichletSum r;
  r.M = M;
  r.sum = terms.empty() ? Rational(0) : terms.front();
  const double lg = std::log(static_cast<double>(M));
  r.ratio_log3 = lg > 1 ? r.sum.get_d() / (lg * lg * lg) : std::nan("");
  return r;
}

struct NairResult {
  i64 lhs = 0;
  double rhs = 0;
  double ratio = 0;
};

/// sum_{N1 < n <= N2} d(|f(n)|), computed by sieving |f(n)| over the roots
/// of f mod primes, against
/// (N2 - N1) prod_{p <= N2} (1 - rho(p)/p) exp(sum_{p <= N2} 2 rho(p)/p + c sum_{p | Disc} 1/p).
inline NairResult nair_experiment(const PolySpec& f, i64 N1, i64 N2, double c = 1.0) {
  if (N2 < N1 + 1) throw BadInput("nair_experiment: need N2 >= N1 + 1");
  const mpz_class disc = discriminant(f);
  if (disc == 0) throw BadInput("nair_experiment: Disc(f) must be nonzero");
  const auto len = static_cast<std::size_t>(N2 - N1);
  std::vector<u128> rest(len);
  std::vector<i64> d(len, 1);
  u128 vmax = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const i128 v = f(N1 + 1 + static_cast<i64>(i));
    if (v == 0) throw ZeroValue("nair_experiment: f(" + std::to_string(N1 + 1 + static_cast<i64>(i)) + ") = 0");
    rest[i] = static_cast<u128>(detail::abs128(v));
    vmax = std::max(vmax, rest[i]);
  }
  const auto root = static_cast<i64>(detail::isqrt128(vmax));
  for (i64 p : primes_up_to(root)) {
    std::vector<u64> roots;
    if (detail_poly::reduce(f, static_cast<u64>(p)).empty()) {
      for (i64 x = 0; x < p; ++x) roots.push_back(static_cast<u64>(x));
    } else {
      roots = roots_mod_prime(f, p);
    }
    for (u64 r : roots) {
      i64 n = N1 + 1 + static_cast<i64>(detail::mod(static_cast<i128>(r) - (N1 + 1), p));
      for (; n <= N2; n += p) {
        auto& v = rest[static_cast<std::size_t>(n - N1 - 1)];
        int e = 0;
        while (v % static_cast<u128>(p) == 0) v /= static_cast<u128>(p), ++e;
        d[static_cast<std::size_t>(n - N1 - 1)] *= e + 1;
      }
    }
  }
  NairResult res;
  for (std::size_t i = 0; i < len; ++i) res.lhs += rest[i] > 1 ? 2 * d[i] : d[i];
  long double log_prod = 0, expo = 0;
  for (i64 p : primes_up_to(N2)) {
    const auto rho = static_cast<long double>(roots_mod_prime(f, p).size());
    log_prod += std::log1p(-rho / static_cast<long double>(p));
    expo += 2 * rho / static_cast<long double>(p);
  }
  mpz_class dabs = abs(disc);
  for (i64 p = 2; dabs > 1; ++p) {
    if (mpz_divisible_ui_p(dabs.get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
    expo += static_cast<long double>(c) / static_cast<long double>(p);
    while (mpz_divisible_ui_p(dabs.get_mpz_t(), static_cast<unsigned long>(p)) != 0) dabs /= static_cast<unsigned long>(p);
  }
  res.rhs = static_cast<double>(static_cast<long double>(N2 - N1) * std::exp(log_prod + expo));
  res.ratio = static_cast<double>(res.lhs) / res.rhs;
  return res;
}

/// First n in [lo, hi] violating n/(ln n - 1/2) < pi(n) < n/(ln n - 3/2).
inline std::optional<i64> rosser_schoenfeld_violation(i64 lo, i64 hi) {
  if (lo < 67) throw BadInput("rosser_schoenfeld_violation: n must be >= 67");
  const auto pi = prime_pi_table(hi);
  for (i64 n = lo; n <= hi; ++n) {
    const long double ln = std::log(static_cast<long double>(n));
    const auto x = static_cast<long double>(n), v = static_cast<long double>(pi[static_cast<std::size_t>(n)]);
    if (!(x / (ln - 0.5L) < v && v < x / (ln - 1.5L))) return n;
  }
  return std::nullopt;
}

}  // namespace arith
}  // namespace dp4
