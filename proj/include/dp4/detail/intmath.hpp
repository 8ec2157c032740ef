#pragma once

// Exact integer helpers shared by every module. Products of two 64-bit
// values are formed in 128 bits; nothing here wraps silently.

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dp4 {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

namespace detail {

constexpr i64 abs64(i64 v) { return v < 0 ? -v : v; }
constexpr i128 abs128(i128 v) { return v < 0 ? -v : v; }

constexpr i64 gcd64(i64 a, i64 b) {
  return std::gcd(a, b);  // non-negative result
}

constexpr i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// floor(sqrt(n)) for n >= 0.
inline u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline u128 isqrt128(u128 n) {
  if (n <= std::numeric_limits<u64>::max()) return isqrt(static_cast<u64>(n));
  long double approx = __builtin_sqrtl(static_cast<long double>(n));
  u128 r = static_cast<u128>(approx);
  // The estimate is within a few units for n < 2^127.
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

/// If n is a perfect square returns true and stores its root.
inline bool is_square(i128 n, i128& root) {
  if (n < 0) return false;
  // Quadratic residues mod 64 reject most non-squares cheaply.
  static constexpr std::uint64_t kMask64 = [] {
    std::uint64_t m = 0;
    for (unsigned k = 0; k < 64; ++k) m |= std::uint64_t{1} << ((k * k) & 63U);
    return m;
  }();
  if (((kMask64 >> (static_cast<unsigned>(n) & 63U)) & 1U) == 0) return false;
  u128 r = isqrt128(static_cast<u128>(n));
  if (static_cast<i128>(r * r) != n) return false;
  root = static_cast<i128>(r);
  return true;
}

constexpr i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr i128 ceil_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

/// Least non-negative residue.
constexpr i128 mod(i128 a, i128 m) {
  i128 r = a % m;
  return r < 0 ? r + m : r;
}

constexpr u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

constexpr u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline i128 inverse_mod(i128 a, i128 m) {
  i128 g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    i128 q = g / a1;
    i128 t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw std::domain_error("inverse_mod: arguments not coprime");
  return mod(x, m);
}

/// Narrow to 64 bits, throwing instead of wrapping.
inline i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw std::overflow_error("integer result exceeds 64 bits");
  return static_cast<i64>(v);
}

inline std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::string s;
  while (u != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.insert(s.begin(), '-');
  return s;
}

}  // namespace detail
}  // namespace dp4
