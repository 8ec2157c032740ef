#include <gtest/gtest.h>

#include <random>

#include "dp4/quadrics.hpp"

using namespace dp4;

namespace {

i64 naive_count(const TernaryQuadric& q, i64 B1, i64 B2, i64 B3) {
  i64 n = 0;
  for (i64 x = -B1; x <= B1; ++x)
    for (i64 y = -B2; y <= B2; ++y)
      for (i64 z = -B3; z <= B3; ++z)
        if (std::gcd(std::gcd(x, y), z) == 1 && q(x, y, z) == 0) ++n;
  return n;
}

i64 naive_divisors(i64 n) {
  i64 d = 0;
  for (i64 k = 1; k <= n; ++k) d += n % k == 0;
  return d;
}

}  // namespace

TEST(Quadrics, Invariants) {
  auto inv = quadrics::invariants({{5, 3, -2}});
  EXPECT_EQ(inv.delta, 30);
  EXPECT_EQ(inv.delta0, 1);
  inv = quadrics::invariants({{2, 2, 2}});
  EXPECT_EQ(inv.delta, 8);
  EXPECT_EQ(inv.delta0, 4);
  inv = quadrics::invariants({{1, 1, -2}});
  EXPECT_EQ(inv.delta, 2);
  EXPECT_EQ(inv.delta0, 1);
  EXPECT_THROW(quadrics::invariants({{2, 0, -2}}), SingularForm);
}

TEST(Quadrics, InvariantDivisibility) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<i64> c(-500, 500);
  for (int i = 0; i < 1000; ++i) {
    TernaryQuadric q{{c(rng), c(rng), c(rng)}};
    if (q.diag[0] * q.diag[1] * q.diag[2] == 0) continue;
    const auto inv = quadrics::invariants(q);
    const i128 d0 = inv.delta0;
    EXPECT_EQ(static_cast<i128>(q.diag[0]) * q.diag[1] % d0, 0);
    EXPECT_EQ(static_cast<i128>(q.diag[0]) * q.diag[2] % d0, 0);
    EXPECT_EQ(static_cast<i128>(q.diag[1]) * q.diag[2] % d0, 0);
    EXPECT_EQ(inv.delta * inv.delta % (d0 * d0 * d0), 0);
  }
}

TEST(Quadrics, DivisorCount) {
  for (i64 n = 1; n <= 2000; ++n) ASSERT_EQ(quadrics::divisor_count(n), naive_divisors(n)) << n;
  EXPECT_EQ(quadrics::divisor_count(-30), 8);
}

TEST(Quadrics, HbBound) {
  // (1 + (19*19*38/30)^(1/3)) * d(30); the cube root is 7.7042.
  EXPECT_NEAR(quadrics::hb_bound({{5, 3, -2}}, 19, 19, 38), 69.633, 0.001);
  EXPECT_NEAR(quadrics::hb_bound({{1, 1, -2}}, 1, 1, 1), 3.587, 0.001);
  EXPECT_GT(quadrics::hb_bound({{7, -3, 11}}, 1, 1, 1), static_cast<double>(quadrics::divisor_count(231)));
  EXPECT_THROW(quadrics::hb_bound({{1, 0, 1}}, 1, 1, 1), SingularForm);
  EXPECT_THROW(quadrics::hb_bound({{1, 1, -2}}, 0, 1, 1), BadInput);
}

TEST(Quadrics, CountBoxExamples) {
  EXPECT_EQ(quadrics::count_box({{5, 3, -2}}, 1, 1, 2), 8);
  EXPECT_EQ(quadrics::count_box({{1, 1, 1}}, 7, 7, 7), 0);
  // X1 = +-X3 with X2 free: X1 = X3 = 0 gives X2 = +-1, otherwise 2 signs of X3.
  i64 want = 2;
  for (i64 x1 = -3; x1 <= 3; ++x1)
    for (i64 x2 = -3; x2 <= 3; ++x2)
      if (x1 != 0 && std::gcd(x1, x2) == 1) want += 2;
  EXPECT_EQ(quadrics::count_box({{2, 0, -2}}, 3, 3, 3), want);
  EXPECT_EQ(quadrics::count_box({{2, 0, -2}}, 3, 3, 3), naive_count({{2, 0, -2}}, 3, 3, 3));
}

TEST(Quadrics, CountBoxMatchesNaive) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<i64> c(-8, 8), b(0, 8);
  for (int i = 0; i < 4000; ++i) {
    TernaryQuadric q{{c(rng), c(rng), c(rng)}};
    if (i % 4 == 0) q.diag[rng() % 3] = 0;
    const i64 B1 = b(rng), B2 = b(rng), B3 = b(rng);
    const i64 n = quadrics::count_box(q, B1, B2, B3);
    ASSERT_EQ(n, naive_count(q, B1, B2, B3)) << q.diag[0] << " " << q.diag[1] << " " << q.diag[2];
    EXPECT_EQ(n % 2, 0);
  }
}

TEST(Quadrics, FiberCountMatchesGenericCount) {
  for (i64 r = 0; r <= 9; ++r)
    for (i64 s = -9; s <= 9; ++s) {
      if (std::gcd(r, s) != 1 || r * r == s * s) continue;
      const TernaryQuadric q{{r * r + s * s, -(r * r - s * s), -2}};
      for (i64 b : {5, 40}) EXPECT_EQ(quadrics::count_box_fiber(r, s, b, 3 * b), quadrics::count_box(q, b, b, 3 * b));
    }
}

TEST(Quadrics, SurveySmall) {
  const auto rep = quadrics::hb_ratio_survey(2000, 12, 2);
  ASSERT_FALSE(rep.rows.empty());
  EXPECT_EQ(rep.skipped.size(), 2U);  // (1, 1) and (1, -1)
  for (const auto& row : rep.rows) {
    const i64 m = std::max(std::abs(row.r), std::abs(row.s));
    const TernaryQuadric q{{row.r * row.r + row.s * row.s, -(row.r * row.r - row.s * row.s), -2}};
    EXPECT_EQ(row.count, quadrics::count_box(q, 2000 / m, 2000 / m, 2000));
    EXPECT_NEAR(row.ratio, static_cast<double>(row.count) / row.hb, 1e-12);
  }
  EXPECT_TRUE(rep.bounded);
  const auto again = quadrics::hb_ratio_survey(2000, 12, 1);
  EXPECT_EQ(again.max_ratio, rep.max_ratio);
}
