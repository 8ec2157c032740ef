#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dp4/counting.hpp"
#include "dp4/lowerbound.hpp"

using namespace dp4;

namespace {

// Oracle for the content: gcd of the three values computed directly.
i64 direct_content(i64 r, i64 s, i64 x, i64 y) {
  const i64 A = r * r + s * s;
  const i64 f1 = x * x + 4 * s * x * y + 2 * A * y * y;
  const i64 f2 = x * x - 2 * A * y * y;
  const i64 f3 = -s * x * x - 2 * A * x * y - 2 * s * A * y * y;
  return std::gcd(std::gcd(f1, f2), f3);
}

}  // namespace

TEST(LowerBound, QuadricCoefficients) {
  EXPECT_EQ(lowerbound::q_rs(1, 2).diag, (std::array<i64, 3>{5, 3, -2}));
  EXPECT_EQ(lowerbound::q_rs(1, 1).diag, (std::array<i64, 3>{2, 0, -2}));
  EXPECT_EQ(lowerbound::q_rs(0, 1).diag, (std::array<i64, 3>{1, 1, -2}));
  EXPECT_THROW(lowerbound::q_rs(0, 0), BadInput);
}

TEST(LowerBound, BasePointOnEveryFiber) {
  for (i64 r = -15; r <= 15; ++r)
    for (i64 s = -15; s <= 15; ++s) {
      if (r == 0 && s == 0) continue;
      const FiberCoords b = lowerbound::base_point(r, s);
      EXPECT_EQ(lowerbound::q_rs(r, s)(b.X1, b.X2, b.X3), 0) << r << "," << s;
    }
  EXPECT_EQ(lowerbound::base_point(1, 2), (FiberCoords{1, 1, 2}));
}

TEST(LowerBound, FormsExamples) {
  auto f = lowerbound::forms_eval({1, 2, 1, 1});
  EXPECT_EQ(std::tie(f.f1, f.f2, f.f3, f.content), std::make_tuple(19, -9, -32, 1));
  f = lowerbound::forms_eval({1, 2, 1, 0});
  EXPECT_EQ(std::tie(f.f1, f.f2, f.f3, f.content), std::make_tuple(1, 1, -2, 1));
  f = lowerbound::forms_eval({1, 2, 3, -1});
  EXPECT_EQ(std::tie(f.f1, f.f2, f.f3, f.content), std::make_tuple(-5, -1, -8, 1));
  f = lowerbound::forms_eval({1, 2, 5, 1});
  EXPECT_EQ(std::tie(f.f1, f.f2, f.f3, f.content), std::make_tuple(75, 15, -120, 15));
}

TEST(LowerBound, FormsRejectBadInput) {
  EXPECT_THROW(lowerbound::forms_eval({1, 3, 1, 1}), BadInput);  // s odd
  EXPECT_THROW(lowerbound::forms_eval({2, 4, 1, 1}), BadInput);  // gcd(r, s) = 2
  EXPECT_THROW(lowerbound::forms_eval({1, 2, 2, 1}), BadInput);  // gcd(x, 2sy) = 2
  EXPECT_THROW(lowerbound::forms_eval({1, 2, 3, 3}), BadInput);  // gcd(x, 2sy) = 3
}

TEST(LowerBound, ContentLemmaExamples) {
  EXPECT_TRUE(lowerbound::content_lemma_check({1, 2, 1, 1}));
  EXPECT_TRUE(lowerbound::content_lemma_check({1, 2, 5, 1}));
  EXPECT_TRUE(lowerbound::content_lemma_check({1, 2, 3, -1}));
  EXPECT_EQ(lowerbound::content_formula({1, 2, 5, 1}), 15);
}

TEST(LowerBound, ContentLemmaExhaustive) {
  i64 cases = 0;
  for (i64 r = 1; r <= 20; ++r)
    for (i64 s = 2; s <= 20; s += 2) {
      if (std::gcd(r, s) != 1) continue;
      for (i64 x = 1; x <= 60; ++x)
        for (i64 y = -40; y <= 40; ++y) {
          if (std::gcd(x, 2 * s * y) != 1) continue;
          ++cases;
          const i64 want = direct_content(r, s, x, y);
          ASSERT_EQ(lowerbound::forms_eval({r, s, x, y}).content, want);
          ASSERT_TRUE(lowerbound::content_lemma_check({r, s, x, y})) << r << " " << s << " " << x << " " << y;
        }
    }
  EXPECT_GT(cases, 100000);
}

TEST(LowerBound, FormsVanishOnQuadric) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<i64> rs(1, 1000), xy(-1000, 1000);
  int done = 0;
  while (done < 10000) {
    const ParamInput in{rs(rng), 2 * ((rs(rng) + 1) / 2), xy(rng), xy(rng)};
    if (!lowerbound::admissible(in)) continue;
    ++done;
    const FormTriple f = lowerbound::forms_eval(in);
    ASSERT_EQ(lowerbound::q_rs(in.r, in.s)(f.f1, f.f2, f.f3), 0);
  }
}

TEST(LowerBound, DecompositionPredicates) {
  const i64 B = 2000;
  EXPECT_TRUE(lowerbound::decomposition_predicates(1, 2, 1, 1, 1, 5, B));
  EXPECT_TRUE(lowerbound::decomposition_predicates(1, 2, 5, 1, 1, 1, B));
  EXPECT_FALSE(lowerbound::decomposition_predicates(1, 2, 1, 1, 2, 2, B));  // gcd(u, s) = 2
  EXPECT_FALSE(lowerbound::decomposition_predicates(1, 2, 1, 1, 1, 3, B));  // 4 does not divide -2
  EXPECT_FALSE(lowerbound::decomposition_predicates(1, 2, 1, 1, 1, 5, 100));  // v = 5 > (100/8)^(1/2)
  EXPECT_THROW(lowerbound::decomposition_predicates(1, 2, 2, 1, 1, 1, B), NotADivisor);
  EXPECT_THROW(lowerbound::decomposition_predicates(1, 2, 1, 2, 1, 1, B), NotADivisor);
}

// With a = gcd(x, r^2+s^2), b = gcd(x+2sy, r^2-s^2) the predicates hold for
// the cofactors whenever x and y come from the generator's boxes.
TEST(LowerBound, PredicatesOnGeneratedTuples) {
  const i64 B = 100000;
  i64 seen = 0;
  for (i64 r = 1; r <= 5; ++r)
    for (i64 s = 2; s <= 6; s += 2) {
      if (std::gcd(r, s) != 1) continue;
      const i64 A = r * r + s * s, D = r * r - s * s;
      for (i64 x = 1; x <= 120; ++x)
        for (i64 y = 1; y <= 30; ++y) {
          if (std::gcd(x, 2 * s * y) != 1) continue;
          const i64 a = std::gcd(x, A), b = std::gcd(x + 2 * s * y, std::abs(D));
          const i64 u = x / a, v = (x + 2 * s * y) / b;
          if (std::gcd(u, A / a) != 1 || std::gcd(v, D / b) != 1) continue;
          if (4 * a * s * u * u > B * b || 4 * b * s * v * v > B * a) continue;
          ++seen;
          EXPECT_TRUE(lowerbound::decomposition_predicates(r, s, a, b, u, v, B)) << r << s << x << y;
        }
    }
  EXPECT_GT(seen, 0);
}

TEST(LowerBound, GeneratorExample) {
  const auto pts = lowerbound::generate_points(2000, 0.25);
  const Coords want{19, -18, 38, -9, -32};
  EXPECT_TRUE(std::any_of(pts.begin(), pts.end(), [&](const auto& g) { return g.point.x == want; }));
  // The base-point class (x, y) = (1, 0) lands on L5/L6 and is dropped.
  for (const auto& g : pts) EXPECT_NE(g.y, 0);
  EXPECT_EQ(surface::line_id(surface::normalize_primitive({1, 2, 2, 1, -2}).x), LineId::L6);
}

TEST(LowerBound, GeneratorIsSubsetOfUSet) {
  const i64 B = 2000;
  const auto pts = lowerbound::generate_points(B, 0.25);
  std::vector<SurfacePoint> u;
  counting::brute_enumerate(B, true, &u);
  std::set<Coords> uset;
  for (const auto& p : u) uset.insert(p.x);
  std::set<Coords> seen;
  for (const auto& g : pts) {
    EXPECT_TRUE(surface::is_on_surface(g.point.x));
    EXPECT_LE(g.point.height, B);
    EXPECT_FALSE(g.point.on_line());
    EXPECT_TRUE(seen.insert(g.point.x).second);
    EXPECT_EQ(uset.count(g.point.x), 1U) << surface::format_point(g.point.x);
  }
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.point < b.point; }));
}

TEST(LowerBound, GeneratorCapsAndRanges) {
  EXPECT_EQ(lowerbound::generate_points(2000, 0.25, {10, 0}).size(), 10U);
  EXPECT_THROW(lowerbound::generate_points(15, 0.25), BadInput);
  EXPECT_THROW(lowerbound::generate_points(2000, 0.75), BadInput);
  EXPECT_THROW(lowerbound::generate_points(2000, 0), BadInput);
}
