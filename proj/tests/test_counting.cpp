#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "dp4/counting.hpp"

using namespace dp4;

namespace {

const Coords kP{19, -18, 38, -9, -32};
const Coords kQ{0, 3, 0, 1, 2};

// Oracle: loop x1..x4 over the box and solve for x5.
std::set<Coords> naive_u_points(i64 B) {
  std::set<Coords> out;
  for (i64 a = -B; a <= B; ++a)
    for (i64 b = -B; b <= B; ++b)
      for (i64 c = -B; c <= B; ++c)
        for (i64 d = -B; d <= B; ++d) {
          if (a * b != c * d) continue;
          const i64 t = a * a + b * b + c * c - d * d;
          if (t < 0 || t % 2 != 0) continue;
          i64 e = 0;
          while ((e + 1) * (e + 1) <= t / 2) ++e;
          if (e * e != t / 2 || e > B) continue;
          for (i64 x5 : {e, -e}) {
            Coords x{a, b, c, d, x5};
            i64 g = 0;
            for (i64 v : x) g = std::gcd(g, v);
            if (g != 1) continue;
            Coords y = surface::canonical(x);
            if (!surface::line_id(y)) out.insert(y);
          }
        }
  return out;
}

std::vector<Coords> brute_set(i64 B) {
  std::vector<SurfacePoint> pts;
  counting::brute_enumerate(B, true, &pts);
  std::vector<Coords> out;
  for (const auto& p : pts) out.push_back(p.x);
  return out;
}

bool leak_l6(const Coords& x) {
  const auto id = surface::line_id(x);
  return !id.has_value() || *id == LineId::L6;
}

}  // namespace

TEST(Counting, SmallExamples) {
  EXPECT_EQ(counting::brute_enumerate(1).count, 0);
  const auto p3 = brute_set(3);
  EXPECT_TRUE(std::binary_search(p3.begin(), p3.end(), kQ));
  const auto p38 = brute_set(38);
  EXPECT_TRUE(std::binary_search(p38.begin(), p38.end(), kP));
}

TEST(Counting, AgreesWithNaiveOracle) {
  for (i64 B = 1; B <= 9; ++B) {
    const auto want = naive_u_points(B);
    const auto got = brute_set(B);
    EXPECT_EQ(std::set<Coords>(got.begin(), got.end()), want) << "B=" << B;
    EXPECT_EQ(counting::fiber_count(B).count, static_cast<i64>(want.size())) << "B=" << B;
    EXPECT_EQ(counting::split_count(B).count, static_cast<i64>(want.size())) << "B=" << B;
  }
}

TEST(Counting, ThreeCountersAgreeUpTo200) {
  for (i64 B = 1; B <= 200; ++B) {
    const i64 brute = counting::brute_enumerate(B).count;
    EXPECT_EQ(counting::fiber_count(B).count, brute) << "B=" << B;
    EXPECT_EQ(counting::split_count(B).count, brute) << "B=" << B;
  }
}

TEST(Counting, PointSetsAgree) {
  for (i64 B : {57, 200}) EXPECT_EQ(counting::fiber_point_set(B), brute_set(B)) << "B=" << B;
}

TEST(Counting, SplitMatchesFiberAtLargerBounds) {
  for (i64 B : {333, 500, 1000, 1777}) EXPECT_EQ(counting::split_count(B).count, counting::fiber_count(B).count) << B;
}

TEST(Counting, FiberOfExamples) {
  auto [k1, X1] = counting::fiber_of(surface::normalize_primitive(kP));
  EXPECT_EQ(k1, (FiberKey{1, 2}));
  EXPECT_EQ(X1, (FiberCoords{19, -9, -32}));
  auto [k2, X2] = counting::fiber_of(surface::normalize_primitive(kQ));
  EXPECT_EQ(k2, (FiberKey{1, 3}));
  EXPECT_EQ(X2, (FiberCoords{0, 1, 2}));
  auto [k3, X3] = counting::fiber_of(surface::normalize_primitive({1, 2, 2, 1, -2}));
  EXPECT_EQ(k3, (FiberKey{1, 2}));
  EXPECT_EQ(X3, (FiberCoords{1, 1, -2}));
  EXPECT_EQ(counting::lift_to_surface(k1, X1).x, kP);
}

TEST(Counting, CountFiberMatchesBoxScan) {
  for (i64 r = 0; r <= 12; ++r)
    for (i64 s = -12; s <= 12; ++s) {
      if (std::gcd(r, s) != 1 || (r == 0 && s != 1)) continue;
      const FiberKey key{r, s};
      for (i64 B : {40, 300}) EXPECT_EQ(counting::count_fiber(key, B), counting::count_fiber_box(key, B)) << r << "," << s;
    }
}

TEST(Counting, RejectsUnnormalizedKey) {
  EXPECT_THROW(counting::count_fiber(FiberKey{-1, 2}, 10), BadInput);
  EXPECT_THROW(counting::count_fiber(FiberKey{2, 4}, 10), BadInput);
}

// The facts the split counter relies on, checked on the brute point set.
TEST(Counting, SymmetriesUsedBySplit) {
  const auto pts = brute_set(400);
  std::map<std::pair<i64, i64>, i64> by1, by2;
  for (const Coords& x : pts) {
    const auto f1 = surface::project(1, x), f2 = surface::project(2, x);
    ++by1[{f1.first, f1.second}];
    ++by2[{f2.first, f2.second}];
    EXPECT_NE(f1.first * f1.first, f1.second * f1.second) << "U-point in a reducible fiber";
    EXPECT_LE(f1.norm() * f2.norm(), surface::height(x));
  }
  for (const auto& [k, n] : by1)
    if (k.first != 0 && k.second != 0) {
      auto it = by1.find({k.first, -k.second});
      EXPECT_TRUE(it != by1.end() && it->second == n) << "f1 " << k.first << "," << k.second;
    }
  for (const auto& [k, n] : by2)
    if (k.first != 0 && k.second != 0) {
      auto it = by2.find({k.first, -k.second});
      EXPECT_TRUE(it != by2.end() && it->second == n) << "f2 " << k.first << "," << k.second;
    }
  EXPECT_EQ(counting::count_fiber(FiberKey{1, 1}, 400), 0);
  EXPECT_EQ(counting::count_fiber(FiberKey{1, -1}, 400), 0);
}

TEST(Counting, SharedConicLiftsToBothProjections) {
  const i64 m = 7, t = 4;
  conic::scan_box(m, t, conic::Box{30, 300}, [&](const conic::Solution& X) {
    const Coords a = counting::detail_count::lift1(m, t, X);
    const Coords b = counting::detail_count::lift2(t, m, X);
    ASSERT_TRUE(surface::is_on_surface(a));
    ASSERT_TRUE(surface::is_on_surface(b));
    EXPECT_EQ(surface::project(1, a), surface::reduce_pair(m, t));
    EXPECT_EQ(surface::project(2, b), surface::reduce_pair(t, m));
  });
}

TEST(Counting, WorkerCountDoesNotMatter) {
  for (unsigned w : {1U, 3U, 8U}) {
    CountOptions o;
    o.workers = w;
    EXPECT_EQ(counting::fiber_count(250, o).count, counting::brute_enumerate(250).count);
    EXPECT_EQ(counting::split_count(2500, o).count, counting::split_count(2500).count);
  }
}

TEST(Counting, Ceilings) {
  EXPECT_THROW(counting::brute_enumerate(2001), BoundTooLarge);
  EXPECT_THROW(counting::fiber_count(1000001), BoundTooLarge);
  EXPECT_THROW(counting::count(0, Method::split), BadInput);
}

TEST(Counting, ReconcileDetectsLeakedLine) {
  EXPECT_NO_THROW(counting::reconcile({10, 60}));
  try {
    counting::reconcile({60}, {}, leak_l6);
    FAIL() << "expected MismatchError";
  } catch (const MismatchError& e) {
    EXPECT_EQ(e.bound, 60);
    EXPECT_TRUE(e.only_brute.empty());
    ASSERT_FALSE(e.only_fiber.empty());
    for (const Coords& x : e.only_fiber) EXPECT_EQ(surface::line_id(x), LineId::L6);
  }
}
