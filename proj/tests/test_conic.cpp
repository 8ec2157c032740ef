#include <gtest/gtest.h>

#include <random>
#include <set>
#include <tuple>

#include "dp4/conic.hpp"

using namespace dp4;

namespace {

using Key = std::tuple<i64, i64, i64>;

Key canon(conic::Solution z) {
  if (z.X1 < 0 || (z.X1 == 0 && (z.X2 < 0 || (z.X2 == 0 && z.X3 < 0)))) z = {-z.X1, -z.X2, -z.X3};
  return {z.X1, z.X2, z.X3};
}

// Oracle: triple loop over the whole box, no square roots.
std::set<Key> naive(i64 r, i64 s, conic::Box box) {
  std::set<Key> out;
  for (i64 a = -box.b; a <= box.b; ++a)
    for (i64 b = -box.b; b <= box.b; ++b)
      for (i64 c = -box.c; c <= box.c; ++c)
        if (std::gcd(std::gcd(a, b), c) == 1 && conic::q_value(r, s, a, b, c) == 0) out.insert(canon({a, b, c}));
  return out;
}

std::pair<std::set<Key>, std::size_t> via_enumerate(i64 r, i64 s, conic::Box box) {
  std::set<Key> out;
  std::size_t visits = 0;
  conic::enumerate(r, s, box, [&](const conic::Solution& z) {
    ++visits;
    EXPECT_EQ(conic::q_value(r, s, z.X1, z.X2, z.X3), 0);
    out.insert(canon(z));
  });
  return {out, visits};
}

}  // namespace

TEST(Conic, ScanMatchesTripleLoop) {
  for (i64 r = 0; r <= 6; ++r)
    for (i64 s = -6; s <= 6; ++s) {
      if (std::gcd(r, s) != 1) continue;
      const conic::Box box{9, 14};
      std::set<Key> got;
      conic::scan_box(r, s, box, [&](const conic::Solution& z) { got.insert(canon(z)); });
      EXPECT_EQ(got, naive(r, s, box)) << r << "," << s;
    }
}

TEST(Conic, EnumerateMatchesScanOnGrid) {
  for (i64 r = 0; r <= 40; ++r)
    for (i64 s = -40; s <= 40; s += 3) {
      if (std::gcd(r, s) != 1 || r * r == s * s) continue;
      const i64 m = std::max(r, std::abs(s));
      for (i64 b : {7, 30, 120}) {
        const conic::Box box{b, b * m * 2 / 3};
        std::set<Key> want;
        conic::scan_box(r, s, box, [&](const conic::Solution& z) { want.insert(canon(z)); });
        auto [got, visits] = via_enumerate(r, s, box);
        EXPECT_EQ(got, want) << "r=" << r << " s=" << s << " b=" << b;
        EXPECT_EQ(visits, got.size()) << "duplicate visit, r=" << r << " s=" << s << " b=" << b;
      }
    }
}

TEST(Conic, EnumerateMatchesScanRandom) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<i64> rs(-300, 300), bb(8, 400);
  for (int i = 0; i < 400; ++i) {
    const i64 r = std::abs(rs(rng)), s = rs(rng);
    if (std::gcd(r, s) != 1 || r * r == s * s) continue;
    const i64 b = bb(rng);
    const i64 m = std::max(r, std::abs(s));
    const conic::Box box{b, std::uniform_int_distribution<i64>(1, 2 * b * m)(rng)};
    if (!conic::enumerable(r, s, box)) continue;
    std::set<Key> want;
    conic::scan_box(r, s, box, [&](const conic::Solution& z) { want.insert(canon(z)); });
    auto [got, visits] = via_enumerate(r, s, box);
    EXPECT_EQ(got, want) << "r=" << r << " s=" << s << " b=" << b << " c=" << box.c;
    EXPECT_EQ(visits, got.size());
  }
}

TEST(Conic, EnumerateRejectsReducibleFiber) {
  EXPECT_THROW(conic::enumerate(1, 1, conic::Box{10, 10}, [](const conic::Solution&) {}), BadInput);
  EXPECT_FALSE(conic::enumerable(3, -3, conic::Box{10, 10}));
}

TEST(Conic, ForEachPointDispatches) {
  for (i64 b : {3, 6, 50}) {
    std::set<Key> a, c;
    conic::for_each_point(5, 2, conic::Box{b, 5 * b}, [&](const conic::Solution& z) { a.insert(canon(z)); });
    conic::scan_box(5, 2, conic::Box{b, 5 * b}, [&](const conic::Solution& z) { c.insert(canon(z)); });
    EXPECT_EQ(a, c);
  }
}
