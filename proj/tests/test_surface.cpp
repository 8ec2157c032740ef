#include <gtest/gtest.h>

#include <set>

#include "dp4/surface.hpp"

using namespace dp4;

namespace {

const Coords kP{19, -18, 38, -9, -32};
const Coords kQ{0, 3, 0, 1, 2};

// Independent oracle: primitive points of V with all coordinates in [-h, h].
std::vector<Coords> cube_points(i64 h) {
  std::vector<Coords> out;
  for (i64 a = -h; a <= h; ++a)
    for (i64 b = -h; b <= h; ++b)
      for (i64 c = -h; c <= h; ++c)
        for (i64 d = -h; d <= h; ++d)
          for (i64 e = -h; e <= h; ++e) {
            Coords x{a, b, c, d, e};
            if (a * b != c * d || a * a + b * b + c * c - d * d - 2 * e * e != 0) continue;
            i64 g = 0;
            for (i64 v : x) g = std::gcd(g, v);
            if (g != 1) continue;
            out.push_back(x);
          }
  return out;
}

}  // namespace

TEST(Surface, Membership) {
  EXPECT_TRUE(surface::is_on_surface({1, 1, 1, 1, 1}));
  EXPECT_TRUE(surface::is_on_surface(kP));
  EXPECT_FALSE(surface::is_on_surface({1, 1, 1, 1, 0}));
  EXPECT_EQ(surface::second_form({1, 1, 1, 1, 0}), 2);
}

TEST(Surface, Normalize) {
  EXPECT_EQ(surface::normalize_primitive({2, 2, 2, 2, 2}).x, (Coords{1, 1, 1, 1, 1}));
  EXPECT_EQ(surface::normalize_primitive({0, -3, 0, -1, -2}).x, kQ);
  const SurfacePoint p = surface::normalize_primitive({-19, 18, -38, 9, 32});
  EXPECT_EQ(p.x, kP);
  EXPECT_EQ(p.height, 38);
  EXPECT_FALSE(p.on_line());
  EXPECT_THROW(surface::normalize_primitive({0, 0, 0, 0, 0}), ZeroVector);
  EXPECT_THROW(surface::normalize_primitive({1, 1, 1, 1, 0}), NotOnSurface);
}

TEST(Surface, LineIds) {
  EXPECT_EQ(surface::line_id({1, 1, 1, 1, 1}), LineId::L1);
  EXPECT_EQ(surface::line_id({1, 2, 2, 1, -2}), LineId::L6);
  EXPECT_FALSE(surface::line_id(kP).has_value());
  EXPECT_FALSE(surface::line_id(kQ).has_value());
  EXPECT_EQ(to_string(LineId::L6), "L6");
}

TEST(Surface, Projections) {
  EXPECT_EQ(surface::project(1, kP), (ProjectivePair{1, 2}));
  EXPECT_EQ(surface::project(1, kQ), (ProjectivePair{1, 3}));
  EXPECT_EQ(surface::project(2, kP), (ProjectivePair{19, -9}));
  EXPECT_EQ(surface::project(1, kP).norm() * surface::project(2, kP).norm(), 38);
  EXPECT_THROW(surface::project(3, kP), BadInput);
}

TEST(Surface, PointText) {
  EXPECT_EQ(surface::format_point(kP), "19 -18 38 -9 -32");
  EXPECT_EQ(surface::parse_point("19 -18 38 -9 -32"), kP);
  EXPECT_THROW(surface::parse_point("1 2 3"), BadInput);
  EXPECT_THROW(surface::parse_point("1 2 3 4 5 6"), BadInput);
}

// Every primitive point of height <= 1 lies on a rational line.
TEST(Surface, HeightOnePointsAreLinePoints) {
  const auto pts = cube_points(1);
  ASSERT_FALSE(pts.empty());
  for (const Coords& x : pts) EXPECT_TRUE(surface::line_id(x).has_value()) << surface::format_point(x);
}

TEST(Surface, CubePropertiesUpToHeightFour) {
  std::set<Coords> classes;
  for (const Coords& x : cube_points(4)) {
    const SurfacePoint p = surface::normalize_primitive(x);
    Coords neg;
    for (std::size_t i = 0; i < 5; ++i) neg[i] = -x[i];
    EXPECT_EQ(surface::normalize_primitive(neg).x, p.x);
    EXPECT_EQ(surface::normalize_primitive(p.x).x, p.x);
    EXPECT_TRUE(surface::is_canonical(p.x));
    const i64 prod = surface::project(1, p).norm() * surface::project(2, p).norm();
    EXPECT_LE(prod, p.height) << surface::format_point(x);
    classes.insert(p.x);
  }
  // Every canonical class appears exactly twice among the signed vectors.
  EXPECT_EQ(classes.size() * 2, cube_points(4).size());
}
