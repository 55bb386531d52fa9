#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "onion/geom_core.hpp"

namespace onion {
namespace {

std::vector<Point> verts(const ConvexPolygon& p) { return {p.vertices().begin(), p.vertices().end()}; }

TEST(Orientation, BasicTurns) {
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), Orientation::Left);
  EXPECT_EQ(orientation({0, 0}, {1, 1}, {2, 2}), Orientation::Collinear);
  EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), Orientation::Right);
}

TEST(Orientation, ExactAtCapacityBound) {
  const Coord m = kMaxCoordinate;
  // A 64-bit product would overflow here; the result must still be exact.
  EXPECT_EQ(orientation({-m, -m}, {m, -m}, {m, m}), Orientation::Left);
  EXPECT_EQ(orientation({-m, -m}, {m, m}, {m - 1, m - 1}), Orientation::Collinear);
  EXPECT_EQ(orientation({-m, -m}, {m, m}, {m - 1, m}), Orientation::Left);
  EXPECT_EQ(orientation({-m, -m}, {m, m}, {m, m - 1}), Orientation::Right);
}

TEST(PointSet, SortsAndDeduplicates) {
  PointSet s({{2, 1}, {1, 5}, {2, 1}, {1, 2}});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.points()[0], (Point{1, 2}));
  EXPECT_EQ(s.points()[1], (Point{1, 5}));
  EXPECT_EQ(s.points()[2], (Point{2, 1}));
  s.remove({{1, 5}, {9, 9}});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_FALSE(s.contains({1, 5}));
}

TEST(PointSet, RejectsOutOfCapacity) {
  EXPECT_THROW(PointSet({{kMaxCoordinate + 1, 0}}), CapacityError);
}

TEST(StrictHull, Grid3ExcludesEdgeMidpoints) {
  std::vector<Point> g;
  for (Coord x = 1; x <= 3; ++x)
    for (Coord y = 1; y <= 3; ++y) g.push_back({x, y});
  const ConvexPolygon h = strict_hull(PointSet(g));
  EXPECT_EQ(h.kind(), HullKind::Proper);
  EXPECT_EQ(verts(h), (std::vector<Point>{{1, 1}, {3, 1}, {3, 3}, {1, 3}}));
}

TEST(StrictHull, CollinearSetIsSegment) {
  const ConvexPolygon h = strict_hull(PointSet({{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_EQ(h.kind(), HullKind::Segment);
  EXPECT_EQ(verts(h), (std::vector<Point>{{0, 0}, {2, 0}}));
}

TEST(StrictHull, PointOnEdgeExcluded) {
  const ConvexPolygon h = strict_hull(PointSet({{0, 0}, {1, 0}, {2, 0}, {1, 1}}));
  EXPECT_EQ(verts(h), (std::vector<Point>{{0, 0}, {2, 0}, {1, 1}}));
}

TEST(StrictHull, DegenerateInputs) {
  EXPECT_EQ(strict_hull(PointSet{}).kind(), HullKind::Empty);
  EXPECT_EQ(strict_hull(PointSet({{4, 4}})).kind(), HullKind::SinglePoint);
  EXPECT_EQ(strict_hull(PointSet({{0, 0}, {0, 5}})).kind(), HullKind::Segment);
  EXPECT_EQ(strict_hull(PointSet({{0, 0}, {0, 5}, {0, 2}, {0, 3}})).size(), 2u);
}

TEST(ConvexPolygon, RejectsNonCanonicalCycles) {
  EXPECT_THROW(ConvexPolygon::from_canonical({{0, 0}, {0, 1}, {1, 0}}), PreconditionError);  // clockwise
  EXPECT_THROW(ConvexPolygon::from_canonical({{1, 0}, {0, 1}, {0, 0}}), PreconditionError);  // bad start
  EXPECT_THROW(ConvexPolygon::from_canonical({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), PreconditionError);
  EXPECT_NO_THROW(ConvexPolygon::from_canonical({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

TEST(Area, Examples) {
  EXPECT_EQ(polygon_doubled_area(ConvexPolygon::from_canonical({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).value, 2u);
  EXPECT_EQ(polygon_doubled_area(ConvexPolygon::from_canonical({{0, 0}, {2, 0}})).value, 0u);
  EXPECT_EQ(polygon_doubled_area(ConvexPolygon::from_canonical({{0, 0}, {2, 0}, {0, 2}})).value, 4u);
}

TEST(Area, BeyondSixtyFourBits) {
  const Coord m = kMaxCoordinate;
  const auto sq = ConvexPolygon::from_canonical({{-m, -m}, {m, -m}, {m, m}, {-m, m}});
  const unsigned __int128 side = 2 * static_cast<unsigned __int128>(m);
  EXPECT_EQ(polygon_doubled_area(sq).value, 2 * side * side);
  EXPECT_EQ(polygon_doubled_area(sq).value, oracle::fan_doubled_area(sq.vertices()));
  EXPECT_EQ(to_string(DoubledArea{1000000000000000000ull * static_cast<unsigned __int128>(1000)}),
            "1000000000000000000000");
}

TEST(Perimeter, Examples) {
  EXPECT_DOUBLE_EQ(polygon_perimeter(ConvexPolygon::from_canonical({{0, 0}, {1, 0}, {1, 1}, {0, 1}})), 4.0);
  EXPECT_DOUBLE_EQ(polygon_perimeter(ConvexPolygon::from_canonical({{3, 3}})), 0.0);
  EXPECT_DOUBLE_EQ(polygon_perimeter(ConvexPolygon{}), 0.0);
  // Segments are traversed out and back.
  EXPECT_DOUBLE_EQ(polygon_perimeter(ConvexPolygon::from_canonical({{0, 0}, {3, 4}})), 10.0);
}

// Random small point clouds, compared against the Caratheodory corner oracle.
class HullProperties : public ::testing::TestWithParam<int> {};

TEST_P(HullProperties, MatchesBruteForceCorners) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t count = 1 + rng() % 14;
    const Coord span = 1 + static_cast<Coord>(rng() % 6);  // small span: many collinear triples
    const PointSet s(oracle::random_points(rng, count, 0, span));
    const std::vector<Point> pts(s.begin(), s.end());
    const ConvexPolygon h = strict_hull(s);
    const std::set<Point> got(h.vertices().begin(), h.vertices().end());
    ASSERT_EQ(got, oracle::corners(pts));

    // Containment: every point lies inside or on the hull.
    if (h.proper()) {
      const auto v = h.vertices();
      for (const Point& p : pts)
        for (std::size_t i = 0; i < v.size(); ++i)
          ASSERT_NE(orientation(v[i], v[(i + 1) % v.size()], p), Orientation::Right);
      ASSERT_EQ(polygon_doubled_area(h).value, oracle::fan_doubled_area(v));
    }

    // Idempotence on its own vertex set.
    const ConvexPolygon again = strict_hull(PointSet(std::vector<Point>(h.vertices().begin(), h.vertices().end())));
    ASSERT_EQ(again, h);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, HullProperties, ::testing::Range(1, 26));

TEST(Perimeter, GridHullBoundedByFourSides) {
  for (Coord n = 2; n <= 30; ++n) {
    std::vector<Point> g;
    for (Coord x = 1; x <= n; ++x)
      for (Coord y = 1; y <= n; ++y) g.push_back({x, y});
    EXPECT_LE(polygon_perimeter(strict_hull(PointSet(g))), 4.0 * static_cast<double>(n - 1) + 1e-9);
  }
}

}  // namespace
}  // namespace onion
