#pragma once

// Point families: the uniform n x n integer grid and the nested-squares set.

#include <cstdint>
#include <vector>

#include "onion/geom_core.hpp"
#include "onion/peeling.hpp"

namespace onion {

struct GridSpec {
  std::int64_t n = 1;
};

/// k concentric squares of side 3^i (i = 1..k) centred at the origin.
/// Coordinates are doubled so the corners (+-3^i / 2) become integers.
struct SquaresSpec {
  int k = 1;
};

inline constexpr int kMaxSquares = 38;

/// {1..n}^2, sorted.
inline PointSet make_grid(GridSpec spec) {
  if (spec.n < 1) throw PreconditionError("grid side must be >= 1");
  if (spec.n > kMaxCoordinate) throw CapacityError("grid side exceeds kernel capacity");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(spec.n * spec.n));
  for (Coord x = 1; x <= spec.n; ++x)
    for (Coord y = 1; y <= spec.n; ++y) pts.push_back({x, y});
  return PointSet(std::move(pts));
}

/// Positions (doubled) of the 2k parallel lines in each axis: +-3^i.
inline std::vector<Coord> nested_square_lines(SquaresSpec spec) {
  if (spec.k < 1) throw PreconditionError("number of squares must be >= 1");
  if (spec.k > kMaxSquares) throw CapacityError("nested squares limited to k <= 38");
  std::vector<Coord> lines;
  Coord p = 1;
  for (int i = 1; i <= spec.k; ++i) {
    p *= 3;
    lines.push_back(p);
    lines.push_back(-p);
  }
  return lines;
}

/// All 4k^2 intersections of the extended square sides. Each of the 4k lines
/// carries exactly 2k of the points.
inline PointSet make_nested_squares(SquaresSpec spec) {
  const std::vector<Coord> lines = nested_square_lines(spec);
  std::vector<Point> pts;
  pts.reserve(lines.size() * lines.size());
  for (Coord x : lines)
    for (Coord y : lines) pts.push_back({x, y});
  return PointSet(std::move(pts));
}

inline SourceDescriptor grid_source(GridSpec spec) { return {"grid", {spec.n}}; }
inline SourceDescriptor squares_source(SquaresSpec spec) { return {"squares", {spec.k}}; }

}  // namespace onion
