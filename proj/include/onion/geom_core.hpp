#pragma once

// Exact integer planar kernel: points, sorted point sets, orientation and the
// strict (corners-only) convex hull.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace onion {

using Coord = std::int64_t;
using Wide = __int128;

/// Thrown when an input would exceed the exact arithmetic capacity.
class CapacityError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Thrown when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
constexpr Coord pow3(int e) {
  Coord r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}
}  // namespace detail

/// Largest admissible |x| or |y|. Cross products of differences of such
/// coordinates stay inside a signed 128-bit integer.
inline constexpr Coord kMaxCoordinate = 2 * detail::pow3(38);

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

constexpr bool within_capacity(const Point& p) {
  return p.x >= -kMaxCoordinate && p.x <= kMaxCoordinate && p.y >= -kMaxCoordinate &&
         p.y <= kMaxCoordinate;
}

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

/// (b - a) x (c - a), exact.
constexpr Wide cross(const Point& a, const Point& b, const Point& c) {
  const Wide bx = Wide{b.x} - a.x;
  const Wide by = Wide{b.y} - a.y;
  const Wide cx = Wide{c.x} - a.x;
  const Wide cy = Wide{c.y} - a.y;
  return bx * cy - by * cx;
}

constexpr Orientation orientation(const Point& a, const Point& b, const Point& c) {
  const Wide d = cross(a, b, c);
  return d > 0 ? Orientation::Left : (d < 0 ? Orientation::Right : Orientation::Collinear);
}

/// Lexicographically sorted (x, then y), duplicate-free set of points.
class PointSet {
 public:
  PointSet() = default;

  explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    for (const Point& p : points_) {
      if (!within_capacity(p)) throw CapacityError("point coordinate exceeds kernel capacity");
    }
  }

  std::span<const Point> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
  }

  /// Removes every listed point that is present; order of `victims` is irrelevant.
  void remove(std::vector<Point> victims) {
    std::sort(victims.begin(), victims.end());
    std::vector<Point> kept;
    kept.reserve(points_.size());
    std::set_difference(points_.begin(), points_.end(), victims.begin(), victims.end(),
                        std::back_inserter(kept));
    points_ = std::move(kept);
  }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

/// Twice an enclosed area. Kept as a strong type: the value can exceed 64 bits
/// for large nested-squares coordinates.
struct DoubledArea {
  unsigned __int128 value = 0;

  friend constexpr auto operator<=>(const DoubledArea&, const DoubledArea&) = default;

  double as_double() const { return static_cast<double>(value); }
};

inline std::string to_string(DoubledArea a) {
  if (a.value == 0) return "0";
  std::string digits;
  for (unsigned __int128 v = a.value; v != 0; v /= 10) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

inline std::ostream& operator<<(std::ostream& os, DoubledArea a) { return os << to_string(a); }

enum class HullKind { Empty, SinglePoint, Segment, Proper };

inline const char* to_string(HullKind k) {
  switch (k) {
    case HullKind::Empty: return "empty";
    case HullKind::SinglePoint: return "single_point";
    case HullKind::Segment: return "segment";
    case HullKind::Proper: return "proper";
  }
  return "?";
}

/// Strictly convex vertex cycle, counterclockwise, starting at the
/// lexicographically smallest vertex.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  /// `vertices` must already be canonical: CCW, lexicographic start, strict
  /// left turns throughout. Violations throw PreconditionError.
  static ConvexPolygon from_canonical(std::vector<Point> vertices) {
    ConvexPolygon poly;
    poly.vertices_ = std::move(vertices);
    if (!poly.is_canonical()) throw PreconditionError("vertex cycle is not canonical strictly convex");
    return poly;
  }

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  HullKind kind() const {
    switch (vertices_.size()) {
      case 0: return HullKind::Empty;
      case 1: return HullKind::SinglePoint;
      case 2: return HullKind::Segment;
      default: return HullKind::Proper;
    }
  }
  bool proper() const { return kind() == HullKind::Proper; }

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  bool is_canonical() const {
    const std::size_t n = vertices_.size();
    if (n == 0) return true;
    if (!std::all_of(vertices_.begin(), vertices_.end(), within_capacity)) return false;
    if (std::min_element(vertices_.begin(), vertices_.end()) != vertices_.begin()) return false;
    if (n == 2) return vertices_[0] != vertices_[1];
    if (n < 3) return true;
    for (std::size_t i = 0; i < n; ++i) {
      if (orientation(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]) !=
          Orientation::Left)
        return false;
    }
    return true;
  }

  std::vector<Point> vertices_;
};

/// Andrew's monotone chain over lexicographically sorted, duplicate-free
/// points. Returns the indices of the hull corners in canonical order.
/// Collinear points (including those inside hull edges) are never kept.
inline std::vector<std::size_t> strict_hull_indices(std::span<const Point> sorted) {
  const std::size_t n = sorted.size();
  if (n <= 1) return n == 1 ? std::vector<std::size_t>{0} : std::vector<std::size_t>{};

  std::vector<std::size_t> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(sorted[hull[k - 2]], sorted[hull[k - 1]], sorted[i]) <= 0) --k;
    hull[k++] = i;
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(sorted[hull[k - 2]], sorted[hull[k - 1]], sorted[i]) <= 0) --k;
    hull[k++] = i;
  }
  // Last entry repeats the start.
  hull.resize(k - 1);
  return hull;
}

inline ConvexPolygon strict_hull(std::span<const Point> sorted) {
  assert(std::is_sorted(sorted.begin(), sorted.end()));
  std::vector<Point> verts;
  for (std::size_t i : strict_hull_indices(sorted)) verts.push_back(sorted[i]);
  return ConvexPolygon::from_canonical(std::move(verts));
}

inline ConvexPolygon strict_hull(const PointSet& points) { return strict_hull(points.points()); }

/// Shoelace sum in trapezoid form, sum (x_i - x_{i+1}) (y_i + y_{i+1}); the
/// partial sums stay within 128 bits for convex input. Zero for degenerate kinds.
inline DoubledArea polygon_doubled_area(const ConvexPolygon& poly) {
  if (!poly.proper()) return {};
  const auto v = poly.vertices();
  Wide sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    sum += (Wide{p.x} - q.x) * (Wide{p.y} + q.y);
  }
  assert(sum >= 0);
  return DoubledArea{static_cast<unsigned __int128>(sum)};
}

inline double edge_length(const Point& a, const Point& b) {
  return std::hypot(static_cast<double>(b.x - a.x), static_cast<double>(b.y - a.y));
}

/// Boundary length. A segment is traversed out and back, so it counts twice.
inline double polygon_perimeter(const ConvexPolygon& poly) {
  const auto v = poly.vertices();
  if (v.size() < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) total += edge_length(v[i], v[(i + 1) % v.size()]);
  return total;
}

}  // namespace onion
