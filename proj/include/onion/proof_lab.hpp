#pragma once

// Counting machinery behind the O(n^{4/3}) upper bound: totients, primitive
// directions, families of lattice lines with a fixed direction, and which
// directions are "active" (both supporting lines lie along hull edges).

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "onion/geom_core.hpp"
#include "onion/peeling.hpp"

namespace onion {

/// Primitive lattice direction (vx, vy) with 0 <= vy < vx and gcd = 1.
class Direction {
 public:
  Direction(std::int64_t vx, std::int64_t vy) : vx_(vx), vy_(vy) {
    if (vx < 1 || vy < 0 || vy >= vx || std::gcd(vx, vy) != 1)
      throw PreconditionError("direction must satisfy 0 <= vy < vx and gcd(vx, vy) = 1");
  }

  std::int64_t vx() const { return vx_; }
  std::int64_t vy() const { return vy_; }

  /// Line offset of p: every point of one line of this direction shares it.
  std::int64_t offset(const Point& p) const { return vx_ * p.y - vy_ * p.x; }

  friend auto operator<=>(const Direction&, const Direction&) = default;

 private:
  std::int64_t vx_;
  std::int64_t vy_;
};

inline std::uint64_t totient(std::uint64_t x) {
  if (x < 1) throw PreconditionError("totient is defined for x >= 1");
  std::uint64_t result = x;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

struct PrimitiveVectorSet {
  std::int64_t mu = 0;
  std::vector<Direction> vectors;  // sorted by (vx, vy)

  std::size_t size() const { return vectors.size(); }
};

/// All primitive directions with vx <= mu. Each row vx is enumerated with a
/// gcd filter and checked against totient(vx).
inline PrimitiveVectorSet primitive_vectors(std::int64_t mu) {
  if (mu < 1) throw PreconditionError("mu must be >= 1");
  PrimitiveVectorSet set;
  set.mu = mu;
  for (std::int64_t vx = 1; vx <= mu; ++vx) {
    const std::size_t before = set.vectors.size();
    for (std::int64_t vy = 0; vy < vx; ++vy) {
      if (std::gcd(vx, vy) == 1) set.vectors.emplace_back(vx, vy);
    }
    if (set.vectors.size() - before != totient(static_cast<std::uint64_t>(vx)))
      throw std::logic_error("primitive vector row disagrees with totient");
  }
  return set;
}

namespace detail {

struct ExtGcd {
  std::int64_t g, a, b;  // a*x + b*y = g
};

inline ExtGcd ext_gcd(std::int64_t x, std::int64_t y) {
  if (y == 0) return {x, 1, 0};
  const ExtGcd r = ext_gcd(y, x % y);
  return {r.g, r.b, r.a - (x / y) * r.b};
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace detail

/// Does the line {vx*y - vy*x = c} contain a point of {1..n}^2?
/// Lattice points on it are (x0 + vx t, y0 + vy t) for a particular solution
/// (x0, y0); the answer is whether the two t-ranges overlap.
inline bool line_meets_grid(const Direction& v, std::int64_t c, std::int64_t n) {
  if (v.vy() == 0) return c >= 1 && c <= n;  // v = (1, 0): horizontal line y = c
  const detail::ExtGcd e = detail::ext_gcd(v.vx(), v.vy());  // vx*a + vy*b = 1
  const Wide y0w = Wide{e.a} * c;
  const Wide x0w = -Wide{e.b} * c;
  // Reduce the particular solution so later arithmetic stays in 64 bits.
  const std::int64_t shift = static_cast<std::int64_t>(x0w / v.vx());
  const std::int64_t x0 = static_cast<std::int64_t>(x0w - Wide{shift} * v.vx());
  const std::int64_t y0 = static_cast<std::int64_t>(y0w - Wide{shift} * v.vy());
  const std::int64_t lo = std::max(detail::ceil_div(1 - x0, v.vx()), detail::ceil_div(1 - y0, v.vy()));
  const std::int64_t hi = std::min(detail::floor_div(n - x0, v.vx()), detail::floor_div(n - y0, v.vy()));
  return lo <= hi;
}

/// |L_v|: distinct lines of direction v through at least one point of {1..n}^2.
/// Offsets span [vx - vy*n, vx*n - vy]; for vy >= 2 or vx > n that interval
/// has holes, so every offset is tested.
inline std::size_t count_grid_lines(const Direction& v, std::int64_t n) {
  if (n < 1) throw PreconditionError("grid side must be >= 1");
  const std::int64_t lo = v.offset({n, 1});
  const std::int64_t hi = v.offset({1, n});
  std::size_t count = 0;
  for (std::int64_t c = lo; c <= hi; ++c) count += line_meets_grid(v, c, n) ? 1 : 0;
  return count;
}

/// |L_v cap C|: lines of L_v (membership judged against the full grid) that
/// touch the hull.
inline std::size_t count_lines_meeting_hull(const Direction& v, const ConvexPolygon& hull,
                                            std::int64_t n) {
  const auto verts = hull.vertices();
  if (verts.empty()) return 0;
  std::int64_t lo = v.offset(verts[0]);
  std::int64_t hi = lo;
  for (const Point& p : verts) {
    if (p.x < 1 || p.x > n || p.y < 1 || p.y > n)
      throw PreconditionError("hull vertex lies outside the grid");
    lo = std::min(lo, v.offset(p));
    hi = std::max(hi, v.offset(p));
  }
  std::size_t count = 0;
  for (std::int64_t c = lo; c <= hi; ++c) count += line_meets_grid(v, c, n) ? 1 : 0;
  return count;
}

/// Both supporting lines of direction v run along hull edges. On a strictly
/// convex CCW polygon that means one edge points along +v and another along -v.
/// Degenerate hulls are never active.
inline bool is_active(const Direction& v, const ConvexPolygon& hull) {
  if (!hull.proper()) return false;
  const auto verts = hull.vertices();
  bool forward = false;
  bool backward = false;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Point& a = verts[i];
    const Point& b = verts[(i + 1) % verts.size()];
    const Wide ex = Wide{b.x} - a.x;
    const Wide ey = Wide{b.y} - a.y;
    if (ex * v.vy() - ey * v.vx() != 0) continue;
    (ex * v.vx() + ey * v.vy() > 0 ? forward : backward) = true;
  }
  return forward && backward;
}

struct IterationActivity {
  std::size_t index = 0;         // layer index i
  std::size_t active_count = 0;  // n_i
  std::vector<bool> active;      // per direction, parallel to ActivityTrace::directions
  std::vector<std::size_t> lines_meeting_hull;  // per direction; empty unless requested
};

struct ActivityTrace {
  std::int64_t n_param = 0;
  std::int64_t mu = 0;
  std::vector<Direction> directions;
  std::vector<IterationActivity> per_iteration;
  std::uint64_t alpha = 0;     // sum of n_i
  std::uint64_t m_budget = 0;  // 4 n mu
};

struct ActivityOptions {
  bool record_flags = true;
  bool record_line_counts = false;
};

inline ActivityTrace activity_trace(const PeelingTrace& trace, std::int64_t n, std::int64_t mu,
                                    ActivityOptions options = {}) {
  ActivityTrace out;
  out.n_param = n;
  out.mu = mu;
  out.directions = primitive_vectors(mu).vectors;
  out.m_budget = 4 * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(mu);
  for (const LayerRecord& layer : trace.layers) {
    IterationActivity it;
    it.index = layer.index;
    for (const Direction& v : out.directions) {
      const bool a = is_active(v, layer.polygon);
      it.active_count += a ? 1 : 0;
      if (options.record_flags) it.active.push_back(a);
      if (options.record_line_counts)
        it.lines_meeting_hull.push_back(count_lines_meeting_hull(v, layer.polygon, n));
    }
    out.alpha += it.active_count;
    out.per_iteration.push_back(std::move(it));
  }
  return out;
}

/// Grid side is read from the trace's source descriptor.
inline ActivityTrace activity_trace(const PeelingTrace& trace, std::int64_t mu,
                                    ActivityOptions options = {}) {
  if (trace.layers.empty()) {
    ActivityTrace out;
    out.mu = mu;
    out.directions = primitive_vectors(mu).vectors;
    if (trace.source.generator == "grid" && trace.source.params.size() == 1)
      out.n_param = trace.source.params[0];
    out.m_budget = 4 * static_cast<std::uint64_t>(out.n_param) * static_cast<std::uint64_t>(mu);
    return out;
  }
  if (trace.source.generator != "grid" || trace.source.params.size() != 1)
    throw PreconditionError("activity tracking needs a trace peeled from a grid");
  return activity_trace(trace, trace.source.params[0], mu, options);
}

}  // namespace onion
