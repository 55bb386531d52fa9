#pragma once

// Convex-layer peeling: repeatedly remove the strict hull corners of the
// remaining points until none are left.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "onion/geom_core.hpp"

namespace onion {

/// Where a point set came from: generator name plus integer parameters,
/// e.g. {"grid", {11}} or {"squares", {4}}.
struct SourceDescriptor {
  std::string generator = "custom";
  std::vector<std::int64_t> params;

  friend bool operator==(const SourceDescriptor&, const SourceDescriptor&) = default;
};

struct LayerRecord {
  std::size_t index = 0;  // 1-based iteration number
  ConvexPolygon polygon;
  std::size_t vertex_count = 0;
  DoubledArea doubled_area;
  double perimeter = 0.0;

  friend bool operator==(const LayerRecord&, const LayerRecord&) = default;
};

inline LayerRecord make_layer_record(std::size_t index, ConvexPolygon polygon) {
  LayerRecord rec;
  rec.index = index;
  rec.vertex_count = polygon.size();
  rec.doubled_area = polygon_doubled_area(polygon);
  rec.perimeter = polygon_perimeter(polygon);
  rec.polygon = std::move(polygon);
  return rec;
}

struct PeelingTrace {
  SourceDescriptor source;
  std::vector<LayerRecord> layers;
  std::size_t tau = 0;

  std::size_t total_points() const {
    std::size_t s = 0;
    for (const auto& l : layers) s += l.vertex_count;
    return s;
  }

  friend bool operator==(const PeelingTrace&, const PeelingTrace&) = default;
};

/// Count-only result: one vertex count per layer, no polygons.
struct LayerCounts {
  std::vector<std::size_t> sizes;

  std::size_t tau() const { return sizes.size(); }
  std::size_t max_layer() const {
    std::size_t m = 0;
    for (std::size_t s : sizes) m = std::max(m, s);
    return m;
  }
};

namespace detail {

// One sorted array, rescanned each round; corners are flagged and compacted
// away so the array stays sorted without re-sorting.
template <typename OnLayer>
void peel_sorted(std::vector<Point> pts, OnLayer&& on_layer) {
  std::vector<unsigned char> dead(pts.size(), 0);
  std::size_t index = 0;
  while (!pts.empty()) {
    const std::vector<std::size_t> corners = strict_hull_indices(pts);
    on_layer(++index, std::span<const Point>(pts), std::span<const std::size_t>(corners));
    for (std::size_t c : corners) dead[c] = 1;
    std::size_t w = 0;
    for (std::size_t r = 0; r < pts.size(); ++r) {
      if (!dead[r]) pts[w++] = pts[r];
    }
    pts.resize(w);
    std::fill(dead.begin(), dead.begin() + static_cast<std::ptrdiff_t>(w), 0);
  }
}

// Gift wrapping from the lexicographically smallest point. Among collinear
// candidates the farthest wins, so edge-interior points are skipped.
inline std::vector<Point> jarvis_strict_hull(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return pts;
  const Point start = *std::min_element(pts.begin(), pts.end());
  auto dist2 = [](const Point& a, const Point& b) {
    const Wide dx = Wide{b.x} - a.x;
    const Wide dy = Wide{b.y} - a.y;
    return dx * dx + dy * dy;
  };
  std::vector<Point> hull;
  Point cur = start;
  do {
    hull.push_back(cur);
    const Point* best = nullptr;
    for (const Point& r : pts) {
      if (r == cur) continue;
      if (best == nullptr) {
        best = &r;
        continue;
      }
      const Wide turn = cross(cur, *best, r);
      if (turn < 0 || (turn == 0 && dist2(cur, r) > dist2(cur, *best))) best = &r;
    }
    cur = *best;
  } while (cur != start && hull.size() <= pts.size());
  return hull;
}

}  // namespace detail

/// Full peeling trace using the linear-per-round monotone chain scan.
inline PeelingTrace peel(const PointSet& points, SourceDescriptor source = {}) {
  PeelingTrace trace;
  trace.source = std::move(source);
  detail::peel_sorted(std::vector<Point>(points.begin(), points.end()),
                      [&](std::size_t index, std::span<const Point> pts,
                          std::span<const std::size_t> corners) {
                        std::vector<Point> verts;
                        verts.reserve(corners.size());
                        for (std::size_t c : corners) verts.push_back(pts[c]);
                        trace.layers.push_back(
                            make_layer_record(index, ConvexPolygon::from_canonical(std::move(verts))));
                      });
  trace.tau = trace.layers.size();
  return trace;
}

/// Memory-lean peeling: layer sizes only.
inline LayerCounts peel_counts(const PointSet& points) {
  LayerCounts counts;
  detail::peel_sorted(std::vector<Point>(points.begin(), points.end()),
                      [&](std::size_t, std::span<const Point>, std::span<const std::size_t> corners) {
                        counts.sizes.push_back(corners.size());
                      });
  return counts;
}

inline std::size_t tau_of(const PointSet& points) { return peel_counts(points).tau(); }

/// Reference peeler: every round rebuilds and re-sorts the remaining points and
/// recomputes the hull from scratch with gift wrapping. Only for small inputs.
inline PeelingTrace peel_naive(const PointSet& points, SourceDescriptor source = {}) {
  PeelingTrace trace;
  trace.source = std::move(source);
  std::set<Point> remaining(points.begin(), points.end());
  std::size_t index = 0;
  while (!remaining.empty()) {
    // Reversed copy, then sorted again: no reliance on the set's ordering.
    std::vector<Point> current(remaining.rbegin(), remaining.rend());
    std::sort(current.begin(), current.end());
    std::vector<Point> hull = detail::jarvis_strict_hull(current);
    for (const Point& p : hull) remaining.erase(p);
    trace.layers.push_back(make_layer_record(++index, ConvexPolygon::from_canonical(std::move(hull))));
  }
  trace.tau = trace.layers.size();
  return trace;
}

}  // namespace onion
