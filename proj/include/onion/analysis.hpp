#pragma once

// Power-law fits and shape diagnostics over peeling traces.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "onion/geom_core.hpp"
#include "onion/peeling.hpp"

namespace onion {

class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ScalingSample {
  double n = 0.0;
  double value = 0.0;
};

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<ScalingSample> samples;
};

/// Ordinary least squares of ln(value) on ln(n); the slope is the exponent.
inline ScalingFit fit_power_law(std::vector<ScalingSample> samples) {
  std::set<double> distinct;
  for (const auto& s : samples) {
    if (!(s.n > 0.0) || !(s.value > 0.0))
      throw DegenerateInputError("power-law samples need positive n and value");
    distinct.insert(s.n);
  }
  if (distinct.size() < 2) throw DegenerateInputError("power-law fit needs >= 2 distinct n");

  const double m = static_cast<double>(samples.size());
  double sx = 0, sy = 0;
  for (const auto& s : samples) {
    sx += std::log(s.n);
    sy += std::log(s.value);
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& s : samples) {
    const double dx = std::log(s.n) - mx;
    const double dy = std::log(s.value) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  ScalingFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy == 0.0) {
    fit.r_squared = 1.0;
  } else {
    double ss_res = 0;
    for (const auto& s : samples) {
      const double r = std::log(s.value) - (fit.intercept + fit.slope * std::log(s.n));
      ss_res += r * r;
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  }
  fit.samples = std::move(samples);
  return fit;
}

/// 4 pi A / P^2; 1 only for a disk.
inline double isoperimetric_ratio(const ConvexPolygon& poly) {
  if (!poly.proper()) throw DegenerateInputError("isoperimetric ratio needs a proper polygon");
  const double area = polygon_doubled_area(poly).as_double() / 2.0;
  const double perim = polygon_perimeter(poly);
  return 4.0 * std::numbers::pi * area / (perim * perim);
}

struct TraceSummary {
  std::size_t tau = 0;
  std::size_t max_vertex_count = 0;
  std::size_t argmax_index = 0;  // 1-based; 0 for an empty trace
  std::size_t total_points = 0;
  std::vector<std::pair<std::size_t, double>> isoperimetric;  // (layer index, ratio), proper layers
};

inline TraceSummary trace_summary(const PeelingTrace& trace) {
  TraceSummary s;
  s.tau = trace.tau;
  for (const LayerRecord& l : trace.layers) {
    s.total_points += l.vertex_count;
    if (l.vertex_count > s.max_vertex_count) {
      s.max_vertex_count = l.vertex_count;
      s.argmax_index = l.index;
    }
    if (l.polygon.proper()) s.isoperimetric.emplace_back(l.index, isoperimetric_ratio(l.polygon));
  }
  return s;
}

}  // namespace onion
