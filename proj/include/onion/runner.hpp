#pragma once

// Command pipelines behind the `onion` executable. Argument parsing lives in
// tools/; everything here takes an already-validated RunConfig.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "onion/analysis.hpp"
#include "onion/constructions.hpp"
#include "onion/io.hpp"
#include "onion/peeling.hpp"
#include "onion/proof_lab.hpp"

namespace onion {

enum class Command { Peel, Fit, Lines, Totient, Activity };
enum class FitQuantity { Tau, MaxLayer };

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitCapacity = 3, kExitIo = 4 };

/// Largest grid side the runner will materialise (n^2 points in memory).
inline constexpr std::int64_t kMaxRunnerGridSide = 4096;

struct RunConfig {
  Command command = Command::Peel;
  std::variant<std::monostate, GridSpec, SquaresSpec> source;
  std::vector<std::int64_t> fit_sizes;  // fit only
  std::int64_t lines_n = 0;             // lines only
  std::optional<std::int64_t> mu;
  FitQuantity quantity = FitQuantity::Tau;
  std::optional<std::filesystem::path> trace_path;
  std::optional<std::filesystem::path> csv_path;
  std::optional<std::filesystem::path> svg_path;
  bool count_only = false;
};

struct FitRow {
  std::int64_t n = 0;
  std::size_t value = 0;
};

/// Count-only peels of Grid(n) for each n, run concurrently; rows sorted by n.
inline std::vector<FitRow> measure_grid_scaling(std::vector<std::int64_t> sizes, FitQuantity q) {
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::vector<std::future<FitRow>> jobs;
  for (std::int64_t n : sizes) {
    jobs.push_back(std::async(std::launch::async, [n, q] {
      const LayerCounts c = peel_counts(make_grid({n}));
      return FitRow{n, q == FitQuantity::Tau ? c.tau() : c.max_layer()};
    }));
  }
  std::vector<FitRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

inline ScalingFit fit_rows(const std::vector<FitRow>& rows) {
  std::vector<ScalingSample> samples;
  for (const FitRow& r : rows) samples.push_back({static_cast<double>(r.n), static_cast<double>(r.value)});
  return fit_power_law(std::move(samples));
}

namespace detail {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline GridSpec checked_grid(GridSpec g) {
  if (g.n < 1) throw UsageError("grid side must be >= 1");
  if (g.n > kMaxRunnerGridSide) throw CapacityError("grid side exceeds runner limit of 4096");
  return g;
}

inline void run_peel(const RunConfig& cfg, std::ostream& out) {
  PointSet points;
  SourceDescriptor source;
  std::string label;
  if (const auto* g = std::get_if<GridSpec>(&cfg.source)) {
    points = make_grid(checked_grid(*g));
    source = grid_source(*g);
    label = "grid n=" + std::to_string(g->n);
  } else if (const auto* s = std::get_if<SquaresSpec>(&cfg.source)) {
    points = make_nested_squares(*s);
    source = squares_source(*s);
    label = "squares k=" + std::to_string(s->k);
  } else {
    throw UsageError("peel needs --grid or --squares");
  }

  if (cfg.count_only) {
    if (cfg.trace_path || cfg.csv_path || cfg.svg_path)
      throw UsageError("--count-only cannot write traces, summaries or figures");
    const LayerCounts c = peel_counts(points);
    out << "peel " << label << " points=" << points.size() << " tau=" << c.tau()
        << " max_layer=" << c.max_layer() << '\n';
    return;
  }

  const PeelingTrace trace = peel(points, source);
  if (cfg.trace_path) write_trace_json(trace, *cfg.trace_path);
  if (cfg.csv_path) write_summary_csv(trace, *cfg.csv_path);
  if (cfg.svg_path) render_svg(trace, *cfg.svg_path);
  const TraceSummary s = trace_summary(trace);
  out << "peel " << label << " points=" << s.total_points << " tau=" << s.tau
      << " max_layer=" << s.max_vertex_count << " argmax_layer=" << s.argmax_index << '\n';
}

inline void run_fit(const RunConfig& cfg, std::ostream& out) {
  if (cfg.fit_sizes.size() < 2) throw UsageError("fit needs at least two grid sizes");
  for (std::int64_t n : cfg.fit_sizes) {
    if (n < 2) throw UsageError("fit grid sizes must be >= 2");
    checked_grid({n});
  }
  const std::vector<FitRow> rows = measure_grid_scaling(cfg.fit_sizes, cfg.quantity);
  ScalingFit fit;
  try {
    fit = fit_rows(rows);
  } catch (const DegenerateInputError& e) {
    throw UsageError(e.what());
  }
  const char* qname = cfg.quantity == FitQuantity::Tau ? "tau" : "maxlayer";
  for (const FitRow& r : rows) out << "n=" << r.n << ' ' << qname << '=' << r.value << '\n';
  out << "fit " << qname << " slope=" << format_double(fit.slope)
      << " intercept=" << format_double(fit.intercept) << " r2=" << format_double(fit.r_squared)
      << '\n';
  if (cfg.csv_path) {
    std::string csv = std::string("n,") + qname + '\n';
    for (const FitRow& r : rows) csv += std::to_string(r.n) + ',' + std::to_string(r.value) + '\n';
    write_file_atomic(*cfg.csv_path, csv);
  }
}

inline void run_lines(const RunConfig& cfg, std::ostream& out) {
  if (cfg.lines_n < 2) throw UsageError("lines needs --n >= 2");
  if (!cfg.mu || *cfg.mu < 1) throw UsageError("lines needs --mu >= 1");
  if (cfg.lines_n > (std::int64_t{1} << 31) || *cfg.mu > (std::int64_t{1} << 20))
    throw CapacityError("lines parameters too large");
  const std::int64_t bound = 4 * cfg.lines_n * *cfg.mu;
  std::size_t worst = 0;
  for (const Direction& v : primitive_vectors(*cfg.mu).vectors) {
    const std::size_t c = count_grid_lines(v, cfg.lines_n);
    worst = std::max(worst, c);
    out << "v=(" << v.vx() << ',' << v.vy() << ") lines=" << c << '\n';
  }
  out << "lines n=" << cfg.lines_n << " mu=" << *cfg.mu << " max=" << worst << " bound=" << bound
      << (static_cast<std::int64_t>(worst) <= bound ? " ok" : " VIOLATED") << '\n';
}

inline void run_totient(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.mu || *cfg.mu < 1) throw UsageError("totient needs --mu >= 1");
  std::uint64_t sum = 0;
  for (std::int64_t x = 1; x <= *cfg.mu; ++x) sum += totient(static_cast<std::uint64_t>(x));
  const double mu = static_cast<double>(*cfg.mu);
  out << "totient mu=" << *cfg.mu << " sum=" << sum << " density=" << format_double(static_cast<double>(sum) / (mu * mu))
      << '\n';
}

inline void run_activity(const RunConfig& cfg, std::ostream& out) {
  const auto* g = std::get_if<GridSpec>(&cfg.source);
  if (g == nullptr) throw UsageError("activity needs --grid");
  if (!cfg.mu || *cfg.mu < 1) throw UsageError("activity needs --mu >= 1");
  const PeelingTrace trace = peel(make_grid(checked_grid(*g)), grid_source(*g));
  const ActivityTrace act = activity_trace(trace, g->n, *cfg.mu, {true, true});
  if (cfg.csv_path) {
    std::string csv = "layer_index,vx,vy,active,lines_meeting_hull\n";
    for (const IterationActivity& it : act.per_iteration) {
      for (std::size_t d = 0; d < act.directions.size(); ++d) {
        csv += std::to_string(it.index) + ',' + std::to_string(act.directions[d].vx()) + ',' +
               std::to_string(act.directions[d].vy()) + ',' + (it.active[d] ? "1" : "0") + ',' +
               std::to_string(it.lines_meeting_hull[d]) + '\n';
      }
    }
    write_file_atomic(*cfg.csv_path, csv);
  }
  std::size_t with_activity = 0;
  for (const auto& it : act.per_iteration) with_activity += it.active_count > 0 ? 1 : 0;
  out << "activity n=" << g->n << " mu=" << act.mu << " directions=" << act.directions.size()
      << " tau=" << trace.tau << " alpha=" << act.alpha << " m_budget=" << act.m_budget
      << " layers_with_active=" << with_activity << '\n';
}

}  // namespace detail

/// Runs one command. Returns the process exit status; diagnostics go to `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Peel: detail::run_peel(cfg, out); break;
      case Command::Fit: detail::run_fit(cfg, out); break;
      case Command::Lines: detail::run_lines(cfg, out); break;
      case Command::Totient: detail::run_totient(cfg, out); break;
      case Command::Activity: detail::run_activity(cfg, out); break;
    }
    return kExitOk;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace onion
