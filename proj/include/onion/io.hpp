#pragma once

// Trace persistence (JSON), per-layer summaries (CSV) and layer figures (SVG).

#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include <json.hpp>

#include "onion/analysis.hpp"
#include "onion/geom_core.hpp"
#include "onion/peeling.hpp"

namespace onion {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal that parses back to exactly `v`.
inline std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::logic_error("to_chars failed");
  std::string s(buf.data(), end);
  // Keep JSON readers from taking whole-valued doubles for integers.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

/// Writes via a sibling temp file and rename, so readers never see a partial file.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into " + path.string());
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// JSON
//
// Emitted by hand: doubled areas may need more than 64 bits and must still be
// written as plain integers.

inline std::string trace_to_json(const PeelingTrace& trace) {
  std::string out;
  out += "{\"source\":{\"generator\":";
  out += nlohmann::json(trace.source.generator).dump();
  out += ",\"params\":[";
  for (std::size_t i = 0; i < trace.source.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(trace.source.params[i]);
  }
  out += "]},\"tau\":" + std::to_string(trace.tau) + ",\"layers\":[";
  for (std::size_t li = 0; li < trace.layers.size(); ++li) {
    const LayerRecord& l = trace.layers[li];
    if (li) out += ',';
    out += "\n{\"index\":" + std::to_string(l.index);
    out += ",\"vertex_count\":" + std::to_string(l.vertex_count);
    out += ",\"doubled_area\":" + to_string(l.doubled_area);
    out += ",\"perimeter\":" + format_double(l.perimeter);
    out += ",\"vertices\":[";
    const auto verts = l.polygon.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (i) out += ',';
      out += '[' + std::to_string(verts[i].x) + ',' + std::to_string(verts[i].y) + ']';
    }
    out += "]}";
  }
  out += "]}\n";
  return out;
}

/// Parses a trace document. Doubled areas are re-derived from the vertices and
/// checked against the stored value (exactly when it fits in 64 bits, to
/// double precision otherwise).
inline PeelingTrace trace_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(std::string("malformed trace JSON: ") + e.what());
  }
  try {
    PeelingTrace trace;
    trace.source.generator = doc.at("source").at("generator").get<std::string>();
    trace.source.params = doc.at("source").at("params").get<std::vector<std::int64_t>>();
    trace.tau = doc.at("tau").get<std::size_t>();
    for (const auto& jl : doc.at("layers")) {
      std::vector<Point> verts;
      for (const auto& jv : jl.at("vertices")) verts.push_back({jv.at(0).get<Coord>(), jv.at(1).get<Coord>()});
      LayerRecord rec = make_layer_record(jl.at("index").get<std::size_t>(),
                                          ConvexPolygon::from_canonical(std::move(verts)));
      if (jl.at("vertex_count").get<std::size_t>() != rec.vertex_count)
        throw IoError("vertex_count disagrees with vertices");
      const auto& ja = jl.at("doubled_area");
      const bool area_ok =
          ja.is_number_unsigned()
              ? static_cast<unsigned __int128>(ja.get<std::uint64_t>()) == rec.doubled_area.value
          : ja.is_number_float()
              ? std::abs(ja.get<double>() - rec.doubled_area.as_double()) <=
                    1e-12 * rec.doubled_area.as_double()
              : false;
      if (!area_ok) throw IoError("doubled_area disagrees with vertices");
      rec.perimeter = jl.at("perimeter").get<double>();
      trace.layers.push_back(std::move(rec));
    }
    if (trace.tau != trace.layers.size()) throw IoError("tau disagrees with layer count");
    return trace;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("trace JSON schema error: ") + e.what());
  } catch (const PreconditionError& e) {
    throw IoError(std::string("trace JSON holds a non-canonical polygon: ") + e.what());
  }
}

inline void write_trace_json(const PeelingTrace& trace, const std::filesystem::path& path) {
  write_file_atomic(path, trace_to_json(trace));
}

inline PeelingTrace read_trace_json(const std::filesystem::path& path) {
  return trace_from_json(read_file(path));
}

// ---------------------------------------------------------------------------
// CSV

inline std::string trace_to_csv(const PeelingTrace& trace) {
  std::string out = "layer_index,vertex_count,doubled_area,perimeter,isoperimetric_ratio\n";
  for (const LayerRecord& l : trace.layers) {
    out += std::to_string(l.index) + ',' + std::to_string(l.vertex_count) + ',' +
           to_string(l.doubled_area) + ',' + format_double(l.perimeter) + ',';
    if (l.polygon.proper()) out += format_double(isoperimetric_ratio(l.polygon));
    out += '\n';
  }
  return out;
}

inline void write_summary_csv(const PeelingTrace& trace, const std::filesystem::path& path) {
  write_file_atomic(path, trace_to_csv(trace));
}

// ---------------------------------------------------------------------------
// SVG

/// One closed polygon per proper layer; segments and single points become
/// <line> and <circle>. Hue runs from red (outermost) to violet (innermost).
inline std::string trace_to_svg(const PeelingTrace& trace) {
  std::ostringstream svg;
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool have_box = false;
  for (const LayerRecord& l : trace.layers) {
    for (const Point& p : l.polygon.vertices()) {
      const double x = static_cast<double>(p.x), y = static_cast<double>(p.y);
      if (!have_box) {
        min_x = max_x = x;
        min_y = max_y = y;
        have_box = true;
      }
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
  const double margin = 0.05 * span;
  // y is mirrored so the lattice's y axis points up.
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(min_x - margin)
      << ' ' << format_double(-max_y - margin) << ' '
      << format_double(max_x - min_x + 2 * margin) << ' '
      << format_double(max_y - min_y + 2 * margin) << "\">\n";
  svg << "<g fill=\"none\" stroke-width=\"1\" stroke-linejoin=\"round\">\n";
  const double tau = static_cast<double>(std::max<std::size_t>(trace.tau, 1));
  for (const LayerRecord& l : trace.layers) {
    const double hue = 270.0 * static_cast<double>(l.index - 1) / tau;
    const std::string colour = "hsl(" + format_double(std::round(hue * 100) / 100) + ",80%,45%)";
    const auto v = l.polygon.vertices();
    switch (l.polygon.kind()) {
      case HullKind::Proper: {
        svg << "<polygon data-layer=\"" << l.index << "\" stroke=\"" << colour
            << "\" vector-effect=\"non-scaling-stroke\" points=\"";
        for (std::size_t i = 0; i < v.size(); ++i) svg << (i ? " " : "") << v[i].x << ',' << -v[i].y;
        svg << "\"/>\n";
        break;
      }
      case HullKind::Segment:
        svg << "<line data-layer=\"" << l.index << "\" stroke=\"" << colour
            << "\" vector-effect=\"non-scaling-stroke\" x1=\"" << v[0].x << "\" y1=\"" << -v[0].y
            << "\" x2=\"" << v[1].x << "\" y2=\"" << -v[1].y << "\"/>\n";
        break;
      case HullKind::SinglePoint:
        svg << "<circle data-layer=\"" << l.index << "\" fill=\"" << colour << "\" cx=\"" << v[0].x
            << "\" cy=\"" << -v[0].y << "\" r=\"" << format_double(0.01 * span) << "\"/>\n";
        break;
      case HullKind::Empty:
        break;
    }
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

inline void render_svg(const PeelingTrace& trace, const std::filesystem::path& path) {
  write_file_atomic(path, trace_to_svg(trace));
}

}  // namespace onion
