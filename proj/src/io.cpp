#include "pauliwalk/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace pauliwalk {

namespace {

void write_meta_json(std::ostream& os, const RunMeta& meta) {
  os << "\"meta\":{\"lattice\":\"" << meta.lattice << "\",\"steps\":" << meta.steps
     << ",\"thetas\":[";
  for (std::size_t i = 0; i < meta.thetas.size(); ++i) {
    if (i) os << ",";
    os << format_double(meta.thetas[i]);
  }
  os << "],\"init\":\"" << meta.init << "\"}";
}

struct Row {
  Coord c;
  int dimension;
  Real p;
  bool has_amplitudes;
  Spinor amp;
};

void write_rows_csv(std::ostream& os, const std::vector<std::string>& axes,
                    const std::vector<Row>& rows, bool amplitudes) {
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (i) os << ",";
    os << axes[i];
  }
  os << ",p";
  if (amplitudes) os << ",re_down,im_down,re_up,im_up";
  os << "\n";
  for (const Row& r : rows) {
    for (int i = 0; i < r.dimension; ++i) {
      if (i) os << ",";
      os << r.c[i];
    }
    os << "," << format_double(r.p);
    if (amplitudes) {
      os << "," << format_double(r.amp(0).real()) << "," << format_double(r.amp(0).imag())
         << "," << format_double(r.amp(1).real()) << "," << format_double(r.amp(1).imag());
    }
    os << "\n";
  }
}

void write_rows_json(std::ostream& os, const std::vector<std::string>& axes,
                     const std::vector<Row>& rows, bool amplitudes,
                     const RunMeta* meta) {
  os << "{";
  if (meta != nullptr) {
    write_meta_json(os, *meta);
    os << ",";
  }
  os << "\"sites\":[";
  bool first = true;
  for (const Row& r : rows) {
    if (!first) os << ",";
    first = false;
    os << "{";
    for (int i = 0; i < r.dimension; ++i) {
      os << "\"" << axes[i] << "\":" << r.c[i] << ",";
    }
    os << "\"p\":" << format_double(r.p);
    if (amplitudes) {
      os << ",\"re_down\":" << format_double(r.amp(0).real())
         << ",\"im_down\":" << format_double(r.amp(0).imag())
         << ",\"re_up\":" << format_double(r.amp(1).real())
         << ",\"im_up\":" << format_double(r.amp(1).imag());
    }
    os << "}";
  }
  os << "]}\n";
}

std::vector<Row> field_rows(const LatticeField& field) {
  std::vector<Row> rows;
  const Coord& ext = field.extent();
  const int dim = field.dimension();
  Coord lo{0, 0, 0}, hi{0, 0, 0};
  for (int i = 0; i < dim; ++i) {
    lo[i] = -ext[i];
    hi[i] = ext[i];
  }
  Coord c = lo;
  while (true) {
    const Spinor& s = field.at(c);
    const Real p = s.squaredNorm();
    if (p >= kSerializationThreshold) rows.push_back({c, dim, p, true, s});
    int i = dim - 1;
    for (; i >= 0; --i) {
      if (++c[i] <= hi[i]) break;
      c[i] = lo[i];
    }
    if (i < 0) break;
  }
  return rows;
}

std::vector<Row> dist_rows(const Distribution& d) {
  std::vector<Row> rows;
  for (const auto& [c, p] : d.p) {
    if (p >= kSerializationThreshold) {
      rows.push_back({c, d.dimension, p, false, Spinor::Zero()});
    }
  }
  return rows;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  return os;
}

RunMeta meta_from_json(const nlohmann::json& j) {
  RunMeta m;
  m.lattice = j.value("lattice", std::string());
  m.steps = j.value("steps", 0);
  if (j.contains("thetas")) {
    for (const auto& v : j["thetas"]) m.thetas.push_back(v.get<Real>());
  }
  m.init = j.value("init", std::string());
  return m;
}

LoadedDistribution read_json(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("invalid JSON: ") + e.what());
  }
  LoadedDistribution out;
  if (j.contains("meta")) out.meta = meta_from_json(j["meta"]);
  const char* axis_keys[3] = {"x", "y", "z"};
  std::vector<std::string> axes;
  if (j.contains("sites") && !j["sites"].empty()) {
    for (const char* k : axis_keys) {
      if (j["sites"][0].contains(k)) axes.push_back(k);
    }
  }
  out.dist.dimension = static_cast<int>(axes.size());
  out.dist.axis_names = axes;
  for (const auto& site : j["sites"]) {
    Coord c{0, 0, 0};
    for (std::size_t i = 0; i < axes.size(); ++i) c[i] = site[axes[i]].get<int>();
    out.dist.p[c] += site["p"].get<Real>();
  }
  return out;
}

LoadedDistribution read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw IoError("empty CSV input");
  std::vector<std::string> cols;
  std::stringstream header(line);
  std::string tok;
  while (std::getline(header, tok, ',')) cols.push_back(tok);
  int ncoord = 0;
  while (ncoord < static_cast<int>(cols.size()) && cols[ncoord] != "p") ++ncoord;
  if (ncoord == static_cast<int>(cols.size()) || ncoord < 1 || ncoord > 3) {
    throw IoError("CSV header must be <axes...>,p[,amplitudes...]");
  }
  LoadedDistribution out;
  out.dist.dimension = ncoord;
  out.dist.axis_names.assign(cols.begin(), cols.begin() + ncoord);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    Coord c{0, 0, 0};
    for (int i = 0; i < ncoord; ++i) {
      if (!std::getline(row, tok, ',')) throw IoError("short CSV row: " + line);
      c[i] = std::stoi(tok);
    }
    if (!std::getline(row, tok, ',')) throw IoError("missing p column: " + line);
    out.dist.p[c] += std::stod(tok);
  }
  return out;
}

struct Rgb {
  int r, g, b;
};

Rgb colormap_value(HeatmapOptions::Colormap map, Real v) {
  v = std::clamp(v, 0.0, 1.0);
  if (map == HeatmapOptions::Colormap::Gray) {
    const int g = 255 - static_cast<int>(std::lround(v * 255.0));
    return {g, g, g};
  }
  // 7-stop blue-yellow ramp, low to high intensity.
  static const Rgb stops[7] = {{8, 29, 88},    {37, 52, 148},  {34, 94, 168},
                               {29, 145, 192}, {65, 182, 196}, {199, 233, 180},
                               {255, 255, 217}};
  const Real pos = v * 6.0;
  const int lo = std::min(5, static_cast<int>(pos));
  const Real f = pos - lo;
  auto mix = [f](int a, int b) {
    return static_cast<int>(std::lround(a + f * (b - a)));
  };
  return {mix(stops[lo].r, stops[lo + 1].r), mix(stops[lo].g, stops[lo + 1].g),
          mix(stops[lo].b, stops[lo + 1].b)};
}

void write_hex_color(std::ostream& os, const Rgb& c) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", c.r, c.g, c.b);
  os << buf;
}

}  // namespace

std::string format_double(Real v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

FileFormat format_from_string(const std::string& name) {
  if (name == "csv") return FileFormat::Csv;
  if (name == "json") return FileFormat::Json;
  throw Error("unknown format: " + name);
}

void write_field(const LatticeField& field, FileFormat format, std::ostream& os,
                 const RunMeta* meta) {
  const auto axes = axis_labels(field.kind());
  const auto rows = field_rows(field);
  if (format == FileFormat::Csv) {
    write_rows_csv(os, axes, rows, true);
  } else {
    write_rows_json(os, axes, rows, true, meta);
  }
  if (!os) throw IoError("write failed");
}

void write_distribution(const Distribution& d, FileFormat format, std::ostream& os,
                        const RunMeta* meta) {
  const auto rows = dist_rows(d);
  if (format == FileFormat::Csv) {
    write_rows_csv(os, d.axis_names, rows, false);
  } else {
    write_rows_json(os, d.axis_names, rows, false, meta);
  }
  if (!os) throw IoError("write failed");
}

void write_field_file(const LatticeField& field, FileFormat format,
                      const std::string& path, const RunMeta* meta) {
  auto os = open_out(path);
  write_field(field, format, os, meta);
}

void write_distribution_file(const Distribution& d, FileFormat format,
                             const std::string& path, const RunMeta* meta) {
  auto os = open_out(path);
  write_distribution(d, format, os, meta);
}

LoadedDistribution read_distribution_stream(std::istream& is) {
  int ch = is.peek();
  while (ch == ' ' || ch == '\n' || ch == '\r' || ch == '\t') {
    is.get();
    ch = is.peek();
  }
  if (ch == '{') return read_json(is);
  return read_csv(is);
}

LoadedDistribution read_distribution(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open for reading: " + path);
  return read_distribution_stream(is);
}

void render_heatmap(const Distribution& d, std::ostream& os,
                    const HeatmapOptions& options) {
  if (d.dimension != 2) {
    throw DimensionError("render_heatmap: distribution must be two-dimensional");
  }
  int rx = 1, ry = 1;
  Real pmax = 0.0;
  for (const auto& [c, p] : d.p) {
    if (p < kSerializationThreshold) continue;
    rx = std::max({rx, c[0], -c[0]});
    ry = std::max({ry, c[1], -c[1]});
    pmax = std::max(pmax, p);
  }
  const int cell = std::max(1, options.cell_px);
  const int width = (2 * rx + 1) * cell;
  const int height = (2 * ry + 1) * cell;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
     << "\">\n";
  if (!options.config_comment.empty()) {
    std::string safe = options.config_comment;
    std::size_t pos;
    while ((pos = safe.find("--")) != std::string::npos) safe.replace(pos, 2, "- -");
    os << "<!-- " << safe << " -->\n";
  }
  os << "<rect width=\"" << width << "\" height=\"" << height
     << "\" fill=\"#ffffff\"/>\n";
  for (const auto& [c, p] : d.p) {
    if (p < kSerializationThreshold || pmax <= 0.0) continue;
    Real v;
    if (options.log_scale) {
      const Real lp = std::clamp(std::log10(p), -8.0, 0.0);
      v = 1.0 + lp / 8.0;
    } else {
      v = p / pmax;
    }
    const int px = (c[0] + rx) * cell;
    const int py = (ry - c[1]) * cell;
    os << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell
       << "\" height=\"" << cell << "\" fill=\"";
    write_hex_color(os, colormap_value(options.colormap, v));
    os << "\"/>\n";
  }
  const int ox = rx * cell + cell / 2;
  const int oy = ry * cell + cell / 2;
  os << "<line x1=\"0\" y1=\"" << oy << "\" x2=\"" << width << "\" y2=\"" << oy
     << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  os << "<line x1=\"" << ox << "\" y1=\"0\" x2=\"" << ox << "\" y2=\"" << height
     << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  os << "</svg>\n";
  if (!os) throw IoError("write failed");
}

void render_heatmap_file(const Distribution& d, const std::string& path,
                         const HeatmapOptions& options) {
  auto os = open_out(path);
  render_heatmap(d, os, options);
}

}  // namespace pauliwalk
