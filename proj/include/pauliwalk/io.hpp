#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pauliwalk/analysis.hpp"
#include "pauliwalk/lattice.hpp"

namespace pauliwalk {

enum class FileFormat { Csv, Json };

FileFormat format_from_string(const std::string& name);

/// Run description carried into JSON output and SVG metadata.
struct RunMeta {
  std::string lattice;
  int steps = 0;
  std::vector<Real> thetas;
  std::string init;
};

/// Sites with p below this are omitted from serialized output.
inline constexpr Real kSerializationThreshold = 1e-30;

/// CSV columns: <axes>,p,re_down,im_down,re_up,im_up with 17 significant
/// digits; rows sorted lexicographically by coordinates. JSON mirrors the
/// schema under "sites" with the run description under "meta".
void write_field(const LatticeField& field, FileFormat format, std::ostream& os,
                 const RunMeta* meta = nullptr);

/// Probability-only variant: columns <axes>,p.
void write_distribution(const Distribution& d, FileFormat format, std::ostream& os,
                        const RunMeta* meta = nullptr);

void write_field_file(const LatticeField& field, FileFormat format,
                      const std::string& path, const RunMeta* meta = nullptr);
void write_distribution_file(const Distribution& d, FileFormat format,
                             const std::string& path, const RunMeta* meta = nullptr);

struct LoadedDistribution {
  Distribution dist;
  std::optional<RunMeta> meta;
};

/// Reads either format (sniffed from the first byte); amplitude columns,
/// when present, contribute nothing beyond p.
LoadedDistribution read_distribution(const std::string& path);
LoadedDistribution read_distribution_stream(std::istream& is);

struct HeatmapOptions {
  bool log_scale = false;       // intensity from log10(p) clamped to [-8, 0]
  int cell_px = 4;
  enum class Colormap { Gray, BlueYellow } colormap = Colormap::Gray;
  std::string config_comment;   // embedded as an SVG comment
};

/// Deterministic SVG: one rect per support site plus origin-centered axes.
void render_heatmap(const Distribution& d, std::ostream& os, const HeatmapOptions& options);
void render_heatmap_file(const Distribution& d, const std::string& path,
                         const HeatmapOptions& options);

/// printf "%.17g", the fixed serialization width for doubles.
std::string format_double(Real v);

}  // namespace pauliwalk
