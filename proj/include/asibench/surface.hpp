/**
 * Copyright 2026 The asibench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// ASI sampled over a (mean accuracy, CV) rectangle.
//
// Every cell is metrics::asi at the sample point; cells where ASI is
// undefined (mean + cv = 0) are masked. Emission formats:
//
//   CSV   header `mean,cv,asi`, one row per unmasked cell, rows in cv-major
//         order, 17 significant digits.
//   JSON  {"mean_axis": [...], "cv_axis": [...], "values": [[...], ...]}
//         with values[i][j] at (cv_axis[i], mean_axis[j]); null when masked.

#ifndef ASIBENCH_SURFACE_HPP
#define ASIBENCH_SURFACE_HPP

#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "asibench/error.hpp"
#include "asibench/metrics.hpp"
#include "asibench/text.hpp"

namespace asibench {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct SurfaceGrid {
  std::vector<double> mean_axis;
  std::vector<double> cv_axis;
  /// Row-major, rows indexed by cv, columns by mean.
  std::vector<double> values;
  std::vector<bool> mask;

  std::size_t rows() const noexcept { return cv_axis.size(); }
  std::size_t cols() const noexcept { return mean_axis.size(); }
  double value(std::size_t row, std::size_t col) const { return values[row * cols() + col]; }
  bool masked(std::size_t row, std::size_t col) const { return mask[row * cols() + col]; }

  friend bool operator==(const SurfaceGrid&, const SurfaceGrid&) = default;
};

inline constexpr Interval kDefaultMeanRange{0.0, 100.0};
inline constexpr Interval kDefaultCvRange{0.0, 25.0};
inline constexpr std::size_t kDefaultMeanSamples = 101;
inline constexpr std::size_t kDefaultCvSamples = 26;

/// Off-grid evaluation; nullopt where ASI is undefined.
inline std::optional<double> surface_at(double mean, double cv) {
  if (mean + cv == 0.0) return std::nullopt;
  return asi(mean, cv);
}

namespace detail {

inline std::vector<double> uniform_axis(Interval range, std::size_t samples, const char* name) {
  if (samples < 2) {
    throw InvalidParameter(std::string(name) + " axis needs at least 2 samples");
  }
  if (!(range.lo >= 0.0) || !(range.hi > range.lo) || std::isinf(range.hi)) {
    throw InvalidParameter(std::string(name) + " range must satisfy 0 <= lo < hi");
  }
  std::vector<double> axis(samples);
  const double step = (range.hi - range.lo) / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) axis[i] = range.lo + step * static_cast<double>(i);
  axis.back() = range.hi;
  return axis;
}

}  // namespace detail

inline SurfaceGrid surface_grid(Interval mean_range, Interval cv_range,
                                std::size_t mean_samples, std::size_t cv_samples) {
  SurfaceGrid g;
  g.mean_axis = detail::uniform_axis(mean_range, mean_samples, "mean");
  g.cv_axis = detail::uniform_axis(cv_range, cv_samples, "cv");
  g.values.assign(g.rows() * g.cols(), 0.0);
  g.mask.assign(g.rows() * g.cols(), false);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      const auto v = surface_at(g.mean_axis[c], g.cv_axis[r]);
      if (v) {
        g.values[r * g.cols() + c] = *v;
      } else {
        g.mask[r * g.cols() + c] = true;
      }
    }
  }
  return g;
}

inline SurfaceGrid surface_grid(Interval mean_range = kDefaultMeanRange,
                                Interval cv_range = kDefaultCvRange,
                                std::size_t resolution = 0) {
  if (resolution == 0) {
    return surface_grid(mean_range, cv_range, kDefaultMeanSamples, kDefaultCvSamples);
  }
  return surface_grid(mean_range, cv_range, resolution, resolution);
}

inline std::string format_17g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string grid_to_csv(const SurfaceGrid& g) {
  std::string out = "mean,cv,asi\n";
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (g.masked(r, c)) continue;
      out += format_17g(g.mean_axis[c]) + "," + format_17g(g.cv_axis[r]) + "," +
             format_17g(g.value(r, c)) + "\n";
    }
  }
  return out;
}

inline std::string grid_to_json(const SurfaceGrid& g) {
  nlohmann::json doc;
  doc["mean_axis"] = g.mean_axis;
  doc["cv_axis"] = g.cv_axis;
  auto values = nlohmann::json::array();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (g.masked(r, c)) {
        row.push_back(nullptr);
      } else {
        row.push_back(g.value(r, c));
      }
    }
    values.push_back(std::move(row));
  }
  doc["values"] = std::move(values);
  return doc.dump(1) + "\n";
}

/**
 * Rebuilds a grid from its CSV form. Axes are the distinct mean and cv values
 * present, so an axis point whose every cell is masked cannot be recovered.
 */
inline SurfaceGrid grid_from_csv(std::string_view document) {
  const auto rows = text::lines(document);
  if (rows.empty() || text::trim(rows[0]) != "mean,cv,asi") {
    throw ParseError("surface csv: expected header 'mean,cv,asi'");
  }
  std::map<std::pair<double, double>, double> cells;  // (cv, mean) -> asi
  std::set<double> means;
  std::set<double> cvs;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (text::trim(rows[i]).empty()) continue;
    const auto f = text::split(rows[i], ',');
    const auto m = f.size() == 3 ? text::parse_double(f[0]) : std::nullopt;
    const auto cv = f.size() == 3 ? text::parse_double(f[1]) : std::nullopt;
    const auto v = f.size() == 3 ? text::parse_double(f[2]) : std::nullopt;
    if (!m || !cv || !v) {
      throw ParseError("surface csv line " + std::to_string(i + 1) + ": expected 3 numbers");
    }
    means.insert(*m);
    cvs.insert(*cv);
    cells[{*cv, *m}] = *v;
  }
  SurfaceGrid g;
  g.mean_axis.assign(means.begin(), means.end());
  g.cv_axis.assign(cvs.begin(), cvs.end());
  g.values.assign(g.rows() * g.cols(), 0.0);
  g.mask.assign(g.rows() * g.cols(), true);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      const auto it = cells.find({g.cv_axis[r], g.mean_axis[c]});
      if (it != cells.end()) {
        g.values[r * g.cols() + c] = it->second;
        g.mask[r * g.cols() + c] = false;
      }
    }
  }
  return g;
}

inline SurfaceGrid grid_from_json(std::string_view document) {
  SurfaceGrid g;
  try {
    const auto doc = nlohmann::json::parse(document);
    g.mean_axis = doc.at("mean_axis").get<std::vector<double>>();
    g.cv_axis = doc.at("cv_axis").get<std::vector<double>>();
    const auto& values = doc.at("values");
    if (!values.is_array() || values.size() != g.rows()) {
      throw ParseError("surface json: values must have one row per cv sample");
    }
    for (const auto& row : values) {
      if (!row.is_array() || row.size() != g.cols()) {
        throw ParseError("surface json: every row needs one value per mean sample");
      }
      for (const auto& cell : row) {
        g.mask.push_back(cell.is_null());
        g.values.push_back(cell.is_null() ? 0.0 : cell.get<double>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("surface json: ") + e.what());
  }
  return g;
}

enum class GridFormat { csv, json };

inline void emit_grid(const SurfaceGrid& grid, GridFormat format,
                      const std::filesystem::path& destination) {
  text::write_file(destination,
                   format == GridFormat::csv ? grid_to_csv(grid) : grid_to_json(grid));
}

/// gnuplot script that draws the surface from a CSV emitted next to it.
inline std::string plot_script(std::string_view csv_relative_path) {
  std::string s;
  s += "# gnuplot script: ASI over mean accuracy and CV\n";
  s += "set datafile separator ','\n";
  s += "set xlabel 'Mean of accuracies (%)'\n";
  s += "set ylabel 'CV (%)'\n";
  s += "set zlabel 'ASI'\n";
  s += "set dgrid3d 50,50\n";
  s += "set hidden3d\n";
  s += "set pm3d\n";
  s += "splot '" + std::string(csv_relative_path) + "' every ::1 using 1:2:3 with lines title 'ASI'\n";
  s += "pause -1\n";
  return s;
}

}  // namespace asibench

#endif  // ASIBENCH_SURFACE_HPP
