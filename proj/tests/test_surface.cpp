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

#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "asibench/score_table.hpp"
#include "asibench/surface.hpp"
#include "oracles.hpp"

using namespace asibench;

namespace {

std::size_t data_rows(const std::string& csv) {
  return static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) - 1;
}

}  // namespace

TEST(SurfaceGrid, CornerValues) {
  const auto g = surface_grid({0, 100}, {0, 10}, 11, 11);
  ASSERT_EQ(g.rows(), 11u);
  ASSERT_EQ(g.cols(), 11u);
  EXPECT_EQ(g.value(0, 10), 1.0);   // mean 100, cv 0
  EXPECT_EQ(g.value(10, 0), -1.0);  // mean 0, cv 10
  EXPECT_TRUE(g.masked(0, 0));      // mean 0, cv 0
  EXPECT_EQ(*surface_at(50.0, 50.0), 0.0);
  EXPECT_FALSE(surface_at(0.0, 0.0).has_value());
}

TEST(SurfaceGrid, DefaultAxes) {
  const auto g = surface_grid();
  EXPECT_EQ(g.cols(), kDefaultMeanSamples);
  EXPECT_EQ(g.rows(), kDefaultCvSamples);
  EXPECT_EQ(g.mean_axis.back(), 100.0);
  EXPECT_EQ(g.cv_axis.back(), 25.0);
}

TEST(SurfaceGrid, MonotoneWhereDefined) {
  const auto g = surface_grid({0, 100}, {0, 50}, 57, 43);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (g.masked(r, c)) continue;
      EXPECT_GE(g.value(r, c), -1.0);
      EXPECT_LE(g.value(r, c), 1.0);
      if (c + 1 < g.cols() && g.cv_axis[r] > 0.0) {
        EXPECT_LT(g.value(r, c), g.value(r, c + 1));
      }
      if (r + 1 < g.rows() && g.mean_axis[c] > 0.0) {
        EXPECT_GT(g.value(r, c), g.value(r + 1, c));
      }
    }
  }
}

TEST(SurfaceGrid, ReproducesPublishedRows) {
  const auto table = load_score_table(ASIBENCH_DATA_DIR "/table3.csv");
  ASSERT_EQ(table.rows.size(), 75u);
  for (const auto& row : table.rows) {
    EXPECT_NEAR(*surface_at(row.mean, row.cv), row.asi, 1e-3) << "row " << *row.row_id;
  }
}

TEST(SurfaceGrid, RejectsBadParameters) {
  EXPECT_THROW(surface_grid({0, 100}, {0, 10}, 1, 5), InvalidParameter);
  EXPECT_THROW(surface_grid({10, 10}, {0, 10}, 5, 5), InvalidParameter);
  EXPECT_THROW(surface_grid({-1, 10}, {0, 10}, 5, 5), InvalidParameter);
}

TEST(Emit, CsvOmitsMaskedCells) {
  const auto g = surface_grid({0, 1}, {0, 1}, 2, 2);
  const auto csv = grid_to_csv(g);
  EXPECT_EQ(csv.rfind("mean,cv,asi\n", 0), 0u);
  EXPECT_EQ(data_rows(csv), 3u);
  const auto json = grid_to_json(g);
  std::size_t nulls = 0;
  for (std::size_t p = json.find("null"); p != std::string::npos; p = json.find("null", p + 1)) ++nulls;
  EXPECT_EQ(nulls, 1u);

  const auto full = surface_grid({1, 2}, {1, 2}, 2, 2);
  EXPECT_EQ(data_rows(grid_to_csv(full)), 4u);
}

TEST(Emit, RoundTripsBitExactly) {
  const auto g = surface_grid({0, 100}, {0, 25}, 37, 29);
  EXPECT_EQ(grid_from_csv(grid_to_csv(g)), g);
  EXPECT_EQ(grid_from_json(grid_to_json(g)), g);
}

TEST(Emit, WritesFilesAndPlotScript) {
  oracle::TempDir dir;
  const auto g = surface_grid();
  emit_grid(g, GridFormat::csv, dir / "asi.csv");
  emit_grid(g, GridFormat::json, dir / "asi.json");
  EXPECT_EQ(grid_from_csv(text::read_file(dir / "asi.csv")), g);
  EXPECT_EQ(grid_from_json(text::read_file(dir / "asi.json")), g);
  EXPECT_NE(plot_script("asi.csv").find("'asi.csv'"), std::string::npos);
  EXPECT_THROW(emit_grid(g, GridFormat::csv, "/nonexistent/asibench/asi.csv"), IoError);
}

TEST(Emit, MalformedInputsAreParseErrors) {
  EXPECT_THROW(grid_from_csv("a,b,c\n"), ParseError);
  EXPECT_THROW(grid_from_csv("mean,cv,asi\n1,2\n"), ParseError);
  EXPECT_THROW(grid_from_json("{\"mean_axis\":[1]}"), ParseError);
  EXPECT_THROW(grid_from_json("{\"mean_axis\":[1,2],\"cv_axis\":[1],\"values\":[[1]]}"), ParseError);
}
