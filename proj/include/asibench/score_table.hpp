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

// Score tables.
//
// Two layouts are read:
//   classifier,cv,mean,asi                          (written by `score`)
//   row_id,condition_label,classifier,cv,mean,asi   (published-results fixture)
//
// Written tables render cv, mean and asi with three decimals.

#ifndef ASIBENCH_SCORE_TABLE_HPP
#define ASIBENCH_SCORE_TABLE_HPP

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asibench/error.hpp"
#include "asibench/metrics.hpp"
#include "asibench/text.hpp"

namespace asibench {

struct ScoreRow {
  std::optional<int> row_id;
  std::string condition_label;
  std::string classifier_id;
  double cv = 0.0;
  double mean = 0.0;
  /// ASI as written in the table.
  double asi = 0.0;

  /// Recomputes ASI from the row's mean and cv.
  BenchmarkScore score() const { return BenchmarkScore::from_summary(classifier_id, mean, cv); }
};

struct ScoreTable {
  bool has_row_ids = false;
  std::vector<ScoreRow> rows;
};

inline ScoreTable parse_score_table(std::string_view document) {
  ScoreTable table;
  std::optional<std::size_t> width;
  const auto rows = text::lines(document);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto row = text::trim(rows[i]);
    if (row.empty() || row.front() == '#') continue;
    const std::string where = "score table line " + std::to_string(i + 1) + ": ";
    if (!width) {
      if (row == "classifier,cv,mean,asi") {
        width = 4;
      } else if (row == "row_id,condition_label,classifier,cv,mean,asi") {
        width = 6;
        table.has_row_ids = true;
      } else {
        throw ParseError(where + "unrecognized header");
      }
      continue;
    }
    const auto f = text::split(row, ',');
    if (f.size() != *width) {
      throw ParseError(where + "expected " + std::to_string(*width) + " fields");
    }
    ScoreRow r;
    std::size_t k = 0;
    if (table.has_row_ids) {
      const auto id = text::parse_int<int>(f[0]);
      if (!id) throw ParseError(where + "bad row id");
      r.row_id = *id;
      r.condition_label = std::string(text::trim(f[1]));
      k = 2;
    }
    r.classifier_id = std::string(text::trim(f[k]));
    if (r.classifier_id.empty()) throw ParseError(where + "empty classifier id");
    const auto cv = text::parse_double(f[k + 1]);
    const auto mean = text::parse_double(f[k + 2]);
    const auto published = text::parse_double(f[k + 3]);
    if (!cv || !mean || !published) throw ParseError(where + "bad number");
    if (*cv < 0.0 || *mean < 0.0 || *mean > 100.0) {
      throw ValidationError(where + "cv must be >= 0 and mean in [0, 100]");
    }
    r.cv = *cv;
    r.mean = *mean;
    r.asi = *published;
    table.rows.push_back(std::move(r));
  }
  if (!width) throw ParseError("score table has no header");
  return table;
}

inline ScoreTable load_score_table(const std::filesystem::path& path) {
  try {
    return parse_score_table(text::read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

/// `classifier,cv,mean,asi`, sorted by classifier id, three decimals.
inline std::string serialize_scores(std::vector<BenchmarkScore> scores) {
  std::stable_sort(scores.begin(), scores.end(), [](const auto& a, const auto& b) {
    return a.classifier_id < b.classifier_id;
  });
  std::string out = "classifier,cv,mean,asi\n";
  for (const auto& s : scores) {
    out += s.classifier_id + "," + text::format_fixed(s.cv, 3) + "," +
           text::format_fixed(s.mean_accuracy, 3) + "," + text::format_fixed(s.asi, 3) + "\n";
  }
  return out;
}

/**
 * Finds a row by classifier id, or by row id written as `R4` or `4` when the
 * table carries row ids. Unknown or ambiguous keys throw ValidationError.
 */
inline const ScoreRow& find_row(const ScoreTable& table, std::string_view key) {
  const ScoreRow* match = nullptr;
  std::size_t hits = 0;
  for (const auto& r : table.rows) {
    if (r.classifier_id == key) {
      match = &r;
      ++hits;
    }
  }
  if (hits == 0 && table.has_row_ids) {
    auto digits = key;
    if (!digits.empty() && (digits.front() == 'R' || digits.front() == 'r')) digits.remove_prefix(1);
    if (const auto id = text::parse_int<int>(digits)) {
      for (const auto& r : table.rows) {
        if (r.row_id == *id) {
          match = &r;
          ++hits;
        }
      }
    }
  }
  if (hits == 0) throw ValidationError("unknown classifier id '" + std::string(key) + "'");
  if (hits > 1) {
    throw ValidationError("classifier id '" + std::string(key) +
                          "' is ambiguous; use a row id such as R4");
  }
  return *match;
}

/// Markdown table in the layout of published per-classifier results.
inline std::string render_report(const ScoreTable& table) {
  std::string out = "# Accuracy-Stability Index report\n\n";
  out += "| Row ID | Condition | Classifier | CV (%) | Mean of accuracies (%) | ASI |\n";
  out += "|---:|---|---|---:|---:|---:|\n";
  std::size_t n = 0;
  for (const auto& r : table.rows) {
    ++n;
    const auto s = r.score();
    out += "| " + std::to_string(r.row_id.value_or(static_cast<int>(n))) + " | " +
           (r.condition_label.empty() ? "-" : r.condition_label) + " | " + r.classifier_id +
           " | " + text::format_fixed(s.cv, 3) + " | " + text::format_fixed(s.mean_accuracy, 3) +
           " | " + text::format_fixed(s.asi, 3) + " |\n";
  }
  if (!table.rows.empty()) {
    const auto best = std::max_element(table.rows.begin(), table.rows.end(),
                                       [](const ScoreRow& a, const ScoreRow& b) {
                                         return a.score().asi < b.score().asi;
                                       });
    out += "\nHighest ASI: " + best->classifier_id + " (" +
           text::format_fixed(best->score().asi, 3) + ")\n";
  }
  return out;
}

}  // namespace asibench

#endif  // ASIBENCH_SCORE_TABLE_HPP
