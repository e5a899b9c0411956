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

#ifndef ASIBENCH_SERIES_HPP
#define ASIBENCH_SERIES_HPP

#include <string>
#include <vector>

#include "asibench/error.hpp"

namespace asibench {

struct AccuracyEntry {
  int condition_id = 0;
  /// Percent, in [0, 100].
  double accuracy = 0.0;

  friend bool operator==(const AccuracyEntry&, const AccuracyEntry&) = default;
};

/// Per-condition accuracies of one classifier, ordered by condition id.
struct AccuracySeries {
  std::string classifier_id;
  std::vector<AccuracyEntry> entries;

  std::vector<double> accuracies() const {
    std::vector<double> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.accuracy);
    return out;
  }

  const AccuracyEntry* find(int condition_id) const noexcept {
    for (const auto& e : entries) {
      if (e.condition_id == condition_id) return &e;
    }
    return nullptr;
  }

  friend bool operator==(const AccuracySeries&, const AccuracySeries&) = default;
};

/// Ids strictly ascending, accuracies in [0, 100].
inline void validate(const AccuracySeries& series) {
  for (std::size_t i = 0; i < series.entries.size(); ++i) {
    const auto& e = series.entries[i];
    if (!(e.accuracy >= 0.0 && e.accuracy <= 100.0)) {
      throw ValidationError(series.classifier_id + " condition " +
                            std::to_string(e.condition_id) +
                            ": accuracy outside [0, 100]");
    }
    if (i > 0 && series.entries[i - 1].condition_id >= e.condition_id) {
      throw ValidationError(series.classifier_id +
                            ": condition ids must be unique and ascending");
    }
  }
}

}  // namespace asibench

#endif  // ASIBENCH_SERIES_HPP
