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

// Accuracy-stability scoring.
//
//   mean   = (1/N) sum_c acc_c                       (percent)
//   cv     = 100 * sqrt((1/N) sum_c (acc_c - mean)^2) / mean
//   ASI    = (mean - cv) / (mean + cv),  defined when mean + cv > 0
//
// N is the series length. ASI lies in [-1, 1]: 1 for a perfectly stable
// classifier (cv = 0), -1 when mean accuracy is 0. All arithmetic is done in
// full double precision; rounding belongs to report rendering.

#ifndef ASIBENCH_METRICS_HPP
#define ASIBENCH_METRICS_HPP

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asibench/error.hpp"
#include "asibench/series.hpp"

namespace asibench {

enum class Dispersion {
  population,  ///< divide by N
  sample,      ///< divide by N - 1
};

inline double mean_accuracy(std::span<const double> accuracies) {
  if (accuracies.empty()) throw EmptyInputError("mean accuracy of an empty series");
  double sum = 0.0;
  for (double a : accuracies) sum += a;
  return sum / static_cast<double>(accuracies.size());
}

inline double mean_accuracy(const AccuracySeries& series) {
  return mean_accuracy(series.accuracies());
}

/// Coefficient of variation in percent.
inline double coefficient_of_variation(std::span<const double> accuracies,
                                       Dispersion dispersion = Dispersion::population) {
  const double mean = mean_accuracy(accuracies);
  if (!(mean > 0.0)) {
    throw UndefinedMetricError("coefficient of variation is undefined for mean " +
                               std::to_string(mean));
  }
  const std::size_t n = accuracies.size();
  if (dispersion == Dispersion::sample && n < 2) {
    throw UndefinedMetricError("sample dispersion needs at least two accuracies");
  }
  double squares = 0.0;
  for (double a : accuracies) squares += (a - mean) * (a - mean);
  const double denom = static_cast<double>(dispersion == Dispersion::sample ? n - 1 : n);
  return 100.0 * std::sqrt(squares / denom) / mean;
}

inline double coefficient_of_variation(const AccuracySeries& series,
                                       Dispersion dispersion = Dispersion::population) {
  return coefficient_of_variation(series.accuracies(), dispersion);
}

/// Accuracy-Stability Index of a (mean %, cv %) pair.
inline double asi(double mean, double cv) {
  if (!(mean >= 0.0) || !(cv >= 0.0) || std::isinf(mean) || std::isinf(cv)) {
    throw InvalidParameter("ASI needs finite mean >= 0 and cv >= 0");
  }
  if (mean + cv == 0.0) throw UndefinedMetricError("ASI is undefined when mean + cv = 0");
  return (mean - cv) / (mean + cv);
}

struct BenchmarkScore {
  std::string classifier_id;
  double mean_accuracy = 0.0;
  double cv = 0.0;
  double asi = 0.0;
  /// Unset when the score was read back from a summary table.
  std::optional<std::size_t> n_conditions;

  /// Score from already-aggregated values; asi is recomputed.
  static BenchmarkScore from_summary(std::string id, double mean, double cv) {
    return {std::move(id), mean, cv, asibench::asi(mean, cv), std::nullopt};
  }
};

inline BenchmarkScore score(const AccuracySeries& series,
                            Dispersion dispersion = Dispersion::population) {
  const auto values = series.accuracies();
  BenchmarkScore s;
  s.classifier_id = series.classifier_id;
  s.mean_accuracy = mean_accuracy(values);
  s.cv = coefficient_of_variation(values, dispersion);
  s.asi = asi(s.mean_accuracy, s.cv);
  s.n_conditions = values.size();
  return s;
}

enum class AsiOrdering { first, second, tie };

/// Change of `b` relative to baseline `a`, in percent.
struct RelativeDelta {
  double cv_delta_percent = 0.0;
  double mean_delta_percent = 0.0;
  /// Which score has the larger ASI.
  AsiOrdering asi_ordering = AsiOrdering::tie;
};

inline RelativeDelta compare(const BenchmarkScore& a, const BenchmarkScore& b) {
  if (!(a.cv > 0.0)) throw UndefinedMetricError("relative CV change needs baseline cv > 0");
  if (!(a.mean_accuracy > 0.0)) {
    throw UndefinedMetricError("relative mean change needs baseline mean > 0");
  }
  RelativeDelta d;
  d.cv_delta_percent = 100.0 * (b.cv / a.cv - 1.0);
  d.mean_delta_percent = 100.0 * (b.mean_accuracy / a.mean_accuracy - 1.0);
  if (a.asi > b.asi) {
    d.asi_ordering = AsiOrdering::first;
  } else if (b.asi > a.asi) {
    d.asi_ordering = AsiOrdering::second;
  }
  return d;
}

}  // namespace asibench

#endif  // ASIBENCH_METRICS_HPP
