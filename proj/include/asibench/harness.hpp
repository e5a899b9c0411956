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

// Per-condition accuracy measurement.
//
// Accuracy table document (UTF-8, comma separated, '#' lines ignored):
//
//   classifier,condition,accuracy
//   alexnet,0,85.2
//
// Subprocess protocol: for every image the harness writes the absolute file
// path and a newline to the adapter's stdin; the adapter answers with one
// label line on stdout and flushes. One process serves a whole run.

#ifndef ASIBENCH_HARNESS_HPP
#define ASIBENCH_HARNESS_HPP

#include <cmath>
#include <filesystem>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asibench/corpus.hpp"
#include "asibench/error.hpp"
#include "asibench/netpbm.hpp"
#include "asibench/parallel.hpp"
#include "asibench/series.hpp"
#include "asibench/subprocess.hpp"
#include "asibench/text.hpp"

namespace asibench {

/// A materialized benchmark corpus: manifest plus the directory it lives in.
struct Corpus {
  std::filesystem::path root;
  Manifest manifest;

  /// Accepts either the corpus directory or the manifest file itself.
  static Corpus open(const std::filesystem::path& path) {
    const bool is_dir = std::filesystem::is_directory(path);
    const auto manifest_path = is_dir ? path / kManifestFile : path;
    if (!std::filesystem::exists(manifest_path)) {
      throw IoError("manifest not found: " + manifest_path.string());
    }
    return {is_dir ? path : path.parent_path(), read_manifest(manifest_path)};
  }

  std::filesystem::path resolve(const ManifestEntry& entry) const {
    return std::filesystem::absolute(root / entry.output_path).lexically_normal();
  }
};

class ClassifierAdapter {
 public:
  virtual ~ClassifierAdapter() = default;
  /// Called once per evaluation, after the corpus checksums were verified.
  virtual void prepare(const Corpus&) {}
  virtual std::string classify(const Corpus& corpus, const ManifestEntry& entry) = 0;
  /// True if classify() may be called from several threads at once.
  virtual bool concurrent() const noexcept { return false; }
};

/// Image mean and standard deviation over all samples.
struct ToyFeatures {
  double mean = 0.0;
  double stddev = 0.0;
};

inline ToyFeatures toy_features(const Image& img) {
  const auto s = img.samples();
  double sum = 0.0;
  for (double v : s) sum += v;
  const double mean = sum / static_cast<double>(s.size());
  double sq = 0.0;
  for (double v : s) sq += (v - mean) * (v - mean);
  return {mean, std::sqrt(sq / static_cast<double>(s.size()))};
}

/**
 * Nearest-centroid classifier over (mean, stddev) features, fit on the clean
 * group (condition 0) of the corpus it evaluates. Distance ties go to the
 * lexicographically smallest label.
 */
class ToyClassifier final : public ClassifierAdapter {
 public:
  void prepare(const Corpus& corpus) override {
    std::map<std::string, std::pair<ToyFeatures, std::size_t>> sums;
    for (const auto& e : corpus.manifest.entries) {
      if (e.condition_id != 0) continue;
      const auto f = toy_features(read_netpbm(corpus.root / e.output_path));
      auto& [acc, count] = sums[e.true_label];
      acc.mean += f.mean;
      acc.stddev += f.stddev;
      ++count;
    }
    if (sums.empty()) throw AdapterError("toy classifier: corpus has no clean group to fit");
    fit(sums);
  }

  void fit(const std::map<std::string, std::pair<ToyFeatures, std::size_t>>& sums) {
    centroids_.clear();
    for (const auto& [label, acc] : sums) {
      const double n = static_cast<double>(acc.second);
      centroids_.emplace_back(label, ToyFeatures{acc.first.mean / n, acc.first.stddev / n});
    }
  }

  std::string predict(const Image& img) const {
    const auto f = toy_features(img);
    const std::string* best = nullptr;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& [label, c] : centroids_) {
      const double d = (f.mean - c.mean) * (f.mean - c.mean) +
                       (f.stddev - c.stddev) * (f.stddev - c.stddev);
      if (d < best_d) {
        best_d = d;
        best = &label;
      }
    }
    if (best == nullptr) throw AdapterError("toy classifier used before fitting");
    return *best;
  }

  std::string classify(const Corpus& corpus, const ManifestEntry& entry) override {
    return predict(read_netpbm(corpus.root / entry.output_path));
  }

  bool concurrent() const noexcept override { return true; }

  const std::vector<std::pair<std::string, ToyFeatures>>& centroids() const noexcept {
    return centroids_;
  }

 private:
  std::vector<std::pair<std::string, ToyFeatures>> centroids_;
};

/// Talks to an external model over the line protocol.
class SubprocessClassifier final : public ClassifierAdapter {
 public:
  explicit SubprocessClassifier(std::string command) : command_(std::move(command)) {}

  void prepare(const Corpus&) override {
    detail::ignore_sigpipe();
    process_ = std::make_unique<LineProcess>(command_);
  }

  std::string classify(const Corpus& corpus, const ManifestEntry& entry) override {
    const auto path = corpus.resolve(entry).string();
    if (!process_) throw AdapterError("subprocess adapter not started");
    if (!process_->send(path)) {
      throw AdapterError("adapter '" + command_ + "' stopped reading at " + path);
    }
    auto reply = process_->receive();
    if (!reply) throw AdapterError("adapter '" + command_ + "' gave no label for " + path);
    return std::string(text::trim(*reply));
  }

 private:
  std::string command_;
  std::unique_ptr<LineProcess> process_;
};

/// Looks labels up in a `output_path,label` CSV keyed by manifest output_path.
class PredictionsFileClassifier final : public ClassifierAdapter {
 public:
  explicit PredictionsFileClassifier(std::filesystem::path path) : path_(std::move(path)) {}

  void prepare(const Corpus&) override {
    const std::string doc = text::read_file(path_);
    const auto rows = text::lines(doc);
    if (rows.empty() || text::trim(rows[0]) != "output_path,label") {
      throw ParseError(path_.string() + ": expected header 'output_path,label'");
    }
    predictions_.clear();
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto row = text::trim(rows[i]);
      if (row.empty() || row.front() == '#') continue;
      const auto comma = row.find(',');
      if (comma == std::string_view::npos) {
        throw ParseError(path_.string() + " line " + std::to_string(i + 1) +
                         ": expected 'output_path,label'");
      }
      predictions_[std::string(text::trim(row.substr(0, comma)))] =
          std::string(text::trim(row.substr(comma + 1)));
    }
  }

  std::string classify(const Corpus&, const ManifestEntry& entry) override {
    const auto it = predictions_.find(entry.output_path);
    if (it == predictions_.end()) {
      throw AdapterError("no prediction for " + entry.output_path + " in " + path_.string());
    }
    return it->second;
  }

  bool concurrent() const noexcept override { return true; }

 private:
  std::filesystem::path path_;
  std::map<std::string, std::string> predictions_;
};

/// Builds an adapter from `toy`, `subprocess:CMD` or `file:PATH`.
inline std::unique_ptr<ClassifierAdapter> make_adapter(std::string_view spec) {
  if (spec == "toy") return std::make_unique<ToyClassifier>();
  if (spec.starts_with("subprocess:") && spec.size() > 11) {
    return std::make_unique<SubprocessClassifier>(std::string(spec.substr(11)));
  }
  if (spec.starts_with("file:") && spec.size() > 5) {
    return std::make_unique<PredictionsFileClassifier>(std::string(spec.substr(5)));
  }
  throw InvalidParameter("unknown adapter '" + std::string(spec) +
                         "' (expected toy, subprocess:CMD or file:PATH)");
}

struct EvaluateOptions {
  std::size_t jobs = 1;
  /// Receives one line per misclassified image when set.
  std::ostream* log = nullptr;
};

/**
 * Accuracy per manifest condition: 100 * correct / group size. Checksums are
 * verified before the adapter sees any image; any adapter failure aborts.
 */
inline AccuracySeries evaluate(ClassifierAdapter& adapter, const Corpus& corpus,
                               std::string classifier_id,
                               const EvaluateOptions& options = {}) {
  const auto& entries = corpus.manifest.entries;
  if (entries.empty()) throw EmptyInputError("corpus manifest has no entries");
  verify_corpus(corpus.manifest, corpus.root);
  adapter.prepare(corpus);

  std::vector<std::string> predicted(entries.size());
  const std::size_t jobs = adapter.concurrent() ? options.jobs : 1;
  parallel_for(entries.size(), jobs, [&](std::size_t i) {
    try {
      predicted[i] = adapter.classify(corpus, entries[i]);
    } catch (const AdapterError&) {
      throw;
    } catch (const std::exception& e) {
      throw AdapterError(corpus.resolve(entries[i]).string() + ": " + e.what());
    }
  });

  std::map<int, std::pair<std::size_t, std::size_t>> tally;  // id -> (correct, total)
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto& [correct, total] = tally[entries[i].condition_id];
    ++total;
    if (predicted[i] == entries[i].true_label) {
      ++correct;
    } else if (options.log != nullptr) {
      *options.log << "miss: " << entries[i].output_path << " expected '"
                   << entries[i].true_label << "' got '" << predicted[i] << "'\n";
    }
  }

  AccuracySeries series{std::move(classifier_id), {}};
  for (const auto& [id, counts] : tally) {
    series.entries.push_back(
        {id, 100.0 * static_cast<double>(counts.first) / static_cast<double>(counts.second)});
  }
  return series;
}

/// Parses an accuracy table into one series per classifier, sorted by id.
inline std::vector<AccuracySeries> parse_accuracy_table(std::string_view document) {
  std::map<std::string, std::map<int, double>> table;
  bool header_seen = false;
  const auto rows = text::lines(document);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto row = text::trim(rows[i]);
    if (row.empty() || row.front() == '#') continue;
    const std::string where = "accuracy table line " + std::to_string(i + 1) + ": ";
    if (!header_seen) {
      if (row != "classifier,condition,accuracy") {
        throw ParseError(where + "expected header 'classifier,condition,accuracy'");
      }
      header_seen = true;
      continue;
    }
    const auto f = text::split(row, ',');
    if (f.size() != 3) throw ParseError(where + "expected 3 fields");
    const std::string classifier(text::trim(f[0]));
    if (classifier.empty()) throw ParseError(where + "empty classifier id");
    const auto condition = text::parse_int<int>(f[1]);
    if (!condition || *condition < 0) throw ParseError(where + "bad condition id");
    const auto accuracy = text::parse_double(f[2]);
    if (!accuracy) throw ParseError(where + "bad accuracy '" + std::string(text::trim(f[2])) + "'");
    if (*accuracy < 0.0 || *accuracy > 100.0) {
      throw ValidationError(where + "accuracy " + std::string(text::trim(f[2])) +
                            " outside [0, 100]");
    }
    if (!table[classifier].emplace(*condition, *accuracy).second) {
      throw ValidationError(where + "duplicate row for " + classifier + " condition " +
                            std::to_string(*condition));
    }
  }
  std::vector<AccuracySeries> out;
  for (auto& [classifier, rows_by_id] : table) {
    AccuracySeries s{classifier, {}};
    for (const auto& [id, acc] : rows_by_id) s.entries.push_back({id, acc});
    validate(s);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<AccuracySeries> load_accuracy_table(const std::filesystem::path& path) {
  return parse_accuracy_table(text::read_file(path));
}

inline std::string serialize_accuracy_table(std::span<const AccuracySeries> series) {
  std::string out = "classifier,condition,accuracy\n";
  for (const auto& s : series) {
    for (const auto& e : s.entries) {
      out += s.classifier_id + "," + std::to_string(e.condition_id) + "," +
             text::format_shortest(e.accuracy) + "\n";
    }
  }
  return out;
}

}  // namespace asibench

#endif  // ASIBENCH_HARNESS_HPP
