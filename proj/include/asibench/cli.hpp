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

// Subcommand bodies for the asibench tool, callable in-process.
//
// Each command returns its exit status: 0 on success, 1 for validation and
// parse failures, 2 for I/O failures. Diagnostics go to `err`.

#ifndef ASIBENCH_CLI_HPP
#define ASIBENCH_CLI_HPP

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "asibench/corpus.hpp"
#include "asibench/harness.hpp"
#include "asibench/metrics.hpp"
#include "asibench/registry.hpp"
#include "asibench/score_table.hpp"
#include "asibench/surface.hpp"
#include "asibench/synthetic.hpp"
#include "asibench/text.hpp"

namespace asibench::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kIo = 2 };

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    fn();
    return kOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

namespace detail {

inline void emit(const std::optional<std::filesystem::path>& path, const std::string& body,
                 std::ostream& out) {
  if (path) {
    text::write_file(*path, body);
  } else {
    out << body;
  }
}

inline std::string signed_percent(double v) {
  std::string s = text::format_fixed(v, 3);
  if (s.front() != '-') s.insert(0, "+");
  return s + "%";
}

}  // namespace detail

struct PerturbConfig {
  std::filesystem::path clean_dir;
  std::filesystem::path out_dir;
  std::optional<std::filesystem::path> registry;
  Seed seed{};
  std::optional<std::size_t> group_size;
  std::size_t jobs = 1;
};

inline int cmd_perturb(const PerturbConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ConditionRegistry registry = cfg.registry ? load_registry(*cfg.registry) : default_registry();
    const auto clean = load_clean_corpus(cfg.clean_dir, cfg.group_size);
    registry.group_size = clean.size();
    MaterializeOptions options;
    options.seed = cfg.seed;
    options.jobs = cfg.jobs;
    options.metadata = {{"registry", cfg.registry ? cfg.registry->string() : "builtin"},
                        {"clean", cfg.clean_dir.string()}};
    const auto manifest = materialize(clean, registry, cfg.out_dir, options);
    out << "wrote " << registry.size() << " groups x " << clean.size() << " images ("
        << manifest.entries.size() << " files) to " << cfg.out_dir.string() << "\n";
  });
}

struct EvaluateConfig {
  std::filesystem::path corpus;
  std::string adapter = "toy";
  std::string classifier_id = "model";
  std::optional<std::filesystem::path> out;
  std::size_t jobs = 1;
  /// Log every misclassified file to `err`.
  bool verbose = false;
};

inline int cmd_evaluate(const EvaluateConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto corpus = Corpus::open(cfg.corpus);
    auto adapter = make_adapter(cfg.adapter);
    EvaluateOptions options;
    options.jobs = cfg.jobs;
    options.log = cfg.verbose ? &err : nullptr;
    const auto series = evaluate(*adapter, corpus, cfg.classifier_id, options);
    std::string body = "# adapter=" + cfg.adapter + "\n";
    if (const auto seed = corpus.manifest.meta("seed")) body += "# corpus_seed=" + *seed + "\n";
    body += serialize_accuracy_table(std::span(&series, 1));
    detail::emit(cfg.out, body, out);
  });
}

struct ScoreConfig {
  std::filesystem::path table;
  std::optional<std::filesystem::path> out;
  Dispersion dispersion = Dispersion::population;
};

inline int cmd_score(const ScoreConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto all = load_accuracy_table(cfg.table);
    std::vector<BenchmarkScore> scores;
    for (const auto& s : all) {
      try {
        scores.push_back(score(s, cfg.dispersion));
      } catch (const Error& e) {
        throw ValidationError(s.classifier_id + ": " + e.what());
      }
    }
    detail::emit(cfg.out, serialize_scores(std::move(scores)), out);
  });
}

struct CompareConfig {
  std::filesystem::path scores;
  std::string baseline;
  std::string candidate;
};

inline int cmd_compare(const CompareConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto table = load_score_table(cfg.scores);
    const auto& a_row = find_row(table, cfg.baseline);
    const auto& b_row = find_row(table, cfg.candidate);
    const auto a = a_row.score();
    const auto b = b_row.score();
    const auto d = compare(a, b);
    auto describe = [](const std::string& key, const BenchmarkScore& s) {
      return key + " (" + s.classifier_id + "): cv=" + text::format_fixed(s.cv, 3) +
             " mean=" + text::format_fixed(s.mean_accuracy, 3) +
             " asi=" + text::format_fixed(s.asi, 3) + "\n";
    };
    out << "baseline  " << describe(cfg.baseline, a);
    out << "candidate " << describe(cfg.candidate, b);
    out << "cv_delta: " << detail::signed_percent(d.cv_delta_percent) << "\n";
    out << "mean_delta: " << detail::signed_percent(d.mean_delta_percent) << "\n";
    switch (d.asi_ordering) {
      case AsiOrdering::first: out << "preferred: " << cfg.baseline << "\n"; break;
      case AsiOrdering::second: out << "preferred: " << cfg.candidate << "\n"; break;
      case AsiOrdering::tie: out << "preferred: tie\n"; break;
    }
  });
}

struct SurfaceConfig {
  std::filesystem::path out;
  GridFormat format = GridFormat::csv;
  Interval mean_range = kDefaultMeanRange;
  Interval cv_range = kDefaultCvRange;
  std::size_t mean_samples = kDefaultMeanSamples;
  std::size_t cv_samples = kDefaultCvSamples;
  std::optional<std::filesystem::path> plot_script;
};

inline int cmd_surface(const SurfaceConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto grid = surface_grid(cfg.mean_range, cfg.cv_range, cfg.mean_samples, cfg.cv_samples);
    emit_grid(grid, cfg.format, cfg.out);
    if (cfg.plot_script) {
      if (cfg.format != GridFormat::csv) {
        throw InvalidParameter("--plot-script needs --format csv");
      }
      const auto rel = std::filesystem::absolute(cfg.out).lexically_relative(
          std::filesystem::absolute(*cfg.plot_script).parent_path());
      text::write_file(*cfg.plot_script, plot_script(rel.generic_string()));
    }
    out << "wrote " << grid.rows() << "x" << grid.cols() << " surface to " << cfg.out.string()
        << "\n";
  });
}

struct ReportConfig {
  std::filesystem::path scores;
  std::optional<std::filesystem::path> out;
};

inline int cmd_report(const ReportConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    detail::emit(cfg.out, render_report(load_score_table(cfg.scores)), out);
  });
}

struct SynthConfig {
  std::filesystem::path out_dir;
  std::size_t per_class = 10;
  std::size_t side = 32;
  Seed seed{};
};

inline int cmd_synth(const SynthConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.per_class == 0 || cfg.side < 2) {
      throw InvalidParameter("synth needs --per-class >= 1 and --size >= 2");
    }
    const auto corpus = make_synthetic_corpus(cfg.per_class, cfg.side, cfg.seed);
    write_clean_corpus(cfg.out_dir, corpus);
    out << "wrote " << corpus.size() << " images to " << cfg.out_dir.string() << "\n";
  });
}

}  // namespace asibench::cli

#endif  // ASIBENCH_CLI_HPP
