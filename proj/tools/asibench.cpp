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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "asibench/cli.hpp"

namespace {

asibench::Interval parse_interval(const std::string& s) {
  const auto parts = asibench::text::split(s, ',');
  const auto lo = parts.size() == 2 ? asibench::text::parse_double(parts[0]) : std::nullopt;
  const auto hi = parts.size() == 2 ? asibench::text::parse_double(parts[1]) : std::nullopt;
  if (!lo || !hi) throw CLI::ValidationError("range", "expected LO,HI, got '" + s + "'");
  return {*lo, *hi};
}

template <typename T>
std::optional<T> opt_if(const CLI::Option* opt, const T& value) {
  return opt->count() > 0 ? std::optional<T>(value) : std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = asibench::cli;
  CLI::App app{"asibench: perturbation benchmarks scored by the Accuracy-Stability Index"};
  app.require_subcommand(1);

  std::string registry_path;
  std::string out_path;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;

  // perturb
  cli::PerturbConfig perturb;
  std::size_t group_size = 0;
  auto* p = app.add_subcommand("perturb", "materialize corrupted image groups from a clean corpus");
  p->add_option("clean", perturb.clean_dir, "clean corpus directory (labels.csv + P5/P6 images)")
      ->required();
  p->add_option("--out", perturb.out_dir, "output corpus directory")->required();
  auto* p_registry = p->add_option("--registry", registry_path, "registry document (default: built-in 69 conditions)");
  p->add_option("--seed", seed, "64-bit seed")->default_val(0);
  auto* p_group = p->add_option("--group-size", group_size, "images per group (first N of labels.csv)")
                      ->check(CLI::PositiveNumber);
  p->add_option("--jobs", jobs, "worker threads")->default_val(1)->check(CLI::PositiveNumber);

  // evaluate
  cli::EvaluateConfig evaluate;
  auto* e = app.add_subcommand("evaluate", "measure per-condition accuracy over a materialized corpus");
  e->add_option("corpus", evaluate.corpus, "corpus directory or manifest.csv")->required();
  e->add_option("--adapter", evaluate.adapter, "toy | subprocess:CMD | file:PATH")->default_val("toy");
  e->add_option("--classifier", evaluate.classifier_id, "classifier id written to the table")
      ->default_val("model");
  auto* e_out = e->add_option("--out", out_path, "accuracy table path (default: stdout)");
  e->add_option("--jobs", jobs, "worker threads")->default_val(1)->check(CLI::PositiveNumber);
  e->add_flag("--verbose", evaluate.verbose, "log every misclassified file to stderr");

  // score
  cli::ScoreConfig score;
  bool sample_std = false;
  auto* s = app.add_subcommand("score", "score an accuracy table (mean, CV, ASI)");
  s->add_option("table", score.table, "accuracy table (classifier,condition,accuracy)")->required();
  auto* s_out = s->add_option("--out", out_path, "score table path (default: stdout)");
  s->add_flag("--sample-std", sample_std, "use N-1 in the standard deviation");

  // compare
  cli::CompareConfig compare;
  auto* c = app.add_subcommand("compare", "relative CV and mean change of CANDIDATE versus BASELINE");
  c->add_option("scores", compare.scores, "score table")->required();
  c->add_option("baseline", compare.baseline, "classifier id or row id (R4)")->required();
  c->add_option("candidate", compare.candidate, "classifier id or row id (R8)")->required();

  // surface
  cli::SurfaceConfig surface;
  std::string format = "csv";
  std::string mean_range;
  std::string cv_range;
  std::size_t resolution = 0;
  std::string plot_path;
  auto* f = app.add_subcommand("surface", "sample ASI over mean accuracy and CV");
  f->add_option("--out", surface.out, "grid output path")->required();
  f->add_option("--format", format, "csv | json")->default_val("csv")->check(CLI::IsMember({"csv", "json"}));
  f->add_option("--mean-range", mean_range, "LO,HI in percent (default 0,100)");
  f->add_option("--cv-range", cv_range, "LO,HI in percent (default 0,25)");
  f->add_option("--resolution", resolution, "samples on both axes (default 101 x 26)");
  f->add_option("--mean-samples", surface.mean_samples, "samples on the mean axis");
  f->add_option("--cv-samples", surface.cv_samples, "samples on the cv axis");
  auto* f_plot = f->add_option("--plot-script", plot_path, "also write a gnuplot script");

  // report
  cli::ReportConfig report;
  auto* r = app.add_subcommand("report", "render a score table as a markdown report");
  r->add_option("scores", report.scores, "score table")->required();
  auto* r_out = r->add_option("--out", out_path, "report path (default: stdout)");

  // synth
  cli::SynthConfig synth;
  auto* y = app.add_subcommand("synth", "write a 3-class synthetic clean corpus");
  y->add_option("--out", synth.out_dir, "output directory")->required();
  y->add_option("--per-class", synth.per_class, "images per class")->default_val(10);
  y->add_option("--size", synth.side, "image side in pixels")->default_val(32);
  y->add_option("--seed", seed, "64-bit seed")->default_val(0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : cli::kValidation;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (p->parsed()) {
    perturb.registry = opt_if(p_registry, std::filesystem::path(registry_path));
    perturb.group_size = opt_if(p_group, group_size);
    perturb.seed = asibench::Seed{seed};
    perturb.jobs = jobs;
    return cli::cmd_perturb(perturb, out, err);
  }
  if (e->parsed()) {
    evaluate.out = opt_if(e_out, std::filesystem::path(out_path));
    evaluate.jobs = jobs;
    return cli::cmd_evaluate(evaluate, out, err);
  }
  if (s->parsed()) {
    score.out = opt_if(s_out, std::filesystem::path(out_path));
    score.dispersion = sample_std ? asibench::Dispersion::sample : asibench::Dispersion::population;
    return cli::cmd_score(score, out, err);
  }
  if (c->parsed()) return cli::cmd_compare(compare, out, err);
  if (f->parsed()) {
    try {
      if (!mean_range.empty()) surface.mean_range = parse_interval(mean_range);
      if (!cv_range.empty()) surface.cv_range = parse_interval(cv_range);
    } catch (const CLI::Error& ex) {
      err << "error: " << ex.what() << "\n";
      return cli::kValidation;
    }
    if (resolution > 0) surface.mean_samples = surface.cv_samples = resolution;
    surface.format = format == "json" ? asibench::GridFormat::json : asibench::GridFormat::csv;
    surface.plot_script = opt_if(f_plot, std::filesystem::path(plot_path));
    return cli::cmd_surface(surface, out, err);
  }
  if (r->parsed()) {
    report.out = opt_if(r_out, std::filesystem::path(out_path));
    return cli::cmd_report(report, out, err);
  }
  if (y->parsed()) {
    synth.seed = asibench::Seed{seed};
    return cli::cmd_synth(synth, out, err);
  }
  return cli::kValidation;
}
