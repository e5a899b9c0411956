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
#include <sys/wait.h>

#include <cstdlib>
#include <sstream>
#include <string>

#include "asibench/cli.hpp"
#include "oracles.hpp"

using namespace asibench;

namespace {

const std::filesystem::path kTable3 = ASIBENCH_DATA_DIR "/table3.csv";

int run_tool(const std::string& args) {
  const std::string cmd = std::string(ASIBENCH_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Streams {
  std::ostringstream out;
  std::ostringstream err;
};

}  // namespace

TEST(ScoreTable, ReadsFixtureAndResolvesRowIds) {
  const auto t = load_score_table(kTable3);
  EXPECT_TRUE(t.has_row_ids);
  EXPECT_EQ(find_row(t, "R4").classifier_id, "AlexNet_15P_SP0.1GA0.1");
  EXPECT_EQ(find_row(t, "8").classifier_id, "AlexNet_5P_SP0.1RR30");
  EXPECT_EQ(find_row(t, "VGG19").row_id, 26);
  // Rows 55 and 67 share a classifier name in the published table.
  EXPECT_THROW(find_row(t, "ResNet50_5P_GA0.1SP0.1"), ValidationError);
  EXPECT_THROW(find_row(t, "R99"), ValidationError);
}

TEST(ScoreTable, SerializesSortedWithThreeDecimals) {
  std::vector<BenchmarkScore> s = {BenchmarkScore::from_summary("zeta", 90.0, 1.0),
                                   BenchmarkScore::from_summary("alpha", 100.0, 0.0)};
  EXPECT_EQ(serialize_scores(s),
            "classifier,cv,mean,asi\nalpha,0.000,100.000,1.000\nzeta,1.000,90.000,0.978\n");
}

TEST(CmdPerturb, HappyPathAndDeterminism) {
  oracle::TempDir dir;
  Streams s;
  ASSERT_EQ(cli::cmd_synth({dir / "clean", 4, 16, Seed{1}}, s.out, s.err), 0);
  cli::PerturbConfig cfg{dir / "clean", dir / "a", std::nullopt, Seed{42}, 10, 2};
  ASSERT_EQ(cli::cmd_perturb(cfg, s.out, s.err), 0) << s.err.str();
  const auto m = read_manifest(dir / "a" / kManifestFile);
  EXPECT_EQ(m.entries.size(), 690u);
  EXPECT_EQ(m.meta("registry"), "builtin");
  cfg.out_dir = dir / "b";
  cfg.jobs = 1;
  ASSERT_EQ(cli::cmd_perturb(cfg, s.out, s.err), 0);
  EXPECT_EQ(text::read_file(dir / "a" / kManifestFile), text::read_file(dir / "b" / kManifestFile));
}

TEST(CmdPerturb, MissingCorpusNamesPath) {
  Streams s;
  cli::PerturbConfig cfg{"/nonexistent/asibench/clean", "/tmp/unused", std::nullopt, Seed{}, {}, 1};
  EXPECT_EQ(cli::cmd_perturb(cfg, s.out, s.err), cli::kIo);
  EXPECT_NE(s.err.str().find("/nonexistent/asibench/clean"), std::string::npos);
}

TEST(CmdPerturb, CustomRegistry) {
  oracle::TempDir dir;
  Streams s;
  ASSERT_EQ(cli::cmd_synth({dir / "clean", 1, 8, Seed{1}}, s.out, s.err), 0);
  text::write_file(dir / "reg.txt", "0 | clean | - | -\n1 | r | ROT 30 | SP 0.1\n");
  cli::PerturbConfig cfg{dir / "clean", dir / "out", dir / "reg.txt", Seed{3}, {}, 1};
  ASSERT_EQ(cli::cmd_perturb(cfg, s.out, s.err), 0) << s.err.str();
  EXPECT_EQ(read_manifest(dir / "out" / kManifestFile).entries.size(), 6u);
  text::write_file(dir / "bad.txt", "0 | clean | - | -\n1 | r | SP 1.5 | -\n");
  cfg.registry = dir / "bad.txt";
  EXPECT_EQ(cli::cmd_perturb(cfg, s.out, s.err), cli::kValidation);
}

TEST(CmdEvaluate, OracleViaPredictionsGivesHundred) {
  oracle::TempDir dir;
  Streams s;
  ASSERT_EQ(cli::cmd_synth({dir / "clean", 2, 8, Seed{1}}, s.out, s.err), 0);
  ASSERT_EQ(cli::cmd_perturb({dir / "clean", dir / "c", std::nullopt, Seed{1}, {}, 1}, s.out, s.err), 0);
  const auto m = read_manifest(dir / "c" / kManifestFile);
  std::string preds = "output_path,label\n";
  for (const auto& e : m.entries) preds += e.output_path + "," + e.true_label + "\n";
  text::write_file(dir / "p.csv", preds);
  cli::EvaluateConfig cfg{dir / "c", "file:" + (dir / "p.csv").string(), "oracle", dir / "acc.csv", 1};
  ASSERT_EQ(cli::cmd_evaluate(cfg, s.out, s.err), 0) << s.err.str();
  const auto all = load_accuracy_table(dir / "acc.csv");
  ASSERT_EQ(all.size(), 1u);
  ASSERT_EQ(all[0].entries.size(), 69u);
  for (const auto& e : all[0].entries) EXPECT_EQ(e.accuracy, 100.0);
}

TEST(CmdScore, PerfectRowAndOrdering) {
  oracle::TempDir dir;
  std::string doc = "classifier,condition,accuracy\n";
  for (int c = 0; c < 69; ++c) doc += "perfect," + std::to_string(c) + ",100\n";
  for (int c = 0; c < 3; ++c) doc += "another," + std::to_string(c) + "," + std::to_string(80 + 10 * c) + "\n";
  text::write_file(dir / "acc.csv", doc);
  Streams s;
  ASSERT_EQ(cli::cmd_score({dir / "acc.csv", std::nullopt, Dispersion::population}, s.out, s.err), 0);
  EXPECT_EQ(s.out.str(),
            "classifier,cv,mean,asi\nanother,9.072,90.000,0.817\nperfect,0.000,100.000,1.000\n");
}

TEST(CmdScore, ConstructedSeriesMatchesPublishedRow) {
  oracle::TempDir dir;
  const auto xs = oracle::series_with(85.250, 2.276, 69);
  std::string doc = "classifier,condition,accuracy\n";
  for (std::size_t c = 0; c < xs.size(); ++c) {
    doc += "AlexNet," + std::to_string(c) + "," + text::format_shortest(xs[c]) + "\n";
  }
  text::write_file(dir / "acc.csv", doc);
  Streams s;
  ASSERT_EQ(cli::cmd_score({dir / "acc.csv", std::nullopt, Dispersion::population}, s.out, s.err), 0);
  EXPECT_EQ(s.out.str(), "classifier,cv,mean,asi\nAlexNet,2.276,85.250,0.948\n");
}

TEST(CmdScore, MalformedTableFails) {
  oracle::TempDir dir;
  text::write_file(dir / "acc.csv", "classifier,condition,accuracy\na,0,104.2\n");
  Streams s;
  EXPECT_EQ(cli::cmd_score({dir / "acc.csv", std::nullopt, Dispersion::population}, s.out, s.err),
            cli::kValidation);
}

TEST(CmdCompare, PublishedPair) {
  Streams s;
  ASSERT_EQ(cli::cmd_compare({kTable3, "R4", "R8"}, s.out, s.err), 0) << s.err.str();
  const auto out = s.out.str();
  // 100 * (1.737 / 1.479 - 1) = 17.4442...
  EXPECT_NE(out.find("cv_delta: +17.444%"), std::string::npos) << out;
  EXPECT_NE(out.find("mean_delta: -1.158%"), std::string::npos) << out;
  EXPECT_NE(out.find("preferred: R4"), std::string::npos) << out;
}

TEST(CmdCompare, ScoreOutputFeedsCompare) {
  oracle::TempDir dir;
  text::write_file(dir / "s.csv", "classifier,cv,mean,asi\nr4,1.479,89.702,0.968\nr8,1.737,88.663,0.962\n");
  Streams s;
  ASSERT_EQ(cli::cmd_compare({dir / "s.csv", "r4", "r8"}, s.out, s.err), 0);
  EXPECT_NE(s.out.str().find("mean_delta: -1.158%"), std::string::npos);
}

TEST(CmdCompare, TieAndUnknownId) {
  Streams s;
  ASSERT_EQ(cli::cmd_compare({kTable3, "R4", "R4"}, s.out, s.err), 0);
  EXPECT_NE(s.out.str().find("cv_delta: +0.000%"), std::string::npos);
  EXPECT_NE(s.out.str().find("preferred: tie"), std::string::npos);
  Streams t;
  EXPECT_EQ(cli::cmd_compare({kTable3, "R4", "NoSuchNet"}, t.out, t.err), cli::kValidation);
  EXPECT_NE(t.err.str().find("NoSuchNet"), std::string::npos);
}

TEST(CmdSurface, DefaultCsvCorners) {
  oracle::TempDir dir;
  Streams s;
  cli::SurfaceConfig cfg;
  cfg.out = dir / "asi.csv";
  cfg.plot_script = dir / "asi.gp";
  ASSERT_EQ(cli::cmd_surface(cfg, s.out, s.err), 0) << s.err.str();
  const auto csv = text::read_file(dir / "asi.csv");
  EXPECT_NE(csv.find("\n100,0,1\n"), std::string::npos);
  EXPECT_NE(csv.find("\n0,25,-1\n"), std::string::npos);
  EXPECT_NE(text::read_file(dir / "asi.gp").find("'asi.csv'"), std::string::npos);
}

TEST(CmdReport, RendersFixture) {
  Streams s;
  ASSERT_EQ(cli::cmd_report({kTable3, std::nullopt}, s.out, s.err), 0);
  const auto md = s.out.str();
  EXPECT_NE(md.find("| 1 | (*) clean | AlexNet | 2.276 | 85.250 | 0.948 |"), std::string::npos);
  EXPECT_NE(md.find("| 72 |"), std::string::npos);
}

TEST(Binary, ExitCodes) {
  oracle::TempDir dir;
  EXPECT_EQ(run_tool("synth --out " + (dir / "clean").string() + " --per-class 1 --size 8"), 0);
  EXPECT_EQ(run_tool("perturb " + (dir / "clean").string() + " --out " + (dir / "c").string() +
                     " --seed 7 --jobs 2"),
            0);
  EXPECT_EQ(run_tool("evaluate " + (dir / "c").string() + " --adapter toy --out " +
                     (dir / "acc.csv").string()),
            0);
  EXPECT_EQ(run_tool("score " + (dir / "acc.csv").string() + " --out " + (dir / "s.csv").string()), 0);
  EXPECT_EQ(run_tool("compare " + kTable3.string() + " R4 R8"), 0);
  EXPECT_EQ(run_tool("surface --out " + (dir / "g.json").string() + " --format json"), 0);
  EXPECT_EQ(run_tool("report " + kTable3.string()), 0);
  EXPECT_EQ(run_tool("perturb /nonexistent/asibench --out " + (dir / "x").string()), 2);
  EXPECT_EQ(run_tool("compare " + kTable3.string() + " R4 Missing"), 1);
  EXPECT_EQ(run_tool("surface --out " + (dir / "g.csv").string() + " --resolution 1"), 1);
  EXPECT_EQ(run_tool("bogus"), 1);
}
