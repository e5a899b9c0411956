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

// Clean corpora, benchmark manifests, and materialization of condition groups.
//
// A clean corpus is a directory holding P5/P6 images plus `labels.csv`:
//
//   filename,label
//   img_000.pgm,cat
//
// A materialized corpus is a directory with one subdirectory per condition
// (c000, c001, ...) and `manifest.csv`:
//
//   # key=value            run metadata (seed, registry source, ...)
//   condition_id,condition_label,source_filename,output_path,true_label,checksum
//
// output_path is relative to the manifest's directory.

#ifndef ASIBENCH_CORPUS_HPP
#define ASIBENCH_CORPUS_HPP

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "asibench/error.hpp"
#include "asibench/netpbm.hpp"
#include "asibench/parallel.hpp"
#include "asibench/perturb.hpp"
#include "asibench/registry.hpp"
#include "asibench/text.hpp"

namespace asibench {

inline constexpr const char* kLabelsFile = "labels.csv";
inline constexpr const char* kManifestFile = "manifest.csv";
inline constexpr const char* kManifestHeader =
    "condition_id,condition_label,source_filename,output_path,true_label,checksum";

struct LabeledImage {
  std::string filename;
  std::string label;
  Image image;
  /// Original file bytes; written verbatim for the clean group when present.
  std::string encoded;
};

struct ManifestEntry {
  int condition_id = 0;
  std::string condition_label;
  std::string source_filename;
  std::string output_path;
  std::string true_label;
  std::string checksum;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct Manifest {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<ManifestEntry> entries;

  std::optional<std::string> meta(std::string_view key) const {
    for (const auto& [k, v] : metadata) {
      if (k == key) return v;
    }
    return std::nullopt;
  }

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

namespace detail {

inline bool is_plain_filename(std::string_view name) {
  if (name.empty() || name == "." || name == "..") return false;
  return name.find_first_of("/\\,\n\r\"") == std::string_view::npos &&
         text::trim(name) == name;
}

inline std::string group_directory(int condition_id) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "c%03d", condition_id);
  return buf;
}

}  // namespace detail

/**
 * Reads a clean corpus directory. Every image is decoded up front, so a
 * corrupt file is reported before anything downstream writes output.
 * With `limit`, only the first `limit` rows of labels.csv are used.
 */
inline std::vector<LabeledImage> load_clean_corpus(const std::filesystem::path& dir,
                                                   std::optional<std::size_t> limit = {}) {
  if (!std::filesystem::is_directory(dir)) {
    throw IoError("clean corpus directory not found: " + dir.string());
  }
  const auto labels_path = dir / kLabelsFile;
  const std::string doc = text::read_file(labels_path);
  const auto rows = text::lines(doc);
  if (rows.empty() || text::trim(rows[0]) != "filename,label") {
    throw ParseError(labels_path.string() + ": expected header 'filename,label'");
  }
  std::vector<LabeledImage> corpus;
  std::set<std::string> seen;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto row = text::trim(rows[i]);
    if (row.empty()) continue;
    if (limit && corpus.size() == *limit) break;
    const std::string where = labels_path.string() + " line " + std::to_string(i + 1) + ": ";
    const auto fields = text::split(row, ',');
    if (fields.size() != 2) throw ParseError(where + "expected 'filename,label'");
    const std::string filename(text::trim(fields[0]));
    const std::string label(text::trim(fields[1]));
    if (!detail::is_plain_filename(filename)) {
      throw ValidationError(where + "invalid filename '" + filename + "'");
    }
    if (!is_valid_label(label)) throw ValidationError(where + "invalid label");
    if (!seen.insert(filename).second) {
      throw ValidationError(where + "duplicate filename '" + filename + "'");
    }
    const auto path = dir / filename;
    std::string bytes = text::read_file(path);
    Image image = [&] {
      try {
        return decode_netpbm(bytes);
      } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
      }
    }();
    corpus.push_back({filename, label, std::move(image), std::move(bytes)});
  }
  if (corpus.empty()) throw EmptyInputError("clean corpus is empty: " + labels_path.string());
  if (limit && corpus.size() < *limit) {
    throw ValidationError("clean corpus has " + std::to_string(corpus.size()) +
                          " images, group size " + std::to_string(*limit) + " requested");
  }
  return corpus;
}

/// Writes images plus labels.csv in clean-corpus layout.
inline void write_clean_corpus(const std::filesystem::path& dir,
                               std::span<const LabeledImage> corpus) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  std::string labels = "filename,label\n";
  for (const auto& item : corpus) {
    if (!detail::is_plain_filename(item.filename)) {
      throw ValidationError("invalid filename '" + item.filename + "'");
    }
    if (!is_valid_label(item.label)) throw ValidationError("invalid label for " + item.filename);
    text::write_file(dir / item.filename,
                     item.encoded.empty() ? encode_netpbm(item.image) : item.encoded);
    labels += item.filename + "," + item.label + "\n";
  }
  text::write_file(dir / kLabelsFile, labels);
}

inline std::string serialize_manifest(const Manifest& manifest) {
  std::string out;
  for (const auto& [key, value] : manifest.metadata) out += "# " + key + "=" + value + "\n";
  out += kManifestHeader;
  out += '\n';
  for (const auto& e : manifest.entries) {
    out += std::to_string(e.condition_id) + "," + e.condition_label + "," +
           e.source_filename + "," + e.output_path + "," + e.true_label + "," +
           e.checksum + "\n";
  }
  return out;
}

inline Manifest parse_manifest(std::string_view document) {
  Manifest manifest;
  bool header_seen = false;
  const auto rows = text::lines(document);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "manifest line " + std::to_string(i + 1) + ": ";
    const auto row = text::trim(rows[i]);
    if (row.empty()) continue;
    if (row.front() == '#') {
      const auto body = text::trim(row.substr(1));
      const auto eq = body.find('=');
      if (eq != std::string_view::npos) {
        manifest.metadata.emplace_back(std::string(text::trim(body.substr(0, eq))),
                                       std::string(text::trim(body.substr(eq + 1))));
      }
      continue;
    }
    if (!header_seen) {
      if (row != kManifestHeader) throw ParseError(where + "unexpected header");
      header_seen = true;
      continue;
    }
    const auto f = text::split(row, ',');
    if (f.size() != 6) throw ParseError(where + "expected 6 fields");
    ManifestEntry e;
    const auto id = text::parse_int<int>(f[0]);
    if (!id) throw ParseError(where + "bad condition id");
    e.condition_id = *id;
    e.condition_label = std::string(text::trim(f[1]));
    e.source_filename = std::string(text::trim(f[2]));
    e.output_path = std::string(text::trim(f[3]));
    e.true_label = std::string(text::trim(f[4]));
    e.checksum = std::string(text::trim(f[5]));
    if (e.output_path.empty() || e.true_label.empty() || e.checksum.empty()) {
      throw ParseError(where + "empty field");
    }
    const std::filesystem::path rel(e.output_path);
    if (rel.is_absolute() ||
        std::find(rel.begin(), rel.end(), std::filesystem::path("..")) != rel.end()) {
      throw ValidationError(where + "output_path must stay inside the corpus");
    }
    manifest.entries.push_back(std::move(e));
  }
  if (!header_seen) throw ParseError("manifest has no header row");
  return manifest;
}

inline Manifest read_manifest(const std::filesystem::path& path) {
  try {
    return parse_manifest(text::read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

/// Recomputes every file checksum; throws ValidationError on the first mismatch.
inline void verify_corpus(const Manifest& manifest, const std::filesystem::path& root) {
  for (const auto& e : manifest.entries) {
    const auto path = root / e.output_path;
    if (text::checksum(text::read_file(path)) != e.checksum) {
      throw ValidationError("checksum mismatch: " + path.string());
    }
  }
}

struct MaterializeOptions {
  Seed seed{};
  std::size_t jobs = 1;
  /// Appended to the manifest metadata after the seed.
  std::vector<std::pair<std::string, std::string>> metadata;
};

/**
 * Writes one group directory per registry condition under `out_dir`, plus the
 * manifest. Image i of condition c is apply_sequence(clean[i], steps(c),
 * derive_seed(seed, c, i)); the clean group copies input bytes verbatim.
 * Output bytes do not depend on `jobs`.
 */
inline Manifest materialize(std::span<const LabeledImage> clean,
                            const ConditionRegistry& registry,
                            const std::filesystem::path& out_dir,
                            const MaterializeOptions& options = {}) {
  validate(registry);
  if (clean.empty()) throw EmptyInputError("clean corpus is empty");
  std::set<std::string> names;
  for (const auto& item : clean) {
    if (!detail::is_plain_filename(item.filename)) {
      throw ValidationError("invalid clean filename '" + item.filename + "'");
    }
    if (!is_valid_label(item.label)) {
      throw ValidationError("clean image " + item.filename + " has an invalid label");
    }
    if (!names.insert(item.filename).second) {
      throw ValidationError("duplicate clean filename '" + item.filename + "'");
    }
  }

  const auto& conditions = registry.conditions;
  std::error_code ec;
  for (const auto& c : conditions) {
    const auto dir = out_dir / detail::group_directory(c.id);
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  }

  const std::size_t n = clean.size();
  std::vector<ManifestEntry> entries(conditions.size() * n);
  parallel_for(entries.size(), options.jobs, [&](std::size_t task) {
    const auto& condition = conditions[task / n];
    const std::size_t i = task % n;
    const auto& item = clean[i];
    std::string bytes;
    if (condition.is_clean() && !item.encoded.empty()) {
      bytes = item.encoded;
    } else {
      const Seed seed{derive_seed(options.seed.value,
                                  static_cast<std::uint64_t>(condition.id),
                                  static_cast<std::uint64_t>(i))};
      bytes = encode_netpbm(apply_sequence(item.image, condition.steps, seed));
    }
    const std::string rel = detail::group_directory(condition.id) + "/" + item.filename;
    text::write_file(out_dir / rel, bytes);
    entries[task] = {condition.id, condition.label, item.filename, rel, item.label,
                     text::checksum(bytes)};
  });

  Manifest manifest;
  manifest.metadata.emplace_back("seed", std::to_string(options.seed.value));
  for (const auto& kv : options.metadata) manifest.metadata.push_back(kv);
  manifest.metadata.emplace_back("conditions", std::to_string(conditions.size()));
  manifest.metadata.emplace_back("group_size", std::to_string(n));
  manifest.entries = std::move(entries);
  text::write_file(out_dir / kManifestFile, serialize_manifest(manifest));
  return manifest;
}

}  // namespace asibench

#endif  // ASIBENCH_CORPUS_HPP
