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

// Benchmark condition catalog.
//
// Registry document, one record per line ('#' starts a comment line):
//
//   id | label | KIND intensity | KIND intensity
//
// KIND is SP, GA or ROT; '-' marks an absent step. The clean condition has
// id 0 and two absent steps.

#ifndef ASIBENCH_REGISTRY_HPP
#define ASIBENCH_REGISTRY_HPP

#include <algorithm>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "asibench/error.hpp"
#include "asibench/perturb.hpp"
#include "asibench/text.hpp"

namespace asibench {

struct Condition {
  int id = 0;
  std::string label;
  std::vector<PerturbationStep> steps;

  bool is_clean() const noexcept { return steps.empty(); }
  friend bool operator==(const Condition&, const Condition&) = default;
};

struct ConditionRegistry {
  static constexpr std::size_t kDefaultGroupSize = 500;

  std::vector<Condition> conditions;
  std::size_t group_size = kDefaultGroupSize;

  const Condition* find(int id) const noexcept {
    for (const auto& c : conditions) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }

  std::size_t size() const noexcept { return conditions.size(); }

  friend bool operator==(const ConditionRegistry&, const ConditionRegistry&) = default;
};

/// Label built from steps: "SP0.1", "ROT-30", "SP0.1_GA0.15"; "clean" if empty.
inline std::string make_label(std::span<const PerturbationStep> steps) {
  if (steps.empty()) return "clean";
  std::string label;
  for (const auto& step : steps) {
    if (!label.empty()) label += '_';
    label += kind_code(step.kind);
    label += text::format_shortest(step.intensity);
  }
  return label;
}

inline bool is_valid_label(std::string_view label) noexcept {
  if (text::trim(label).empty() || text::trim(label) != label) return false;
  return label.find_first_of(",|\n\r\"") == std::string_view::npos;
}

/// Checks every registry invariant; throws ValidationError naming the condition.
inline void validate(const ConditionRegistry& registry) {
  if (registry.conditions.empty()) throw ValidationError("registry has no conditions");
  if (registry.group_size == 0) throw ValidationError("registry group size must be positive");
  std::set<int> ids;
  for (std::size_t i = 0; i < registry.conditions.size(); ++i) {
    const auto& c = registry.conditions[i];
    const std::string who =
        "condition " + std::to_string(c.id) + " (" + c.label + ")";
    if (c.id < 0) throw ValidationError(who + ": id must be non-negative");
    if (!ids.insert(c.id).second) throw ValidationError(who + ": duplicate id");
    if (!is_valid_label(c.label)) throw ValidationError(who + ": invalid label");
    if (c.steps.size() > 2) {
      throw ValidationError(who + ": at most two steps are allowed");
    }
    if (c.id == 0 && !c.steps.empty()) {
      throw ValidationError(who + ": id 0 is reserved for the clean condition");
    }
    if (c.id != 0 && c.steps.empty()) {
      throw ValidationError(who + ": only id 0 may have no steps");
    }
    if (c.id == 0 && i != 0) {
      throw ValidationError(who + ": the clean condition must be listed first");
    }
    for (const auto& step : c.steps) {
      if (step.kind == PerturbationKind::identity) {
        throw ValidationError(who + ": identity is not a registry step kind");
      }
      try {
        validate(step);
      } catch (const InvalidParameter& e) {
        throw ValidationError(who + ": " + e.what());
      }
    }
  }
  if (registry.conditions.front().id != 0) {
    throw ValidationError("registry must start with the clean condition (id 0)");
  }
}

namespace detail {

inline PerturbationStep parse_step_field(std::string_view field, std::size_t line_no,
                                         bool& absent) {
  field = text::trim(field);
  absent = field == "-";
  if (absent) return {};
  const auto space = field.find_first_of(" \t");
  const std::string where = "registry line " + std::to_string(line_no) + ": ";
  if (space == std::string_view::npos) {
    throw ParseError(where + "step '" + std::string(field) + "' needs a kind and an intensity");
  }
  const auto kind = field.substr(0, space);
  const auto value = text::parse_double(field.substr(space + 1));
  if (!value) {
    throw ParseError(where + "bad intensity in step '" + std::string(field) + "'");
  }
  if (kind == "SP") return PerturbationStep::salt_pepper(*value);
  if (kind == "GA") return PerturbationStep::gaussian_noise(*value);
  if (kind == "ROT") return PerturbationStep::rotation(*value);
  throw ParseError(where + "unknown step kind '" + std::string(kind) + "'");
}

}  // namespace detail

/// Parses and validates a registry document.
inline ConditionRegistry parse_registry(std::string_view document) {
  ConditionRegistry registry;
  const auto all = text::lines(document);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = text::trim(all[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = text::split(line, '|');
    const std::string where = "registry line " + std::to_string(line_no) + ": ";
    if (fields.size() != 4) {
      throw ParseError(where + "expected 4 '|'-separated fields, got " +
                       std::to_string(fields.size()));
    }
    Condition c;
    const auto id = text::parse_int<int>(fields[0]);
    if (!id) throw ParseError(where + "bad id '" + std::string(text::trim(fields[0])) + "'");
    c.id = *id;
    c.label = std::string(text::trim(fields[1]));
    bool absent1 = false;
    bool absent2 = false;
    const auto first = detail::parse_step_field(fields[2], line_no, absent1);
    const auto second = detail::parse_step_field(fields[3], line_no, absent2);
    if (absent1 && !absent2) {
      throw ParseError(where + "second step given without a first step");
    }
    if (!absent1) c.steps.push_back(first);
    if (!absent2) c.steps.push_back(second);
    registry.conditions.push_back(std::move(c));
  }
  validate(registry);
  return registry;
}

inline ConditionRegistry load_registry(const std::filesystem::path& path) {
  return parse_registry(text::read_file(path));
}

inline std::string serialize_registry(const ConditionRegistry& registry) {
  std::string out = "# id | label | step1 | step2\n";
  for (const auto& c : registry.conditions) {
    out += std::to_string(c.id) + " | " + c.label;
    for (std::size_t k = 0; k < 2; ++k) {
      out += " | ";
      if (k < c.steps.size()) {
        out += kind_code(c.steps[k].kind);
        out += ' ';
        out += text::format_shortest(c.steps[k].intensity);
      } else {
        out += '-';
      }
    }
    out += '\n';
  }
  return out;
}

/**
 * Built-in 69-condition registry.
 *
 * Layout by id:
 *   0        clean
 *   1-10     single factor: SP {0.1,0.15,0.2}, GA {0.1,0.15,0.2}, ROT {-60,-30,30,60}
 *   11-19    SP then GA over {0.1,0.15,0.2}^2
 *   20-28    GA then SP over {0.1,0.15,0.2}^2
 *   29-40    SP then ROT, ROT in {-60,-30,30,60}
 *   41-52    ROT then SP
 *   53-68    supplemental single factor: SP and GA {0.05,0.25,0.3,0.35},
 *            ROT {-90,-75,-45,-15,15,45,75,90}
 *
 * Pairs with a 0 degree rotation reduce to an SP single factor and are left
 * out; the supplemental block brings the total to 69.
 */
inline ConditionRegistry default_registry() {
  using Step = PerturbationStep;
  const double noise[] = {0.1, 0.15, 0.2};
  const double angles[] = {-60.0, -30.0, 30.0, 60.0};

  ConditionRegistry registry;
  auto add = [&](std::vector<Step> steps) {
    Condition c;
    c.id = static_cast<int>(registry.conditions.size());
    c.label = make_label(steps);
    c.steps = std::move(steps);
    registry.conditions.push_back(std::move(c));
  };

  add({});
  for (double d : noise) add({Step::salt_pepper(d)});
  for (double s : noise) add({Step::gaussian_noise(s)});
  for (double a : angles) add({Step::rotation(a)});
  for (double d : noise)
    for (double s : noise) add({Step::salt_pepper(d), Step::gaussian_noise(s)});
  for (double s : noise)
    for (double d : noise) add({Step::gaussian_noise(s), Step::salt_pepper(d)});
  for (double d : noise)
    for (double a : angles) add({Step::salt_pepper(d), Step::rotation(a)});
  for (double a : angles)
    for (double d : noise) add({Step::rotation(a), Step::salt_pepper(d)});

  const double extra_noise[] = {0.05, 0.25, 0.3, 0.35};
  const double extra_angles[] = {-90.0, -75.0, -45.0, -15.0, 15.0, 45.0, 75.0, 90.0};
  for (double d : extra_noise) add({Step::salt_pepper(d)});
  for (double s : extra_noise) add({Step::gaussian_noise(s)});
  for (double a : extra_angles) add({Step::rotation(a)});
  return registry;
}

}  // namespace asibench

#endif  // ASIBENCH_REGISTRY_HPP
