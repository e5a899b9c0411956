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

#include <set>
#include <string>

#include "asibench/registry.hpp"

using namespace asibench;

namespace {

bool in(double v, std::initializer_list<double> grid) {
  for (double g : grid)
    if (v == g) return true;
  return false;
}

constexpr std::initializer_list<double> kNoise = {0.1, 0.15, 0.2};
constexpr std::initializer_list<double> kAngles = {-60.0, -30.0, 0.0, 30.0, 60.0};

}  // namespace

TEST(DefaultRegistry, HasSixtyNineConditionsCleanFirst) {
  const auto reg = default_registry();
  ASSERT_EQ(reg.size(), 69u);
  EXPECT_EQ(reg.conditions[0].id, 0);
  EXPECT_TRUE(reg.conditions[0].steps.empty());
  EXPECT_EQ(reg.conditions[0].label, "clean");
  EXPECT_EQ(reg.group_size, 500u);
  std::size_t clean = 0;
  for (const auto& c : reg.conditions) clean += c.is_clean() ? 1 : 0;
  EXPECT_EQ(clean, 1u);
  EXPECT_NO_THROW(validate(reg));
}

TEST(DefaultRegistry, TwoFactorConditionsStayOnGrid) {
  const auto reg = default_registry();
  std::size_t two_factor = 0;
  std::set<std::string> labels;
  for (const auto& c : reg.conditions) {
    EXPECT_TRUE(labels.insert(c.label).second) << c.label;
    if (c.steps.size() != 2) continue;
    ++two_factor;
    const auto& a = c.steps[0];
    const auto& b = c.steps[1];
    using K = PerturbationKind;
    const bool sp_ga = a.kind == K::salt_pepper && b.kind == K::gaussian_noise &&
                       in(a.intensity, kNoise) && in(b.intensity, kNoise);
    const bool ga_sp = a.kind == K::gaussian_noise && b.kind == K::salt_pepper &&
                       in(a.intensity, kNoise) && in(b.intensity, kNoise);
    const bool sp_rot = a.kind == K::salt_pepper && b.kind == K::rotation &&
                        in(a.intensity, kNoise) && in(b.intensity, kAngles);
    const bool rot_sp = a.kind == K::rotation && b.kind == K::salt_pepper &&
                        in(a.intensity, kAngles) && in(b.intensity, kNoise);
    EXPECT_TRUE(sp_ga || ga_sp || sp_rot || rot_sp) << c.label;
    EXPECT_FALSE(a.is_identity() || b.is_identity()) << c.label;
  }
  EXPECT_EQ(two_factor, 42u);
}

TEST(DefaultRegistry, LabelsDescribeSteps) {
  const auto reg = default_registry();
  EXPECT_EQ(reg.find(1)->label, "SP0.1");
  EXPECT_EQ(reg.find(11)->label, "SP0.1_GA0.1");
  EXPECT_EQ(reg.find(41)->label, "ROT-60_SP0.1");
}

TEST(RegistryDocument, SerializeParseRoundTrip) {
  const auto reg = default_registry();
  EXPECT_EQ(parse_registry(serialize_registry(reg)), reg);
}

TEST(RegistryDocument, ShippedDefaultMatchesBuiltIn) {
  EXPECT_EQ(load_registry(ASIBENCH_DATA_DIR "/default_registry.txt"), default_registry());
}

TEST(RegistryDocument, ParsesCommentsAndAbsentSteps) {
  const auto reg = parse_registry(
      "# header\n"
      "0 | clean | - | -\n"
      "\n"
      "3 | mix | SP 0.2 | ROT -30\n"
      "7 | g | GA 0.05 | -\n");
  ASSERT_EQ(reg.size(), 3u);
  EXPECT_EQ(reg.find(3)->steps[1], PerturbationStep::rotation(-30.0));
  EXPECT_EQ(reg.find(7)->steps.size(), 1u);
}

TEST(RegistryDocument, DuplicateIdIsValidationError) {
  try {
    parse_registry("0 | clean | - | -\n5 | a | SP 0.1 | -\n5 | b | GA 0.1 | -\n");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("condition 5"), std::string::npos);
  }
}

TEST(RegistryDocument, OutOfRangeIntensityIsValidationError) {
  EXPECT_THROW(parse_registry("0 | clean | - | -\n1 | bad | SP 1.5 | -\n"), ValidationError);
  EXPECT_THROW(parse_registry("0 | clean | - | -\n1 | bad | GA -0.1 | -\n"), ValidationError);
  EXPECT_THROW(parse_registry("0 | clean | - | -\n1 | bad | ROT 360 | -\n"), ValidationError);
}

TEST(RegistryDocument, ParseErrorsCarryLineNumbers) {
  try {
    parse_registry("0 | clean | - | -\n1 | x | BLUR 0.1 | -\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_registry("0 | clean | -\n"), ParseError);
  EXPECT_THROW(parse_registry("x | clean | - | -\n"), ParseError);
  EXPECT_THROW(parse_registry("0 | clean | - | -\n1 | y | - | SP 0.1\n"), ParseError);
}

TEST(RegistryDocument, CleanConditionRules) {
  EXPECT_THROW(parse_registry("1 | a | SP 0.1 | -\n"), ValidationError);
  EXPECT_THROW(parse_registry("0 | clean | - | -\n2 | empty | - | -\n"), ValidationError);
  EXPECT_THROW(parse_registry("0 | c | SP 0.1 | -\n"), ValidationError);
  EXPECT_THROW(parse_registry(""), ValidationError);
}
