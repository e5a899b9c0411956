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

#include <string>

#include "asibench/netpbm.hpp"
#include "asibench/random.hpp"
#include "oracles.hpp"

using namespace asibench;

TEST(Netpbm, DecodesHeaderWithComments) {
  std::string data = "P5\n# made by hand\n3 2\n# max\n255\n";
  data += std::string("\x00\x80\xff\x01\x02\x03", 6);
  const auto img = decode_netpbm(data);
  EXPECT_EQ(img.width(), 3u);
  EXPECT_EQ(img.height(), 2u);
  EXPECT_EQ(img.channels(), 1u);
  EXPECT_EQ(img.at(0, 0), 0.0);
  EXPECT_EQ(img.at(1, 0), 128.0 / 255.0);
  EXPECT_EQ(img.at(2, 0), 1.0);
}

TEST(Netpbm, ScalesSmallMaxval) {
  std::string data = "P5 2 1 15\n";
  data += std::string("\x0f\x05", 2);
  const auto img = decode_netpbm(data);
  EXPECT_EQ(img.at(0, 0), 1.0);
  EXPECT_EQ(img.at(1, 0), 5.0 / 15.0);
}

TEST(Netpbm, EncodeDecodeIsLosslessAt8Bits) {
  // Any byte raster survives decode -> encode unchanged, gray and RGB.
  Rng rng(Seed{3});
  for (std::size_t channels : {1u, 3u}) {
    std::string raster;
    for (int i = 0; i < 7 * 5 * static_cast<int>(channels); ++i) {
      raster.push_back(static_cast<char>(rng.below(256)));
    }
    const std::string file =
        std::string(channels == 1 ? "P5" : "P6") + "\n7 5\n255\n" + raster;
    const auto img = decode_netpbm(file);
    EXPECT_EQ(encode_netpbm(img), file);
  }
}

TEST(Netpbm, FileRoundTrip) {
  oracle::TempDir dir;
  Image img(4, 3, 3, 0.0);
  img.set(1, 2, 0, 0.2);
  img.set(3, 0, 2, 1.0);
  write_netpbm(dir / "x.ppm", img);
  const auto back = read_netpbm(dir / "x.ppm");
  EXPECT_EQ(back.channels(), 3u);
  EXPECT_EQ(quantize_8bit(back.at(1, 2, 0)), quantize_8bit(0.2));
  EXPECT_EQ(back.at(3, 0, 2), 1.0);
}

TEST(Netpbm, RejectsMalformedInput) {
  EXPECT_THROW(decode_netpbm("P2\n1 1\n255\n0"), ParseError);
  EXPECT_THROW(decode_netpbm("P5\n2 2\n255\n\x01"), ParseError);
  EXPECT_THROW(decode_netpbm("P5\n2 2\n65535\n"), ParseError);
  EXPECT_THROW(decode_netpbm("P5\n0 2\n255\n"), ParseError);
  EXPECT_THROW(decode_netpbm("P6\nx 2\n255\n"), ParseError);
  EXPECT_THROW(decode_netpbm(std::string("P5 1 1 10\n\x0b", 11)), ParseError);
}

TEST(Netpbm, MissingFileIsIoError) {
  EXPECT_THROW(read_netpbm("/nonexistent/asibench/none.pgm"), IoError);
}
