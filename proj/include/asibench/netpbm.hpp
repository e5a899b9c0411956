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

// Binary PGM (P5) and PPM (P6), 8 bits per sample.
//
// Decoding maps a sample b to b / maxval; encoding always writes maxval 255
// and quantizes with round(v * 255). An image decoded from a maxval-255 file
// re-encodes to the same raster bytes.

#ifndef ASIBENCH_NETPBM_HPP
#define ASIBENCH_NETPBM_HPP

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "asibench/error.hpp"
#include "asibench/image.hpp"
#include "asibench/text.hpp"

namespace asibench {

namespace detail {

class PnmHeaderReader {
 public:
  explicit PnmHeaderReader(std::string_view data) : data_(data) {}

  std::size_t number(const char* what) {
    skip_space_and_comments();
    std::size_t value = 0;
    std::size_t digits = 0;
    while (pos_ < data_.size() && data_[pos_] >= '0' && data_[pos_] <= '9') {
      value = value * 10 + static_cast<std::size_t>(data_[pos_] - '0');
      if (value > (1u << 24)) throw ParseError(std::string("netpbm: ") + what + " too large");
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError(std::string("netpbm: missing ") + what);
    return value;
  }

  /// Consumes the single whitespace byte separating header and raster.
  std::size_t raster_offset() {
    if (pos_ >= data_.size() || !is_space(data_[pos_])) {
      throw ParseError("netpbm: missing whitespace before raster");
    }
    return pos_ + 1;
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  }

  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      if (is_space(data_[pos_])) {
        ++pos_;
      } else if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view data_;
  std::size_t pos_ = 2;
};

}  // namespace detail

inline Image decode_netpbm(std::string_view data) {
  if (data.size() < 2 || data[0] != 'P' || (data[1] != '5' && data[1] != '6')) {
    throw ParseError("netpbm: expected P5 or P6 magic");
  }
  const std::size_t channels = data[1] == '5' ? 1 : 3;
  detail::PnmHeaderReader header(data);
  const std::size_t width = header.number("width");
  const std::size_t height = header.number("height");
  const std::size_t maxval = header.number("maxval");
  if (width == 0 || height == 0) throw ParseError("netpbm: zero dimension");
  if (maxval == 0 || maxval > 255) {
    throw ParseError("netpbm: only 8-bit maxval (1..255) is supported, got " +
                     std::to_string(maxval));
  }
  const std::size_t offset = header.raster_offset();
  const std::size_t expected = width * height * channels;
  if (data.size() - offset < expected) {
    throw ParseError("netpbm: truncated raster, expected " +
                     std::to_string(expected) + " bytes");
  }
  std::vector<double> samples(expected);
  const double scale = static_cast<double>(maxval);
  for (std::size_t i = 0; i < expected; ++i) {
    const auto b = static_cast<unsigned char>(data[offset + i]);
    if (b > maxval) throw ParseError("netpbm: sample exceeds maxval");
    samples[i] = static_cast<double>(b) / scale;
  }
  return Image(width, height, channels, std::move(samples));
}

inline std::uint8_t quantize_8bit(double v) noexcept {
  return static_cast<std::uint8_t>(std::floor(Image::clamp_unit(v) * 255.0 + 0.5));
}

inline std::string encode_netpbm(const Image& img) {
  std::string out = img.channels() == 1 ? "P5\n" : "P6\n";
  out += std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  const auto samples = img.samples();
  out.reserve(out.size() + samples.size());
  for (double v : samples) out.push_back(static_cast<char>(quantize_8bit(v)));
  return out;
}

inline Image read_netpbm(const std::filesystem::path& path) {
  const std::string data = text::read_file(path);
  try {
    return decode_netpbm(data);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

inline void write_netpbm(const std::filesystem::path& path, const Image& img) {
  text::write_file(path, encode_netpbm(img));
}

}  // namespace asibench

#endif  // ASIBENCH_NETPBM_HPP
