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

#ifndef ASIBENCH_IMAGE_HPP
#define ASIBENCH_IMAGE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "asibench/error.hpp"

namespace asibench {

/**
 * Row-major raster of intensities in [0, 1].
 *
 * Channels are interleaved: the sample for (x, y, c) lives at
 * ((y * width + x) * channels + c). Only gray (1) and RGB (3) are allowed.
 */
class Image {
 public:
  Image(std::size_t width, std::size_t height, std::size_t channels,
        double fill = 0.0)
      : width_(width), height_(height), channels_(channels) {
    check_shape();
    if (!(fill >= 0.0 && fill <= 1.0)) {
      throw InvalidParameter("image fill value must lie in [0, 1]");
    }
    data_.assign(width * height * channels, fill);
  }

  Image(std::size_t width, std::size_t height, std::size_t channels,
        std::vector<double> samples)
      : width_(width), height_(height), channels_(channels),
        data_(std::move(samples)) {
    check_shape();
    if (data_.size() != width_ * height_ * channels_) {
      throw InvalidParameter("image sample count " +
                             std::to_string(data_.size()) +
                             " does not match " + std::to_string(width_) +
                             "x" + std::to_string(height_) + "x" +
                             std::to_string(channels_));
    }
    for (double v : data_) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw InvalidParameter("image intensity outside [0, 1]");
      }
    }
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t channels() const noexcept { return channels_; }
  /// Number of pixel positions (width x height), ignoring channels.
  std::size_t pixel_count() const noexcept { return width_ * height_; }

  std::span<const double> samples() const noexcept { return data_; }
  std::span<double> samples() noexcept { return data_; }

  double at(std::size_t x, std::size_t y, std::size_t c = 0) const {
    return data_[index(x, y, c)];
  }
  /// Writes are clamped to [0, 1].
  void set(std::size_t x, std::size_t y, std::size_t c, double v) {
    data_[index(x, y, c)] = clamp_unit(v);
  }

  std::size_t index(std::size_t x, std::size_t y, std::size_t c) const noexcept {
    return (y * width_ + x) * channels_ + c;
  }

  static double clamp_unit(double v) noexcept {
    // NaN collapses to 0.
    if (!(v > 0.0)) return 0.0;
    return v < 1.0 ? v : 1.0;
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  void check_shape() const {
    if (width_ == 0 || height_ == 0) {
      throw InvalidParameter("image dimensions must be positive");
    }
    if (channels_ != 1 && channels_ != 3) {
      throw InvalidParameter("image must have 1 or 3 channels, got " +
                             std::to_string(channels_));
    }
  }

  std::size_t width_;
  std::size_t height_;
  std::size_t channels_;
  std::vector<double> data_;
};

}  // namespace asibench

#endif  // ASIBENCH_IMAGE_HPP
