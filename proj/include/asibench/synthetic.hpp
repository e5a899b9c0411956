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

#ifndef ASIBENCH_SYNTHETIC_HPP
#define ASIBENCH_SYNTHETIC_HPP

#include <cstdio>
#include <string>
#include <vector>

#include "asibench/corpus.hpp"
#include "asibench/image.hpp"
#include "asibench/netpbm.hpp"
#include "asibench/random.hpp"

namespace asibench {

/**
 * Three separable gray-scale classes for pipeline tests:
 *   dark      smooth, intensity around 0.25
 *   bright    smooth, intensity around 0.75
 *   textured  4-pixel checkerboard of 0.3 / 0.7
 * Classes are interleaved (img_000 dark, img_001 bright, ...). Each image gets
 * a small seeded brightness jitter so groups are not constant.
 */
inline std::vector<LabeledImage> make_synthetic_corpus(std::size_t per_class,
                                                       std::size_t side, Seed seed) {
  static constexpr const char* kClasses[] = {"dark", "bright", "textured"};
  std::vector<LabeledImage> corpus;
  const std::size_t total = per_class * 3;
  for (std::size_t i = 0; i < total; ++i) {
    Rng rng(derive_seed(seed, i));
    const std::size_t cls = i % 3;
    const double jitter = 0.08 * (rng.uniform() - 0.5);
    Image img(side, side, 1, 0.0);
    for (std::size_t y = 0; y < side; ++y) {
      for (std::size_t x = 0; x < side; ++x) {
        const double ramp = 0.05 * (static_cast<double>(x) / static_cast<double>(side - 1) - 0.5);
        double v = 0.0;
        switch (cls) {
          case 0: v = 0.25 + ramp; break;
          case 1: v = 0.75 + ramp; break;
          default: v = ((x / 4 + y / 4) % 2 == 0) ? 0.3 : 0.7; break;
        }
        img.set(x, y, 0, v + jitter);
      }
    }
    char name[32];
    std::snprintf(name, sizeof name, "img_%03zu.pgm", i);
    std::string bytes = encode_netpbm(img);
    // Store the quantized image so decode(encoded) == image.
    corpus.push_back({name, kClasses[cls], decode_netpbm(bytes), std::move(bytes)});
  }
  return corpus;
}

}  // namespace asibench

#endif  // ASIBENCH_SYNTHETIC_HPP
