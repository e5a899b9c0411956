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

// Corruption kernels and their ordered composition.
//
// Every kernel is a pure function of (image, parameter, seed): no global state,
// safe to call from any number of threads. Zero intensity is an exact identity
// for every kind.

#ifndef ASIBENCH_PERTURB_HPP
#define ASIBENCH_PERTURB_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asibench/error.hpp"
#include "asibench/image.hpp"
#include "asibench/random.hpp"

namespace asibench {

enum class PerturbationKind { identity, salt_pepper, gaussian_noise, rotation };

/// Short code used in registry documents and condition labels.
inline std::string_view kind_code(PerturbationKind kind) noexcept {
  switch (kind) {
    case PerturbationKind::salt_pepper: return "SP";
    case PerturbationKind::gaussian_noise: return "GA";
    case PerturbationKind::rotation: return "ROT";
    case PerturbationKind::identity: break;
  }
  return "ID";
}

struct PerturbationStep {
  PerturbationKind kind = PerturbationKind::identity;
  /// Density for SP, standard deviation for GA, signed degrees for ROT
  /// (positive is clockwise). Ignored for identity.
  double intensity = 0.0;

  static PerturbationStep identity() { return {}; }
  static PerturbationStep salt_pepper(double density) {
    return {PerturbationKind::salt_pepper, density};
  }
  static PerturbationStep gaussian_noise(double sigma) {
    return {PerturbationKind::gaussian_noise, sigma};
  }
  static PerturbationStep rotation(double degrees) {
    return {PerturbationKind::rotation, degrees};
  }

  bool is_identity() const noexcept {
    return kind == PerturbationKind::identity || intensity == 0.0;
  }

  friend bool operator==(const PerturbationStep&,
                         const PerturbationStep&) = default;
};

namespace detail {

inline void check_density(double density) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw InvalidParameter("salt-and-pepper density must lie in [0, 1], got " +
                           std::to_string(density));
  }
}

inline void check_sigma(double sigma) {
  if (!(sigma >= 0.0) || std::isinf(sigma)) {
    throw InvalidParameter(
        "gaussian noise sigma must be finite and >= 0, got " +
        std::to_string(sigma));
  }
}

inline void check_degrees(double degrees) {
  if (!(degrees > -360.0 && degrees < 360.0)) {
    throw InvalidParameter("rotation must lie in (-360, 360) degrees, got " +
                           std::to_string(degrees));
  }
}

}  // namespace detail

/// Throws InvalidParameter if the step's intensity is outside its kind's domain.
inline void validate(const PerturbationStep& step) {
  switch (step.kind) {
    case PerturbationKind::salt_pepper: detail::check_density(step.intensity); break;
    case PerturbationKind::gaussian_noise: detail::check_sigma(step.intensity); break;
    case PerturbationKind::rotation: detail::check_degrees(step.intensity); break;
    case PerturbationKind::identity: break;
  }
}

/// Number of pixel positions salt-and-pepper selects: round(density * W * H),
/// halves rounded away from zero.
inline std::size_t salt_pepper_hits(std::size_t pixel_count, double density) {
  return static_cast<std::size_t>(
      std::llround(density * static_cast<double>(pixel_count)));
}

/**
 * Impulse noise. Selects exactly salt_pepper_hits() pixel positions without
 * replacement (partial Fisher-Yates over the seeded generator), then sets every
 * channel of each selected pixel to 0.0 or 1.0 by a fair coin.
 */
inline Image apply_salt_pepper(const Image& img, double density, Seed seed) {
  detail::check_density(density);
  Image out = img;
  const std::size_t n = img.pixel_count();
  const std::size_t hits = salt_pepper_hits(n, density);
  if (hits == 0) return out;

  Rng rng(seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < hits; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(order[i], order[j]);
  }

  const std::size_t ch = img.channels();
  auto samples = out.samples();
  for (std::size_t i = 0; i < hits; ++i) {
    const double extreme = rng.coin() ? 1.0 : 0.0;
    const std::size_t base = order[i] * ch;
    for (std::size_t c = 0; c < ch; ++c) samples[base + c] = extreme;
  }
  return out;
}

/// Additive zero-mean normal noise with standard deviation sigma on the [0, 1]
/// scale, one independent draw per sample, clamped.
inline Image apply_gaussian_noise(const Image& img, double sigma, Seed seed) {
  detail::check_sigma(sigma);
  Image out = img;
  if (sigma == 0.0) return out;
  Rng rng(seed);
  for (double& v : out.samples()) v = Image::clamp_unit(v + sigma * rng.normal());
  return out;
}

/**
 * Rotates about the image center ((W-1)/2, (H-1)/2). Positive degrees turn the
 * content clockwise as displayed (y axis pointing down). Bilinear resampling;
 * taps outside the source read as 0.0. Dimensions are preserved.
 */
inline Image rotate(const Image& img, double degrees) {
  detail::check_degrees(degrees);
  if (degrees == 0.0) return img;

  const auto [s, c] = sin_cos_degrees(degrees);
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  const std::size_t ch = img.channels();
  const double cx = (static_cast<double>(w) - 1.0) / 2.0;
  const double cy = (static_cast<double>(h) - 1.0) / 2.0;
  const auto src = img.samples();

  auto tap = [&](long long x, long long y, std::size_t k) -> double {
    if (x < 0 || y < 0 || x >= static_cast<long long>(w) ||
        y >= static_cast<long long>(h)) {
      return 0.0;
    }
    return src[(static_cast<std::size_t>(y) * w + static_cast<std::size_t>(x)) * ch + k];
  };

  Image out(w, h, ch, 0.0);
  auto dst = out.samples();
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const double dx = static_cast<double>(x) - cx;
      const double dy = static_cast<double>(y) - cy;
      // Inverse map: rotate the output offset counter-clockwise.
      const double sx = cx + dx * c + dy * s;
      const double sy = cy - dx * s + dy * c;
      if (sx <= -1.0 || sy <= -1.0 || sx >= static_cast<double>(w) ||
          sy >= static_cast<double>(h)) {
        continue;
      }
      const double fx0 = std::floor(sx);
      const double fy0 = std::floor(sy);
      const double ax = sx - fx0;
      const double ay = sy - fy0;
      const auto x0 = static_cast<long long>(fx0);
      const auto y0 = static_cast<long long>(fy0);
      for (std::size_t k = 0; k < ch; ++k) {
        const double top = (1.0 - ax) * tap(x0, y0, k) + ax * tap(x0 + 1, y0, k);
        const double bottom =
            (1.0 - ax) * tap(x0, y0 + 1, k) + ax * tap(x0 + 1, y0 + 1, k);
        dst[(y * w + x) * ch + k] = Image::clamp_unit((1.0 - ay) * top + ay * bottom);
      }
    }
  }
  return out;
}

inline Image apply_step(const Image& img, const PerturbationStep& step, Seed seed) {
  switch (step.kind) {
    case PerturbationKind::salt_pepper: return apply_salt_pepper(img, step.intensity, seed);
    case PerturbationKind::gaussian_noise: return apply_gaussian_noise(img, step.intensity, seed);
    case PerturbationKind::rotation: return rotate(img, step.intensity);
    case PerturbationKind::identity: break;
  }
  return img;
}

/// Applies steps in list order; step i draws from derive_seed(seed, i).
inline Image apply_sequence(const Image& img, std::span<const PerturbationStep> steps,
                            Seed seed) {
  for (const auto& step : steps) validate(step);
  Image out = img;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out = apply_step(out, steps[i], derive_seed(seed, i));
  }
  return out;
}

}  // namespace asibench

#endif  // ASIBENCH_PERTURB_HPP
