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

// Seeded randomness with a bit-exact contract across platforms.
//
// Generator: xoshiro256** (Blackman & Vigna), state expanded from a 64-bit
// seed with splitmix64. Normal deviates use the Marsaglia polar method over a
// logarithm built from IEEE basic operations only, so no result depends on the
// host libm. Sub-seeds are derived by folding indices through the splitmix64
// finalizer:
//
//   derive_seed(s, i)      = fmix(s + golden * (i + 1))
//   derive_seed(s, i, j)   = derive_seed(derive_seed(s, i), j)

#ifndef ASIBENCH_RANDOM_HPP
#define ASIBENCH_RANDOM_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace asibench {

struct Seed {
  std::uint64_t value = 0;
  friend constexpr bool operator==(Seed, Seed) = default;
};

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix_finalize(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::uint64_t index) noexcept {
  return detail::splitmix_finalize(seed + detail::kGolden * (index + 1));
}

template <typename... Rest>
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t first,
                                    std::uint64_t second, Rest... rest) noexcept {
  return derive_seed(derive_seed(seed, first), second,
                     static_cast<std::uint64_t>(rest)...);
}

constexpr Seed derive_seed(Seed seed, std::uint64_t index) noexcept {
  return Seed{derive_seed(seed.value, index)};
}

/// Natural logarithm from frexp and an atanh series; deterministic IEEE ops.
inline double portable_log(double x) noexcept {
  if (!(x > 0.0)) return -std::numeric_limits<double>::infinity();
  if (x == std::numeric_limits<double>::infinity()) return x;
  int exponent = 0;
  double m = std::frexp(x, &exponent);  // m in [0.5, 1)
  if (m < 0.70710678118654752440) {
    m *= 2.0;
    --exponent;
  }
  // log(m) = 2 atanh(s), |s| <= 0.1716
  const double s = (m - 1.0) / (m + 1.0);
  const double s2 = s * s;
  double p = 1.0 / 29.0;
  for (int k = 27; k >= 1; k -= 2) p = p * s2 + 1.0 / k;
  constexpr double kLn2 = 0.69314718055994530942;
  return static_cast<double>(exponent) * kLn2 + 2.0 * s * p;
}

namespace detail {

// Taylor series on [0, pi/4].
inline double sin_reduced(double x) noexcept {
  const double x2 = x * x;
  double p = 1.0;
  for (int n = 10; n >= 1; --n) p = 1.0 - x2 / ((2.0 * n) * (2.0 * n + 1.0)) * p;
  return x * p;
}

inline double cos_reduced(double x) noexcept {
  const double x2 = x * x;
  double p = 1.0;
  for (int n = 10; n >= 1; --n) p = 1.0 - x2 / ((2.0 * n - 1.0) * (2.0 * n)) * p;
  return p;
}

}  // namespace detail

struct SinCos {
  double sin;
  double cos;
};

/// sin and cos of an angle in degrees. Exact at multiples of 90.
inline SinCos sin_cos_degrees(double degrees) noexcept {
  double r = std::fmod(degrees, 360.0);
  if (r < 0.0) r += 360.0;
  int quadrant = static_cast<int>(r / 90.0);
  if (quadrant > 3) quadrant = 3;
  double a = r - 90.0 * quadrant;
  if (a < 0.0) a = 0.0;
  constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
  double s = 0.0;
  double c = 1.0;
  if (a > 45.0) {
    const double b = (90.0 - a) * kDegToRad;
    s = detail::cos_reduced(b);
    c = detail::sin_reduced(b);
  } else if (a > 0.0) {
    const double b = a * kDegToRad;
    s = detail::sin_reduced(b);
    c = detail::cos_reduced(b);
  }
  switch (quadrant) {
    case 0: return {s, c};
    case 1: return {c, -s};
    case 2: return {-s, -c};
    default: return {-c, s};
  }
}

/// xoshiro256**. Satisfies UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(Seed seed) noexcept {
    std::uint64_t sm = seed.value;
    for (auto& word : state_) {
      sm += detail::kGolden;
      word = detail::splitmix_finalize(sm);
    }
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    const std::uint64_t result = detail::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// Unbiased uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = (*this)();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() noexcept { return ((*this)() >> 63) != 0; }

  /// Standard normal deviate (Marsaglia polar method).
  double normal() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    for (;;) {
      const double u = 2.0 * uniform() - 1.0;
      const double v = 2.0 * uniform() - 1.0;
      const double s = u * u + v * v;
      if (s >= 1.0 || s == 0.0) continue;
      const double factor = std::sqrt(-2.0 * portable_log(s) / s);
      spare_ = v * factor;
      has_spare_ = true;
      return u * factor;
    }
  }

 private:
  std::array<std::uint64_t, 4> state_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace asibench

#endif  // ASIBENCH_RANDOM_HPP
