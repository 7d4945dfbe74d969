// tests/test_util.hpp

// Copyright 2026  The emdnoise authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// Small signal generators and metrics shared by the test suites.

#ifndef EMDNOISE_TESTS_TEST_UTIL_HPP_
#define EMDNOISE_TESTS_TEST_UTIL_HPP_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "emdnoise/rng.hpp"
#include "emdnoise/signal.hpp"

namespace testutil {

constexpr double kPi = 3.14159265358979323846;

inline emdnoise::Signal tone(double freq_hz, std::size_t n,
                             int rate_hz = 8000, double amplitude = 1.0,
                             double phase = 0.0) {
  emdnoise::Signal s;
  s.sample_rate_hz = rate_hz;
  s.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    s.samples[i] = amplitude * std::sin(2.0 * kPi * freq_hz *
                                            static_cast<double>(i) / rate_hz +
                                        phase);
  return s;
}

inline emdnoise::Signal two_tone(std::size_t n, int rate_hz = 8000) {
  emdnoise::Signal s = tone(250.0, n, rate_hz);
  const emdnoise::Signal high = tone(900.0, n, rate_hz, 0.6, 0.8);
  for (std::size_t i = 0; i < n; ++i) s.samples[i] += high.samples[i];
  return s;
}

// Two-tone mix gated into two bursts with quiet gaps, the shape the
// denoiser is built for: the gaps give the MAD estimator clean looks at
// the noise floor.
inline emdnoise::Signal gated_two_tone(std::size_t n, int rate_hz = 8000) {
  emdnoise::Signal s = two_tone(n, rate_hz);
  const std::size_t ramp = std::max<std::size_t>(1, n / 32);
  auto gate = [&](std::size_t i, std::size_t start, std::size_t stop) {
    if (i < start || i >= stop) return 0.0;
    const std::size_t into = i - start;
    const std::size_t left = stop - 1 - i;
    const std::size_t edge = std::min(into, left);
    if (edge >= ramp) return 1.0;
    return 0.5 * (1.0 - std::cos(kPi * (static_cast<double>(edge) + 1.0) /
                                 (static_cast<double>(ramp) + 1.0)));
  };
  for (std::size_t i = 0; i < n; ++i) {
    const double g = gate(i, 0, (n * 3) / 10) +
                     gate(i, (n * 9) / 20, (n * 3) / 4);
    s.samples[i] *= g;
  }
  return s;
}

inline emdnoise::Signal white_noise(std::size_t n, std::uint64_t seed,
                                    double sigma = 1.0, int rate_hz = 8000) {
  emdnoise::Signal s;
  s.sample_rate_hz = rate_hz;
  s.samples.resize(n);
  emdnoise::GaussianRng rng(seed);
  for (double& x : s.samples) x = sigma * rng.next();
  return s;
}

inline double max_abs(std::span<const double> values) {
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  return peak;
}

inline double max_abs_diff(std::span<const double> a,
                           std::span<const double> b) {
  double peak = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    peak = std::max(peak, std::abs(a[i] - b[i]));
  return peak;
}

// ||a - b||_2 / ||a||_2; +inf when a is zero but b is not.
inline double relative_l2(std::span<const double> a,
                          std::span<const double> b) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    num += d * d;
    den += a[i] * a[i];
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : INFINITY;
  return std::sqrt(num / den);
}

// Unique scratch directory under the system temp dir, removed on
// destruction. Keeps the suites runnable in parallel.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    const auto base = std::filesystem::temp_directory_path();
    std::mt19937_64 rng(std::random_device{}());
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto candidate = base / (tag + "-" + std::to_string(rng()));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path_ = candidate;
        return;
      }
    }
    throw std::runtime_error("cannot create scratch directory under " +
                             base.string());
  }

  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }

  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace testutil

#endif  // EMDNOISE_TESTS_TEST_UTIL_HPP_
