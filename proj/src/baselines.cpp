// src/baselines.cpp

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

#include "emdnoise/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace emdnoise {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 FFT. n must be a power of two. The frame
// lengths here are small (256 by default) so no fancy planning is
// warranted.
void fft_in_place(std::vector<std::complex<double>>& data, bool inverse) {
  const std::size_t n = data.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
    const std::complex<double> root(std::cos(angle), std::sin(angle));
    for (std::size_t start = 0; start < n; start += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> even = data[start + k];
        const std::complex<double> odd = data[start + k + len / 2] * w;
        data[start + k] = even + odd;
        data[start + k + len / 2] = even - odd;
        w *= root;
      }
    }
  }
  if (inverse)
    for (auto& x : data) x /= static_cast<double>(n);
}

}  // namespace

Signal wiener_denoise(const Signal& noisy, const WienerConfig& config) {
  validate(noisy);
  const std::size_t frame_len = config.fft_frame_length;
  if (!is_power_of_two(frame_len) || frame_len < 2)
    throw std::invalid_argument("fft_frame_length must be a power of two >= 2");
  if (config.overlap_fraction < 0.0 || config.overlap_fraction >= 1.0)
    throw std::invalid_argument("overlap_fraction must be in [0, 1)");
  const std::size_t n = noisy.size();
  if (n < frame_len)
    throw std::invalid_argument("signal shorter than one Wiener frame");

  const std::size_t hop = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::llround(static_cast<double>(frame_len) *
                          (1.0 - config.overlap_fraction))));

  // Half-sample-offset raised cosine: strictly positive, and at 50%
  // overlap the shifted copies sum to exactly 1. The accumulated window
  // sum is divided out, so reconstruction is exact at any overlap.
  std::vector<double> window(frame_len);
  for (std::size_t i = 0; i < frame_len; ++i)
    window[i] = 0.5 * (1.0 - std::cos(2.0 * kPi *
                                      (static_cast<double>(i) + 0.5) /
                                      static_cast<double>(frame_len)));

  double noise_power = 0.0;  // per-sample variance sigma_n^2
  if (config.noise_power_policy == NoisePowerPolicy::Known) {
    if (config.known_noise_power < 0.0)
      throw std::invalid_argument("known noise power must be non-negative");
    noise_power = config.known_noise_power;
  } else {
    if (config.estimate_frames == 0)
      throw std::invalid_argument("estimate_frames must be positive");
    std::size_t used = 0;
    double sum = 0.0;
    for (std::size_t start = 0;
         start + frame_len <= n && used < config.estimate_frames;
         start += hop, ++used) {
      for (std::size_t i = 0; i < frame_len; ++i)
        sum += noisy.samples[start + i] * noisy.samples[start + i];
    }
    noise_power = sum / (static_cast<double>(used) *
                         static_cast<double>(frame_len));
  }
  const double noise_floor = noise_power * static_cast<double>(frame_len);

  std::vector<double> accum(n, 0.0), weight(n, 0.0);
  std::vector<std::complex<double>> spectrum(frame_len);
  for (std::size_t start = 0; start < n; start += hop) {
    for (std::size_t i = 0; i < frame_len; ++i) {
      spectrum[i] = start + i < n ? noisy.samples[start + i] : 0.0;
    }
    fft_in_place(spectrum, false);
    for (auto& bin : spectrum) {
      const double periodogram = std::norm(bin);
      const double gain =
          periodogram > 0.0
              ? std::max(0.0, (periodogram - noise_floor) / periodogram)
              : 0.0;
      bin *= gain;
    }
    fft_in_place(spectrum, true);
    for (std::size_t i = 0; i < frame_len && start + i < n; ++i) {
      accum[start + i] += window[i] * spectrum[i].real();
      weight[start + i] += window[i];
    }
  }

  Signal out;
  out.sample_rate_hz = noisy.sample_rate_hz;
  out.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.samples[i] = weight[i] > 1e-12 ? accum[i] / weight[i] : 0.0;
  return out;
}

namespace {

int auto_levels(std::size_t n) {
  int log2n = 0;
  while ((std::size_t{1} << (log2n + 1)) <= n) ++log2n;
  return std::max(1, log2n - 4);
}

}  // namespace

HaarPyramid dwt_forward(std::span<const double> samples,
                        const DwtConfig& config) {
  if (samples.empty()) throw std::invalid_argument("dwt_forward: empty input");
  const int levels = config.levels > 0 ? config.levels
                                       : auto_levels(samples.size());
  if (levels < 1) throw std::invalid_argument("levels must be at least 1");
  const std::size_t block = std::size_t{1} << levels;
  if (block > samples.size())
    throw std::invalid_argument("levels too deep for signal length");

  HaarPyramid pyramid;
  pyramid.original_length = samples.size();
  const std::size_t padded = ((samples.size() + block - 1) / block) * block;

  std::vector<double> approx(samples.begin(), samples.end());
  approx.resize(padded, 0.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int level = 0; level < levels; ++level) {
    const std::size_t half = approx.size() / 2;
    std::vector<double> next(half), detail(half);
    for (std::size_t i = 0; i < half; ++i) {
      const double a = approx[2 * i];
      const double b = approx[2 * i + 1];
      next[i] = (a + b) * inv_sqrt2;
      detail[i] = (a - b) * inv_sqrt2;
    }
    pyramid.details.push_back(std::move(detail));
    approx = std::move(next);
  }
  pyramid.approx = std::move(approx);
  return pyramid;
}

std::vector<double> dwt_inverse(const HaarPyramid& pyramid) {
  std::vector<double> approx = pyramid.approx;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t level = pyramid.details.size(); level > 0; --level) {
    const std::vector<double>& detail = pyramid.details[level - 1];
    if (detail.size() != approx.size())
      throw std::invalid_argument("pyramid bands have inconsistent sizes");
    std::vector<double> merged(2 * approx.size());
    for (std::size_t i = 0; i < approx.size(); ++i) {
      merged[2 * i] = (approx[i] + detail[i]) * inv_sqrt2;
      merged[2 * i + 1] = (approx[i] - detail[i]) * inv_sqrt2;
    }
    approx = std::move(merged);
  }
  approx.resize(pyramid.original_length);
  return approx;
}

Signal universal_dwt_denoise(const Signal& noisy, ShrinkFlavor flavor,
                             const DwtConfig& config) {
  validate(noisy);
  HaarPyramid pyramid = dwt_forward(noisy.samples, config);

  const double sigma = mad_sigma(pyramid.details.front());
  const double threshold = universal_threshold(sigma, noisy.size());
  for (std::vector<double>& band : pyramid.details) {
    band = flavor == ShrinkFlavor::Soft ? soft_threshold(band, threshold)
                                        : hard_threshold(band, threshold);
  }

  Signal out;
  out.samples = dwt_inverse(pyramid);
  out.sample_rate_hz = noisy.sample_rate_hz;
  return out;
}

}  // namespace emdnoise
