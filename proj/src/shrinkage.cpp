// src/shrinkage.cpp

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

#include "emdnoise/shrinkage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace emdnoise {

double mad_sigma(std::span<const double> values) {
  if (values.empty())
    throw std::invalid_argument("mad_sigma: empty input");

  std::vector<double> magnitudes(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    magnitudes[i] = std::abs(values[i]);

  const std::size_t n = magnitudes.size();
  const std::size_t hi = n / 2;
  std::nth_element(magnitudes.begin(), magnitudes.begin() + hi,
                   magnitudes.end());
  double median = magnitudes[hi];
  if (n % 2 == 0) {
    // mean of the two middle order statistics
    const double lo =
        *std::max_element(magnitudes.begin(), magnitudes.begin() + hi);
    median = 0.5 * (lo + median);
  }
  return median / 0.6745;
}

double normal_shrink_beta(std::size_t frame_length, std::size_t num_imfs) {
  if (num_imfs == 0)
    throw std::invalid_argument("normal_shrink_beta: num_imfs == 0");
  if (frame_length <= num_imfs)
    throw std::domain_error(
        "scale parameter undefined: frame_length <= num_imfs");
  return std::sqrt(std::log(static_cast<double>(frame_length) /
                            static_cast<double>(num_imfs)));
}

double normal_shrink_threshold(std::span<const double> imf_values,
                               std::size_t frame_length, std::size_t num_imfs,
                               bool unsquared_variance) {
  if (imf_values.empty())
    throw std::invalid_argument("normal_shrink_threshold: empty input");

  const double beta = normal_shrink_beta(frame_length, num_imfs);

  double mean = 0.0;
  for (double x : imf_values) mean += x;
  mean /= static_cast<double>(imf_values.size());
  double var = 0.0;
  for (double x : imf_values) var += (x - mean) * (x - mean);
  var /= static_cast<double>(imf_values.size());  // population convention
  const double sigma_y = std::sqrt(var);
  if (sigma_y < 1e-15) return 0.0;  // constant frame needs no shrinkage

  const double sigma_hat = mad_sigma(imf_values);
  const double numerator =
      unsquared_variance ? sigma_hat : sigma_hat * sigma_hat;
  return beta * numerator / sigma_y;
}

double universal_threshold(double noise_sigma, std::size_t n) {
  if (n < 1)
    throw std::invalid_argument("universal_threshold: n must be positive");
  return noise_sigma * std::sqrt(2.0 * std::log(static_cast<double>(n)));
}

std::vector<double> soft_threshold(std::span<const double> values, double t) {
  if (t < 0.0) throw std::invalid_argument("threshold must be non-negative");
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double shrunk = std::abs(values[i]) - t;
    out[i] = shrunk > 0.0 ? std::copysign(shrunk, values[i]) : 0.0;
  }
  return out;
}

std::vector<double> hard_threshold(std::span<const double> values, double t) {
  if (t < 0.0) throw std::invalid_argument("threshold must be non-negative");
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out[i] = std::abs(values[i]) > t ? values[i] : 0.0;
  return out;
}

std::vector<double> apply_threshold(std::span<const double> values,
                                    const ThresholdSpec& spec) {
  return spec.flavor == ShrinkFlavor::Soft ? soft_threshold(values, spec.value)
                                           : hard_threshold(values, spec.value);
}

}  // namespace emdnoise
