// include/emdnoise/shrinkage.hpp

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

// Threshold calculators and shrinkage rules: the adaptive NormalShrink
// threshold, the Donoho-Johnstone universal threshold, MAD noise
// estimation, and soft/hard thresholding.

#ifndef EMDNOISE_SHRINKAGE_HPP_
#define EMDNOISE_SHRINKAGE_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace emdnoise {

enum class ShrinkFlavor { Soft, Hard };
enum class ThresholdMethod { NormalShrink, Universal };

struct ThresholdSpec {
  double value = 0.0;  // same units as signal amplitude; >= 0
  ThresholdMethod method = ThresholdMethod::NormalShrink;
  ShrinkFlavor flavor = ShrinkFlavor::Soft;
};

// Robust Gaussian sigma estimate: median(|values|) / 0.6745. The median
// of an even-length list is the mean of the two middle order statistics.
double mad_sigma(std::span<const double> values);

// NormalShrink scale parameter beta = sqrt(ln(frame_length / num_imfs)).
// Throws std::domain_error when frame_length <= num_imfs (the ratio's
// log would be non-positive).
double normal_shrink_beta(std::size_t frame_length, std::size_t num_imfs);

// NormalShrink threshold T = beta * sigma_hat^2 / sigma_y, with
// beta as above, sigma_hat the MAD estimate over the frame and sigma_y
// its population standard deviation. Returns 0 for a (near-)constant
// frame. unsquared_variance swaps the numerator to plain sigma_hat.
// Throws std::domain_error when frame_length <= num_imfs.
double normal_shrink_threshold(std::span<const double> imf_values,
                               std::size_t frame_length, std::size_t num_imfs,
                               bool unsquared_variance = false);

// Donoho-Johnstone universal threshold sigma * sqrt(2 ln n); 0 at n = 1.
double universal_threshold(double noise_sigma, std::size_t n);

// sign(x) * max(|x| - t, 0)
std::vector<double> soft_threshold(std::span<const double> values, double t);

// x * 1(|x| > t)
std::vector<double> hard_threshold(std::span<const double> values, double t);

std::vector<double> apply_threshold(std::span<const double> values,
                                    const ThresholdSpec& spec);

}  // namespace emdnoise

#endif  // EMDNOISE_SHRINKAGE_HPP_
