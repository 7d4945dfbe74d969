// include/emdnoise/baselines.hpp

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

// Comparison denoisers: a short-time spectral Wiener filter and
// universal-threshold Haar wavelet shrinkage (soft and hard).

#ifndef EMDNOISE_BASELINES_HPP_
#define EMDNOISE_BASELINES_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "emdnoise/shrinkage.hpp"
#include "emdnoise/signal.hpp"

namespace emdnoise {

enum class NoisePowerPolicy { Known, EstimateFromFirstFrames };

struct WienerConfig {
  std::size_t fft_frame_length = 256;  // must be a power of two
  double overlap_fraction = 0.5;       // in [0, 1)
  NoisePowerPolicy noise_power_policy = NoisePowerPolicy::EstimateFromFirstFrames;
  double known_noise_power = 0.0;   // sigma_n^2, used with Known
  std::size_t estimate_frames = 8;  // frames averaged for the estimate
};

// Frame-wise spectral power-subtraction gain
// G(f) = max(0, (P_xx(f) - sigma_n^2 * L) / P_xx(f)) on rectangular
// frames, overlap-added through a raised-cosine synthesis window with a
// constant overlapped sum (the accumulated window sum divides out, so a
// unit gain reproduces the input). Output length equals input length.
Signal wiener_denoise(const Signal& noisy, const WienerConfig& config = {});

struct DwtConfig {
  int levels = 0;  // 0 = auto: max(1, floor(log2 n) - 4)
};

// Orthonormal Haar analysis. details[0] is the finest band. The input is
// zero-padded to a multiple of 2^levels; original_length restores the
// exact length on inversion.
struct HaarPyramid {
  std::vector<double> approx;
  std::vector<std::vector<double>> details;  // finest first
  std::size_t original_length = 0;
};

HaarPyramid dwt_forward(std::span<const double> samples,
                        const DwtConfig& config = {});

// Exact inverse of dwt_forward, padding removed.
std::vector<double> dwt_inverse(const HaarPyramid& pyramid);

// Universal-threshold wavelet shrinkage: sigma is the MAD estimate of
// the finest detail band, T = universal_threshold(sigma, signal length),
// applied to every detail band; the approximation band is untouched.
Signal universal_dwt_denoise(const Signal& noisy, ShrinkFlavor flavor,
                             const DwtConfig& config = {});

}  // namespace emdnoise

#endif  // EMDNOISE_BASELINES_HPP_
