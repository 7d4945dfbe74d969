// include/emdnoise/signal.hpp

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

#ifndef EMDNOISE_SIGNAL_HPP_
#define EMDNOISE_SIGNAL_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace emdnoise {

// A finite, uniformly sampled real-valued sequence. All internal
// arithmetic is double regardless of the source bit depth.
struct Signal {
  std::vector<double> samples;
  int sample_rate_hz = 8000;

  std::size_t size() const { return samples.size(); }
};

// Throws std::invalid_argument if the signal is empty, has a
// non-positive sample rate, or contains NaN/Inf samples.
void validate(const Signal& signal);

double energy(std::span<const double> samples);
inline double energy(const Signal& signal) { return energy(signal.samples); }

// One tile of a disjoint segmentation.
struct Frame {
  std::size_t start_index = 0;
  std::vector<double> values;
};

// Deterministic white-Gaussian-noise injection at an exact input SNR.
struct NoiseSpec {
  double target_input_snr_db = 0.0;
  std::uint64_t seed = 0;
};

struct NoisyPair {
  Signal noisy;
  Signal noise;
};

// Adds seeded Gaussian noise scaled against its own realized energy so
// that 10*log10(E_clean / E_noise) hits the target exactly (well below
// 1e-9 dB). Throws ZeroEnergyError if the clean signal has no energy.
NoisyPair add_awgn(const Signal& clean, const NoiseSpec& spec);

// Conventional SNR: 10*log10(E_reference / E_error). Returns +inf when
// the error is exactly zero. Throws LengthMismatchError /
// ZeroEnergyError on bad inputs.
double snr_db(const Signal& reference, const Signal& estimate);

// Output-SNR variant with the *denoised* energy in the numerator:
// 10*log10(E_denoised / E_error). Used for all table-style reports;
// snr_db above is the conventional metric. Returns +inf on zero error,
// -inf on a zero denoised signal.
double snr_out_paper(const Signal& clean, const Signal& denoised);

// Splits the signal into non-overlapping frames of frame_length samples;
// only the final frame may be shorter. Concatenating the frames
// reproduces the signal exactly.
std::vector<Frame> segment(const Signal& signal, std::size_t frame_length);

std::vector<double> concatenate(std::span<const Frame> frames);

}  // namespace emdnoise

#endif  // EMDNOISE_SIGNAL_HPP_
