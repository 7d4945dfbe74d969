// src/signal.cpp

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

#include "emdnoise/signal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "emdnoise/errors.hpp"
#include "emdnoise/rng.hpp"

namespace emdnoise {

void validate(const Signal& signal) {
  if (signal.samples.empty())
    throw std::invalid_argument("signal must have at least one sample");
  if (signal.sample_rate_hz <= 0)
    throw std::invalid_argument("sample rate must be positive");
  for (double x : signal.samples) {
    if (!std::isfinite(x))
      throw std::invalid_argument("signal contains a non-finite sample");
  }
}

double energy(std::span<const double> samples) {
  double sum = 0.0;
  for (double x : samples) sum += x * x;
  return sum;
}

NoisyPair add_awgn(const Signal& clean, const NoiseSpec& spec) {
  validate(clean);
  const double clean_energy = energy(clean);
  if (clean_energy <= 0.0)
    throw ZeroEnergyError("cannot define SNR: clean signal has zero energy");

  GaussianRng rng(spec.seed);
  std::vector<double> noise(clean.size());
  rng.fill(noise);

  // Scale against the realized noise energy, not the nominal unit
  // variance, so each trial hits the target SNR exactly.
  const double raw_energy = energy(noise);
  double scale = 0.0;
  if (raw_energy > 0.0) {
    scale = std::sqrt(clean_energy /
                      (raw_energy *
                       std::pow(10.0, spec.target_input_snr_db / 10.0)));
  }
  for (double& x : noise) x *= scale;

  NoisyPair out;
  out.noise.samples = std::move(noise);
  out.noise.sample_rate_hz = clean.sample_rate_hz;
  out.noisy.samples.resize(clean.size());
  out.noisy.sample_rate_hz = clean.sample_rate_hz;
  for (std::size_t i = 0; i < clean.size(); ++i)
    out.noisy.samples[i] = clean.samples[i] + out.noise.samples[i];
  return out;
}

namespace {

double error_energy(const Signal& a, const Signal& b) {
  if (a.size() != b.size())
    throw LengthMismatchError("signals differ in length");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a.samples[i] - b.samples[i];
    sum += d * d;
  }
  return sum;
}

}  // namespace

double snr_db(const Signal& reference, const Signal& estimate) {
  const double err = error_energy(reference, estimate);
  const double ref = energy(reference);
  if (ref <= 0.0)
    throw ZeroEnergyError("cannot define SNR: reference has zero energy");
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(ref / err);
}

double snr_out_paper(const Signal& clean, const Signal& denoised) {
  const double err = error_energy(clean, denoised);
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  const double den = energy(denoised);
  if (den == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(den / err);
}

std::vector<Frame> segment(const Signal& signal, std::size_t frame_length) {
  if (frame_length < 1)
    throw std::invalid_argument("frame_length must be at least 1");
  std::vector<Frame> frames;
  frames.reserve((signal.size() + frame_length - 1) / frame_length);
  for (std::size_t start = 0; start < signal.size(); start += frame_length) {
    const std::size_t stop = std::min(start + frame_length, signal.size());
    Frame f;
    f.start_index = start;
    f.values.assign(signal.samples.begin() + start,
                    signal.samples.begin() + stop);
    frames.push_back(std::move(f));
  }
  return frames;
}

std::vector<double> concatenate(std::span<const Frame> frames) {
  std::vector<double> out;
  for (const Frame& f : frames)
    out.insert(out.end(), f.values.begin(), f.values.end());
  return out;
}

}  // namespace emdnoise
