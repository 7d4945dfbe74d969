// src/pipeline.cpp

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

#include "emdnoise/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace emdnoise {

FrameClassification classify_frame(const Frame& frame, double noise_sigma) {
  if (frame.values.empty())
    throw std::invalid_argument("classify_frame: empty frame");
  if (noise_sigma < 0.0)
    throw std::invalid_argument("classify_frame: negative noise sigma");

  double power = 0.0;
  for (double x : frame.values) power += x * x;
  power /= static_cast<double>(frame.values.size());

  const FrameDominance dominant = power >= noise_sigma * noise_sigma
                                      ? FrameDominance::SignalDominant
                                      : FrameDominance::NoiseDominant;
  return {power, dominant};
}

std::vector<double> estimate_noise_sigma(const ImfDecomposition& decomp,
                                         NoiseSigmaPolicy policy,
                                         double known_sigma) {
  if (decomp.imfs.empty())
    throw std::invalid_argument("estimate_noise_sigma: empty decomposition");

  std::vector<double> sigmas(decomp.imfs.size());
  switch (policy) {
    case NoiseSigmaPolicy::PerImfMad:
      for (std::size_t j = 0; j < decomp.imfs.size(); ++j)
        sigmas[j] = mad_sigma(decomp.imfs[j].samples);
      break;
    case NoiseSigmaPolicy::GlobalFirstImfMad: {
      const double sigma = mad_sigma(decomp.imfs.front().samples);
      sigmas.assign(decomp.imfs.size(), sigma);
      break;
    }
    case NoiseSigmaPolicy::Known:
      if (known_sigma < 0.0)
        throw std::invalid_argument("known noise sigma must be non-negative");
      sigmas.assign(decomp.imfs.size(), known_sigma);
      break;
  }
  return sigmas;
}

namespace {

// The two EMD-framed denoisers differ only in the threshold rule applied
// to a noise-dominant frame.
DenoiseTrace run_framed_denoise(const Signal& noisy,
                                const DenoiseConfig& config,
                                ThresholdMethod method, ShrinkFlavor flavor) {
  if (config.frame_length < 2)
    throw std::invalid_argument("frame_length must be at least 2");

  DenoiseTrace trace;
  trace.decomposition = decompose(noisy, config.sift);
  const ImfDecomposition& decomp = trace.decomposition;

  // Degenerate input (no oscillatory content): nothing to shrink.
  if (decomp.imfs.empty()) {
    trace.denoised = decomp.residue;
    return trace;
  }

  const std::size_t num_imfs = decomp.imfs.size();
  const std::vector<double> sigmas = estimate_noise_sigma(
      decomp, config.noise_sigma_policy, config.known_sigma);

  for (std::size_t j = 0; j < num_imfs; ++j) {
    const double sigma_n = sigmas[j];
    Signal processed_imf;
    processed_imf.samples.resize(noisy.size());
    processed_imf.sample_rate_hz = noisy.sample_rate_hz;

    std::vector<Frame> frames = segment(decomp.imfs[j], config.frame_length);
    for (Frame& frame : frames) {
      const FrameClassification cls = classify_frame(frame, sigma_n);

      FrameDecision decision;
      decision.imf_index = j;
      decision.mean_power = cls.mean_power;
      decision.noise_power_ref = sigma_n * sigma_n;
      decision.dominant = cls.dominant;
      decision.applied_threshold = 0.0;
      decision.used_universal_fallback = false;

      std::vector<double> processed;
      if (cls.dominant == FrameDominance::SignalDominant) {
        // Kept bit-identical; shrinking here risks degrading the signal.
        processed = frame.values;
      } else {
        double threshold = 0.0;
        if (method == ThresholdMethod::NormalShrink &&
            frame.values.size() > num_imfs) {
          threshold = normal_shrink_threshold(frame.values,
                                              frame.values.size(), num_imfs,
                                              config.unsquared_variance);
        } else {
          // Universal rule, or a final frame too short for beta.
          threshold = universal_threshold(sigma_n, frame.values.size());
          decision.used_universal_fallback =
              method == ThresholdMethod::NormalShrink;
        }
        decision.applied_threshold = threshold;
        processed = flavor == ShrinkFlavor::Soft
                        ? soft_threshold(frame.values, threshold)
                        : hard_threshold(frame.values, threshold);
      }

      std::copy(processed.begin(), processed.end(),
                processed_imf.samples.begin() + frame.start_index);

      decision.frame = std::move(frame);
      trace.decisions.push_back(std::move(decision));
    }
    trace.processed_imfs.push_back(std::move(processed_imf));
  }

  // Reassembly is bookkeeping: sum of processed IMFs plus the residue,
  // which is never thresholded.
  trace.denoised.samples.assign(noisy.size(), 0.0);
  trace.denoised.sample_rate_hz = noisy.sample_rate_hz;
  for (const Signal& imf : trace.processed_imfs)
    for (std::size_t i = 0; i < noisy.size(); ++i)
      trace.denoised.samples[i] += imf.samples[i];
  for (std::size_t i = 0; i < noisy.size(); ++i)
    trace.denoised.samples[i] += decomp.residue.samples[i];
  return trace;
}

}  // namespace

DenoiseTrace denoise_emd_normalshrink(const Signal& noisy,
                                      const DenoiseConfig& config) {
  return run_framed_denoise(noisy, config, ThresholdMethod::NormalShrink,
                            config.shrink_flavor);
}

DenoiseTrace denoise_emd_universal(const Signal& noisy, ShrinkFlavor flavor,
                                   const DenoiseConfig& config) {
  return run_framed_denoise(noisy, config, ThresholdMethod::Universal, flavor);
}

}  // namespace emdnoise
