// tests/test_pipeline.cpp

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

// The framed EMD denoiser: classification, noise estimation, shrinkage
// bookkeeping and the end-to-end behavior.

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "emdnoise/pipeline.hpp"
#include "emdnoise/signal.hpp"
#include "test_util.hpp"

using namespace emdnoise;

TEST_CASE("classify_frame compares mean power against noise power") {
  Frame frame;
  frame.values = {1.0, 1.0, 1.0, 1.0};

  // mean power 1 vs noise power 1: inclusive, signal wins
  const FrameClassification equal = classify_frame(frame, 1.0);
  CHECK(equal.mean_power == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(equal.dominant == FrameDominance::SignalDominant);

  const FrameClassification below = classify_frame(frame, 1.1);
  CHECK(below.dominant == FrameDominance::NoiseDominant);

  const FrameClassification above = classify_frame(frame, 0.9);
  CHECK(above.dominant == FrameDominance::SignalDominant);

  CHECK_THROWS_AS(classify_frame(Frame{}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(classify_frame(frame, -0.5), std::invalid_argument);
}

TEST_CASE("estimate_noise_sigma under the three policies") {
  ImfDecomposition decomp;
  decomp.imfs.push_back({{-0.6745, 0.6745, 0.6745}, 8000});   // MAD sigma 1
  decomp.imfs.push_back({{-1.349, 1.349, 1.349}, 8000});      // MAD sigma 2
  decomp.residue = {{0.0, 0.0, 0.0}, 8000};

  const std::vector<double> per =
      estimate_noise_sigma(decomp, NoiseSigmaPolicy::PerImfMad);
  REQUIRE(per.size() == 2);
  CHECK(per[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(per[1] == doctest::Approx(2.0).epsilon(1e-12));

  const std::vector<double> global =
      estimate_noise_sigma(decomp, NoiseSigmaPolicy::GlobalFirstImfMad);
  CHECK(global[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(global[1] == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<double> known =
      estimate_noise_sigma(decomp, NoiseSigmaPolicy::Known, 0.25);
  CHECK(known[0] == 0.25);
  CHECK(known[1] == 0.25);

  CHECK_THROWS_AS(
      estimate_noise_sigma(decomp, NoiseSigmaPolicy::Known, -1.0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      estimate_noise_sigma(ImfDecomposition{}, NoiseSigmaPolicy::PerImfMad),
      std::invalid_argument);
}

TEST_CASE("denoise passes a clean signal through with sigma zero") {
  const Signal clean = testutil::two_tone(2048);
  DenoiseConfig config;
  config.noise_sigma_policy = NoiseSigmaPolicy::Known;
  config.known_sigma = 0.0;

  const DenoiseTrace trace = denoise_emd_normalshrink(clean, config);
  // every frame's mean power meets the zero noise floor, so nothing is
  // shrunk and the output is the reconstruction itself
  for (const FrameDecision& d : trace.decisions) {
    CHECK(d.dominant == FrameDominance::SignalDominant);
    CHECK(d.applied_threshold == 0.0);
  }
  CHECK(testutil::relative_l2(clean.samples, trace.denoised.samples) <=
        1e-10);
}

TEST_CASE("denoise of a constant input returns it unchanged") {
  const Signal flat{std::vector<double>(256, 0.5), 8000};
  const DenoiseTrace trace = denoise_emd_normalshrink(flat);
  CHECK(trace.decomposition.imfs.empty());
  CHECK(trace.decisions.empty());
  CHECK(testutil::max_abs_diff(flat.samples, trace.denoised.samples) == 0.0);
}

TEST_CASE("denoise audit trail covers every (IMF, frame) pair") {
  const Signal clean = testutil::two_tone(2000);
  const NoisyPair pair = add_awgn(clean, {5.0, 3});
  const DenoiseTrace trace = denoise_emd_normalshrink(pair.noisy);

  const std::size_t num_imfs = trace.decomposition.imfs.size();
  REQUIRE(num_imfs >= 1);
  const std::size_t frames_per_imf = (2000 + 127) / 128;
  CHECK(trace.decisions.size() == num_imfs * frames_per_imf);
  CHECK(trace.processed_imfs.size() == num_imfs);

  for (const FrameDecision& d : trace.decisions) {
    CHECK(d.imf_index < num_imfs);
    if (d.dominant == FrameDominance::SignalDominant) {
      CHECK(d.applied_threshold == 0.0);
      CHECK_FALSE(d.used_universal_fallback);
    } else {
      CHECK(d.applied_threshold >= 0.0);
    }
    // fallback only ever fires on frames too short for beta
    if (d.used_universal_fallback)
      CHECK(d.frame.values.size() <= num_imfs);
  }

  // the denoised output is the processed IMFs plus the residue; allow a
  // few ulps for the summation order
  std::vector<double> expected = trace.decomposition.residue.samples;
  for (const Signal& imf : trace.processed_imfs)
    for (std::size_t i = 0; i < expected.size(); ++i)
      expected[i] += imf.samples[i];
  CHECK(testutil::max_abs_diff(expected, trace.denoised.samples) <= 1e-12);
}

TEST_CASE("signal-dominant frames pass through bit-identically") {
  const Signal clean = testutil::two_tone(2048);
  const NoisyPair pair = add_awgn(clean, {0.0, 9});
  const DenoiseTrace trace = denoise_emd_normalshrink(pair.noisy);

  bool saw_signal_dominant = false;
  for (const FrameDecision& d : trace.decisions) {
    if (d.dominant != FrameDominance::SignalDominant) continue;
    saw_signal_dominant = true;
    const Signal& processed = trace.processed_imfs[d.imf_index];
    for (std::size_t i = 0; i < d.frame.values.size(); ++i)
      CHECK(processed.samples[d.frame.start_index + i] == d.frame.values[i]);
  }
  CHECK(saw_signal_dominant);
}

TEST_CASE("denoising pure noise strictly reduces energy") {
  const Signal noise = testutil::white_noise(4096, 21, 0.5);
  const DenoiseTrace trace = denoise_emd_normalshrink(noise);
  CHECK(energy(trace.denoised) < energy(noise));
}

TEST_CASE("denoise improves the SNR of a noisy gated two-tone signal") {
  const Signal clean = testutil::gated_two_tone(4096);
  int improved = 0;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const NoisyPair pair = add_awgn(clean, {0.0, seed});
    const DenoiseTrace trace = denoise_emd_normalshrink(pair.noisy);
    const double before = snr_db(clean, pair.noisy);
    const double after = snr_db(clean, trace.denoised);
    if (after > before) ++improved;
  }
  CHECK(improved >= 2);
}

TEST_CASE("universal-threshold variant shares the frame pipeline") {
  const Signal clean = testutil::two_tone(2048);
  const NoisyPair pair = add_awgn(clean, {5.0, 4});

  const DenoiseTrace proposed = denoise_emd_normalshrink(pair.noisy);
  const DenoiseTrace uni_soft =
      denoise_emd_universal(pair.noisy, ShrinkFlavor::Soft);
  const DenoiseTrace uni_hard =
      denoise_emd_universal(pair.noisy, ShrinkFlavor::Hard);

  // identical decomposition and classification decisions
  REQUIRE(uni_soft.decisions.size() == proposed.decisions.size());
  for (std::size_t i = 0; i < proposed.decisions.size(); ++i)
    CHECK(uni_soft.decisions[i].dominant == proposed.decisions[i].dominant);

  // hard keeps at least as much energy as soft
  CHECK(energy(uni_hard.denoised) >= energy(uni_soft.denoised));
}

TEST_CASE("denoise validates its configuration") {
  const Signal clean = testutil::two_tone(512);
  DenoiseConfig config;
  config.frame_length = 1;
  CHECK_THROWS_AS(denoise_emd_normalshrink(clean, config),
                  std::invalid_argument);
  config = DenoiseConfig{};
  config.noise_sigma_policy = NoiseSigmaPolicy::Known;
  config.known_sigma = -2.0;
  const Signal noisy = add_awgn(clean, {0.0, 1}).noisy;
  CHECK_THROWS_AS(denoise_emd_normalshrink(noisy, config),
                  std::invalid_argument);
}
