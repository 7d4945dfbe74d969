// tests/test_signal.cpp

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

// Signal container, framing, noise injection and SNR metrics.

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "emdnoise/errors.hpp"
#include "emdnoise/signal.hpp"
#include "test_util.hpp"

using namespace emdnoise;

TEST_CASE("validate rejects empty, bad-rate and non-finite signals") {
  CHECK_THROWS_AS(validate(Signal{}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Signal{{1.0, 2.0}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Signal{{1.0, 2.0}, -8000}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Signal{{1.0, std::nan("")}, 8000}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      validate(Signal{{std::numeric_limits<double>::infinity()}, 8000}),
      std::invalid_argument);
  CHECK_NOTHROW(validate(Signal{{0.0, -0.5, 0.5}, 8000}));
}

TEST_CASE("energy is the plain sum of squares") {
  const std::vector<double> values{3.0, -4.0};
  CHECK(energy(values) == doctest::Approx(25.0).epsilon(1e-15));
  CHECK(energy(std::vector<double>{}) == 0.0);
}

TEST_CASE("segment tiles the signal and concatenate restores it") {
  Signal s;
  s.sample_rate_hz = 8000;
  for (int i = 0; i < 300; ++i) s.samples.push_back(0.01 * i);

  const std::vector<Frame> frames = segment(s, 128);
  REQUIRE(frames.size() == 3);
  CHECK(frames[0].start_index == 0);
  CHECK(frames[1].start_index == 128);
  CHECK(frames[2].start_index == 256);
  CHECK(frames[0].values.size() == 128);
  CHECK(frames[1].values.size() == 128);
  CHECK(frames[2].values.size() == 44);  // only the final frame is short

  const std::vector<double> rebuilt = concatenate(frames);
  REQUIRE(rebuilt.size() == s.samples.size());
  CHECK(testutil::max_abs_diff(rebuilt, s.samples) == 0.0);
}

TEST_CASE("segment with frame_length beyond the signal yields one frame") {
  const Signal s{{1.0, 2.0, 3.0}, 8000};
  const std::vector<Frame> frames = segment(s, 128);
  REQUIRE(frames.size() == 1);
  CHECK(frames[0].values.size() == 3);
  CHECK_THROWS_AS(segment(s, 0), std::invalid_argument);
}

TEST_CASE("add_awgn hits the requested SNR exactly and is reproducible") {
  const Signal clean = testutil::two_tone(4096);

  for (double target : {-5.0, 0.0, 12.5, 40.0}) {
    const NoisyPair pair = add_awgn(clean, {target, 7});
    const double realized =
        10.0 * std::log10(energy(clean) / energy(pair.noise));
    CHECK(realized == doctest::Approx(target).epsilon(1e-12));
  }

  const NoisyPair a = add_awgn(clean, {5.0, 123});
  const NoisyPair b = add_awgn(clean, {5.0, 123});
  const NoisyPair c = add_awgn(clean, {5.0, 124});
  CHECK(testutil::max_abs_diff(a.noisy.samples, b.noisy.samples) == 0.0);
  CHECK(testutil::max_abs_diff(a.noisy.samples, c.noisy.samples) > 0.0);

  // noisy is exactly clean + noise, sample for sample
  for (std::size_t i = 0; i < clean.size(); ++i)
    CHECK(a.noisy.samples[i] == clean.samples[i] + a.noise.samples[i]);
}

TEST_CASE("add_awgn refuses a zero-energy reference") {
  const Signal silent{std::vector<double>(64, 0.0), 8000};
  CHECK_THROWS_AS(add_awgn(silent, {0.0, 1}), ZeroEnergyError);
}

TEST_CASE("snr_db matches a hand computation") {
  const Signal ref{{3.0, 4.0}, 8000};
  const Signal est{{3.0, 0.0}, 8000};
  // error energy 16, reference energy 25
  CHECK(snr_db(ref, est) ==
        doctest::Approx(10.0 * std::log10(25.0 / 16.0)).epsilon(1e-12));
  CHECK(snr_db(ref, ref) == std::numeric_limits<double>::infinity());

  const Signal silent{{0.0, 0.0}, 8000};
  CHECK_THROWS_AS(snr_db(silent, est), ZeroEnergyError);
  const Signal shorter{{1.0}, 8000};
  CHECK_THROWS_AS(snr_db(ref, shorter), LengthMismatchError);
}

TEST_CASE("snr_out_paper puts the denoised energy in the numerator") {
  const Signal clean{{3.0, 4.0}, 8000};
  const Signal den{{3.0, 0.0}, 8000};
  // denoised energy 9, error energy 16
  CHECK(snr_out_paper(clean, den) ==
        doctest::Approx(10.0 * std::log10(9.0 / 16.0)).epsilon(1e-12));
  CHECK(snr_out_paper(clean, clean) ==
        std::numeric_limits<double>::infinity());

  const Signal zero{{0.0, 0.0}, 8000};
  CHECK(snr_out_paper(clean, zero) ==
        -std::numeric_limits<double>::infinity());
}
