// tests/test_shrinkage.cpp

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

// Threshold calculators and shrinkage rules.

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "emdnoise/rng.hpp"
#include "emdnoise/shrinkage.hpp"
#include "test_util.hpp"

using namespace emdnoise;

TEST_CASE("mad_sigma hand-computed values") {
  CHECK(mad_sigma(std::vector<double>{0.0, 0.0, 0.0}) == 0.0);
  // median of magnitudes is exactly 0.6745, so the estimate is 1
  CHECK(mad_sigma(std::vector<double>{-0.6745, 0.6745, 0.6745}) ==
        doctest::Approx(1.0).epsilon(1e-15));
  // even length: median is the mean of the two middle order statistics
  CHECK(mad_sigma(std::vector<double>{1.0, 2.0, 3.0, 4.0}) ==
        doctest::Approx(2.5 / 0.6745).epsilon(1e-15));
  CHECK_THROWS_AS(mad_sigma(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("mad_sigma is sign-invariant and scales linearly") {
  GaussianRng rng(31);
  std::vector<double> x(501);
  for (double& v : x) v = rng.next();

  std::vector<double> flipped = x;
  for (double& v : flipped) v = -v;
  CHECK(mad_sigma(flipped) == doctest::Approx(mad_sigma(x)).epsilon(1e-15));

  std::vector<double> scaled = x;
  for (double& v : scaled) v *= -3.7;
  CHECK(mad_sigma(scaled) ==
        doctest::Approx(3.7 * mad_sigma(x)).epsilon(1e-12));
}

TEST_CASE("mad_sigma is consistent for Gaussian data") {
  GaussianRng rng(4242);
  std::vector<double> x(100000);
  for (double& v : x) v = 2.0 * rng.next();
  const double estimate = mad_sigma(x);
  CHECK(estimate > 1.9);
  CHECK(estimate < 2.1);
}

TEST_CASE("normal_shrink_beta equals sqrt(ln(L/J))") {
  CHECK(std::abs(normal_shrink_beta(128, 8) - std::sqrt(std::log(16.0))) <=
        1e-12);
  CHECK(std::abs(normal_shrink_beta(256, 8) - std::sqrt(std::log(32.0))) <=
        1e-12);
  // larger frames shrink harder
  CHECK(normal_shrink_beta(256, 8) > normal_shrink_beta(128, 8));
  CHECK_THROWS_AS(normal_shrink_beta(8, 8), std::domain_error);
  CHECK_THROWS_AS(normal_shrink_beta(4, 8), std::domain_error);
  CHECK_THROWS_AS(normal_shrink_beta(8, 0), std::invalid_argument);
}

TEST_CASE("normal_shrink_threshold on a constant frame is zero") {
  const std::vector<double> zeros(128, 0.0);
  CHECK(normal_shrink_threshold(zeros, 128, 8) == 0.0);
  const std::vector<double> flat(128, 0.4);
  CHECK(normal_shrink_threshold(flat, 128, 8) == 0.0);
}

TEST_CASE("normal_shrink_threshold near beta for unit Gaussian frames") {
  // With sigma_hat and sigma_y both near 1, T is near beta(128, 8),
  // about 1.67, with frame-to-frame scatter from the two estimates; the
  // mean over many frames lands much closer.
  const double beta = normal_shrink_beta(128, 8);
  GaussianRng rng(7);
  double sum = 0.0;
  const int trials = 50;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> frame(128);
    for (double& v : frame) v = rng.next();
    const double threshold = normal_shrink_threshold(frame, 128, 8);
    CHECK(threshold > beta - 1.0);
    CHECK(threshold < beta + 1.0);
    sum += threshold;
  }
  CHECK(sum / trials == doctest::Approx(beta).epsilon(0.08));
}

TEST_CASE("normal_shrink_threshold scales linearly with amplitude") {
  GaussianRng rng(13);
  std::vector<double> frame(128);
  for (double& v : frame) v = rng.next();
  std::vector<double> scaled = frame;
  for (double& v : scaled) v *= 2.5;

  const double t1 = normal_shrink_threshold(frame, 128, 8);
  const double t2 = normal_shrink_threshold(scaled, 128, 8);
  CHECK(t2 == doctest::Approx(2.5 * t1).epsilon(1e-12));
}

TEST_CASE("normal_shrink_threshold unsquared variant divides out sigma_hat") {
  GaussianRng rng(17);
  std::vector<double> frame(128);
  for (double& v : frame) v = rng.next();

  const double squared = normal_shrink_threshold(frame, 128, 8, false);
  const double unsquared = normal_shrink_threshold(frame, 128, 8, true);
  const double sigma_hat = mad_sigma(frame);
  CHECK(squared == doctest::Approx(unsquared * sigma_hat).epsilon(1e-12));
}

TEST_CASE("normal_shrink_threshold input validation") {
  const std::vector<double> frame(16, 1.0);
  CHECK_THROWS_AS(normal_shrink_threshold(std::vector<double>{}, 128, 8),
                  std::invalid_argument);
  CHECK_THROWS_AS(normal_shrink_threshold(frame, 8, 8), std::domain_error);
  CHECK_THROWS_AS(normal_shrink_threshold(frame, 6, 8), std::domain_error);
}

TEST_CASE("universal_threshold hand-computed values") {
  CHECK(universal_threshold(0.0, 100) == 0.0);
  CHECK(universal_threshold(1.0, 1) == 0.0);
  CHECK(std::abs(universal_threshold(1.0, 8192) -
                 std::sqrt(2.0 * std::log(8192.0))) <= 1e-12);
  CHECK(universal_threshold(1.0, 7) == doctest::Approx(1.9726).epsilon(1e-4));
  // monotone in both arguments
  CHECK(universal_threshold(2.0, 100) > universal_threshold(1.0, 100));
  CHECK(universal_threshold(1.0, 200) > universal_threshold(1.0, 100));
}

TEST_CASE("soft_threshold hand-computed values") {
  const std::vector<double> x{2.0, -2.0, 0.5};
  const std::vector<double> out = soft_threshold(x, 1.0);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == 1.0);
  CHECK(out[1] == -1.0);
  CHECK(out[2] == 0.0);

  const std::vector<double> same = soft_threshold(x, 0.0);
  CHECK(testutil::max_abs_diff(same, x) == 0.0);

  const std::vector<double> wiped = soft_threshold(x, 5.0);
  CHECK(testutil::max_abs(wiped) == 0.0);

  CHECK_THROWS_AS(soft_threshold(x, -0.1), std::invalid_argument);
}

TEST_CASE("hard_threshold hand-computed values") {
  const std::vector<double> x{2.0, -2.0, 0.5};
  const std::vector<double> out = hard_threshold(x, 1.0);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == 2.0);
  CHECK(out[1] == -2.0);
  CHECK(out[2] == 0.0);

  const std::vector<double> same = hard_threshold(x, 0.0);
  CHECK(testutil::max_abs_diff(same, x) == 0.0);

  const std::vector<double> wiped = hard_threshold(x, 5.0);
  CHECK(testutil::max_abs(wiped) == 0.0);

  CHECK_THROWS_AS(hard_threshold(x, -0.1), std::invalid_argument);
}

TEST_CASE("shrinkage rules hold elementwise over random data") {
  GaussianRng rng(23);
  std::vector<double> x(400);
  for (double& v : x) v = 2.0 * rng.next();
  const double t = 0.8;

  const std::vector<double> soft = soft_threshold(x, t);
  const std::vector<double> hard = hard_threshold(x, t);
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(std::abs(soft[i]) <= std::abs(x[i]));   // non-expansive
    CHECK((hard[i] == 0.0 || hard[i] == x[i]));   // keep-or-kill
    CHECK(std::abs(hard[i]) >= std::abs(soft[i]));
  }
}

TEST_CASE("soft_threshold is a contraction in its input") {
  GaussianRng rng(29);
  std::vector<double> x(200), y(200);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = rng.next();
    y[i] = x[i] + 0.3 * rng.next();
  }
  const double t = 0.5;
  const std::vector<double> fx = soft_threshold(x, t);
  const std::vector<double> fy = soft_threshold(y, t);
  for (std::size_t i = 0; i < x.size(); ++i)
    CHECK(std::abs(fx[i] - fy[i]) <= std::abs(x[i] - y[i]) + 1e-15);
}

TEST_CASE("apply_threshold dispatches on the flavor") {
  const std::vector<double> x{2.0, -2.0, 0.5};
  ThresholdSpec spec;
  spec.value = 1.0;
  spec.flavor = ShrinkFlavor::Soft;
  CHECK(apply_threshold(x, spec)[0] == 1.0);
  spec.flavor = ShrinkFlavor::Hard;
  CHECK(apply_threshold(x, spec)[0] == 2.0);
}
