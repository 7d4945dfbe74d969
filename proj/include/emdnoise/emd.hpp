// include/emdnoise/emd.hpp

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

// Empirical mode decomposition: extrema detection, natural cubic-spline
// envelopes, sifting with the classic SD stopping rule, and residue
// termination. The decomposition is exact: the IMFs plus the residue sum
// back to the input up to floating-point summation order.

#ifndef EMDNOISE_EMD_HPP_
#define EMDNOISE_EMD_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "emdnoise/signal.hpp"

namespace emdnoise {

// How envelope knots are extended past the signal ends before splining.
// MirrorExtrema reflects the two extrema nearest each end across the
// boundary (the standard mitigation for envelope end swing);
// ClampEndpoints adds each endpoint sample as both a max and a min knot.
enum class BoundaryPolicy { MirrorExtrema, ClampEndpoints };

struct SiftConfig {
  double sd_threshold = 0.3;      // stop sifting once SD drops below this
  int max_sift_iterations = 100;  // hard cap per IMF
  int max_imfs = 20;
  BoundaryPolicy boundary_policy = BoundaryPolicy::MirrorExtrema;
};

struct Extremum {
  std::size_t index;
  double value;
};

// Interior strict local maxima and minima, indices strictly increasing.
// Plateaus are represented by their midpoint index (ties round down).
struct ExtremaSet {
  std::vector<Extremum> maxima;
  std::vector<Extremum> minima;

  std::size_t total() const { return maxima.size() + minima.size(); }
};

// Spline knot. x is a sample position but may lie outside [0, n-1] after
// boundary extension, hence double.
struct Knot {
  double x;
  double y;
};

struct ImfDecomposition {
  std::vector<Signal> imfs;  // fast to slow oscillations
  Signal residue;
  std::vector<int> sift_counts;  // sifting iterations used per IMF
  std::vector<double> final_sds;  // SD at which each sift stopped
};

struct SiftResult {
  std::vector<double> imf;
  int iterations = 0;
  // SD of the last completed sift step. Below the threshold when the
  // sift stopped normally; at or above it when the iteration cap fired
  // or extrema vanished mid-sift (the returned iterate then lacks an
  // interior maximum or minimum).
  double final_sd = 0.0;
};

ExtremaSet find_extrema(std::span<const double> samples);

// Builds the knot set for one envelope (either the maxima or the minima)
// extended per the boundary policy. ClampEndpoints needs the signal's
// endpoint samples, hence the samples argument.
std::vector<Knot> extend_boundary(std::span<const Extremum> extrema,
                                  std::span<const double> samples,
                                  BoundaryPolicy policy);

// Natural cubic spline (zero second derivative at the outermost knots)
// through strictly increasing knots, sampled at every integer position in
// [0, domain_length). Positions outside the knot range continue linearly
// with the end slope, which keeps C2 continuity with the natural
// boundary. Throws InsufficientExtremaError for fewer than 2 knots.
std::vector<double> spline_envelope(std::span<const Knot> knots,
                                    std::size_t domain_length);

// (upper envelope + lower envelope) / 2. Throws InsufficientExtremaError
// when the input lacks an interior maximum or minimum.
std::vector<double> mean_envelope(std::span<const double> samples,
                                  const SiftConfig& config);

// Iterates h <- h - mean_envelope(h) until the SD between consecutive
// iterates falls below config.sd_threshold or the iteration cap fires.
// SD is the pointwise sum of |h_prev - h|^2 / h_prev^2 over samples where
// |h_prev| >= 1e-12 * max|h_prev| (the ratio is undefined at zeros of
// h_prev). If extrema vanish mid-sift the last valid iterate is returned.
SiftResult sift_one_imf(std::span<const double> input,
                        const SiftConfig& config);

// Extracts IMFs in order, updating residue <- residue - IMF, until the
// residue has fewer than 3 local extrema (maxima + minima combined) or
// max_imfs is reached. A constant input yields zero IMFs.
ImfDecomposition decompose(const Signal& signal, const SiftConfig& config = {});

// Elementwise sum of all IMFs plus the residue.
Signal reconstruct(const ImfDecomposition& decomp);

}  // namespace emdnoise

#endif  // EMDNOISE_EMD_HPP_
