// src/emd.cpp

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

#include "emdnoise/emd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "emdnoise/errors.hpp"

namespace emdnoise {

namespace {

// Run of equal consecutive samples: [start, stop] inclusive.
struct Run {
  std::size_t start;
  std::size_t stop;
  double value;
};

std::vector<Run> compress_runs(std::span<const double> x) {
  std::vector<Run> runs;
  std::size_t i = 0;
  while (i < x.size()) {
    std::size_t j = i;
    while (j + 1 < x.size() && x[j + 1] == x[i]) ++j;
    runs.push_back({i, j, x[i]});
    i = j + 1;
  }
  return runs;
}

}  // namespace

ExtremaSet find_extrema(std::span<const double> samples) {
  ExtremaSet out;
  if (samples.size() < 3) return out;

  const std::vector<Run> runs = compress_runs(samples);
  // The first and last runs touch the signal ends and are never extrema.
  for (std::size_t r = 1; r + 1 < runs.size(); ++r) {
    const Run& run = runs[r];
    const double prev = runs[r - 1].value;
    const double next = runs[r + 1].value;
    const std::size_t mid = (run.start + run.stop) / 2;  // plateau midpoint
    if (run.value > prev && run.value > next)
      out.maxima.push_back({mid, run.value});
    else if (run.value < prev && run.value < next)
      out.minima.push_back({mid, run.value});
  }
  return out;
}

std::vector<Knot> extend_boundary(std::span<const Extremum> extrema,
                                  std::span<const double> samples,
                                  BoundaryPolicy policy) {
  std::vector<Knot> knots;
  const std::size_t n = samples.size();

  if (policy == BoundaryPolicy::ClampEndpoints) {
    if (n > 0) knots.push_back({0.0, samples.front()});
    for (const Extremum& e : extrema)
      knots.push_back({static_cast<double>(e.index), e.value});
    if (n > 1) knots.push_back({static_cast<double>(n - 1), samples.back()});
    return knots;
  }

  // MirrorExtrema: reflect the two extrema nearest each end across the
  // signal boundary. Extrema are interior so the mirrored positions fall
  // strictly outside [0, n-1] and ordering is preserved.
  if (extrema.empty()) return knots;
  const std::size_t k = extrema.size();
  const double right_edge = static_cast<double>(n - 1);

  const std::size_t n_mirror = std::min<std::size_t>(2, k);
  for (std::size_t j = n_mirror; j > 0; --j) {
    const Extremum& e = extrema[j - 1];
    knots.push_back({-static_cast<double>(e.index), e.value});
  }
  for (const Extremum& e : extrema)
    knots.push_back({static_cast<double>(e.index), e.value});
  for (std::size_t j = 0; j < n_mirror; ++j) {
    const Extremum& e = extrema[k - 1 - j];
    knots.push_back({2.0 * right_edge - static_cast<double>(e.index), e.value});
  }
  return knots;
}

std::vector<double> spline_envelope(std::span<const Knot> knots,
                                    std::size_t domain_length) {
  const std::size_t m = knots.size();
  if (m < 2)
    throw InsufficientExtremaError(
        "insufficient extrema: need at least 2 envelope knots");
  for (std::size_t i = 1; i < m; ++i) {
    if (!(knots[i].x > knots[i - 1].x))
      throw std::invalid_argument("knot positions must be strictly increasing");
  }

  // Natural spline: solve the tridiagonal system for the second
  // derivatives, with M[0] = M[m-1] = 0.
  std::vector<double> second(m, 0.0);
  if (m > 2) {
    const std::size_t rows = m - 2;
    std::vector<double> diag(rows), lower(rows), upper(rows), rhs(rows);
    for (std::size_t i = 1; i + 1 < m; ++i) {
      const double h_prev = knots[i].x - knots[i - 1].x;
      const double h_next = knots[i + 1].x - knots[i].x;
      lower[i - 1] = h_prev / 6.0;
      diag[i - 1] = (h_prev + h_next) / 3.0;
      upper[i - 1] = h_next / 6.0;
      rhs[i - 1] = (knots[i + 1].y - knots[i].y) / h_next -
                   (knots[i].y - knots[i - 1].y) / h_prev;
    }
    // Thomas sweep. The system is strictly diagonally dominant.
    for (std::size_t i = 1; i < rows; ++i) {
      const double w = lower[i] / diag[i - 1];
      diag[i] -= w * upper[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    second[m - 2] = rhs[rows - 1] / diag[rows - 1];
    for (std::size_t i = rows - 1; i > 0; --i)
      second[i] = (rhs[i - 1] - upper[i - 1] * second[i + 1]) / diag[i - 1];
  }

  std::vector<double> values(domain_length);
  const double slope_left =
      (knots[1].y - knots[0].y) / (knots[1].x - knots[0].x) -
      (knots[1].x - knots[0].x) * second[1] / 6.0;
  const double h_last = knots[m - 1].x - knots[m - 2].x;
  const double slope_right =
      (knots[m - 1].y - knots[m - 2].y) / h_last + h_last * second[m - 2] / 6.0;

  std::size_t seg = 0;
  for (std::size_t t = 0; t < domain_length; ++t) {
    const double x = static_cast<double>(t);
    if (x <= knots.front().x) {
      values[t] = knots.front().y + slope_left * (x - knots.front().x);
      continue;
    }
    if (x >= knots.back().x) {
      values[t] = knots.back().y + slope_right * (x - knots.back().x);
      continue;
    }
    while (knots[seg + 1].x < x) ++seg;
    const double h = knots[seg + 1].x - knots[seg].x;
    const double a = (knots[seg + 1].x - x) / h;
    const double b = (x - knots[seg].x) / h;
    values[t] = a * knots[seg].y + b * knots[seg + 1].y +
                ((a * a * a - a) * second[seg] +
                 (b * b * b - b) * second[seg + 1]) *
                    h * h / 6.0;
  }
  return values;
}

std::vector<double> mean_envelope(std::span<const double> samples,
                                  const SiftConfig& config) {
  const ExtremaSet extrema = find_extrema(samples);
  if (extrema.maxima.empty() || extrema.minima.empty())
    throw InsufficientExtremaError(
        "insufficient extrema: signal needs an interior maximum and minimum");

  const std::vector<double> upper = spline_envelope(
      extend_boundary(extrema.maxima, samples, config.boundary_policy),
      samples.size());
  const std::vector<double> lower = spline_envelope(
      extend_boundary(extrema.minima, samples, config.boundary_policy),
      samples.size());

  std::vector<double> mean(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i)
    mean[i] = 0.5 * (upper[i] + lower[i]);
  return mean;
}

namespace {

// SD stopping statistic between consecutive sift iterates. Samples where
// the previous iterate is (relatively) zero are excluded; the pointwise
// ratio is undefined there.
double sift_sd(std::span<const double> prev, std::span<const double> next) {
  double peak = 0.0;
  for (double x : prev) peak = std::max(peak, std::abs(x));
  if (peak == 0.0) return 0.0;
  const double floor = 1e-12 * peak;
  double sd = 0.0;
  for (std::size_t i = 0; i < prev.size(); ++i) {
    if (std::abs(prev[i]) < floor) continue;
    const double d = prev[i] - next[i];
    sd += (d * d) / (prev[i] * prev[i]);
  }
  return sd;
}

}  // namespace

SiftResult sift_one_imf(std::span<const double> input,
                        const SiftConfig& config) {
  if (config.sd_threshold <= 0.0)
    throw std::invalid_argument("sd_threshold must be positive");
  if (config.max_sift_iterations < 1)
    throw std::invalid_argument("max_sift_iterations must be at least 1");

  std::vector<double> current(input.begin(), input.end());
  int iterations = 0;
  double last_sd = 0.0;
  while (true) {
    std::vector<double> mean;
    try {
      mean = mean_envelope(current, config);
    } catch (const InsufficientExtremaError&) {
      if (iterations == 0) throw;
      // Extrema vanished mid-sift; the last valid iterate stands.
      break;
    }
    std::vector<double> next(current.size());
    for (std::size_t i = 0; i < current.size(); ++i)
      next[i] = current[i] - mean[i];
    ++iterations;
    last_sd = sift_sd(current, next);
    current = std::move(next);
    if (last_sd < config.sd_threshold ||
        iterations >= config.max_sift_iterations)
      break;
  }
  return {std::move(current), iterations, last_sd};
}

ImfDecomposition decompose(const Signal& signal, const SiftConfig& config) {
  validate(signal);
  if (signal.size() < 4)
    throw std::invalid_argument("decompose needs at least 4 samples");
  if (config.max_imfs < 1)
    throw std::invalid_argument("max_imfs must be at least 1");

  ImfDecomposition out;
  std::vector<double> residue = signal.samples;

  while (static_cast<int>(out.imfs.size()) < config.max_imfs) {
    if (find_extrema(residue).total() < 3) break;
    SiftResult sifted;
    try {
      sifted = sift_one_imf(residue, config);
    } catch (const InsufficientExtremaError&) {
      break;  // residue lacks a full envelope; treat it as final
    }
    for (std::size_t i = 0; i < residue.size(); ++i)
      residue[i] -= sifted.imf[i];
    out.imfs.push_back({std::move(sifted.imf), signal.sample_rate_hz});
    out.sift_counts.push_back(sifted.iterations);
    out.final_sds.push_back(sifted.final_sd);
  }

  out.residue = {std::move(residue), signal.sample_rate_hz};
  return out;
}

Signal reconstruct(const ImfDecomposition& decomp) {
  Signal out = decomp.residue;
  for (const Signal& imf : decomp.imfs) {
    if (imf.size() != out.size())
      throw LengthMismatchError("IMF length differs from residue length");
    for (std::size_t i = 0; i < out.size(); ++i)
      out.samples[i] += imf.samples[i];
  }
  return out;
}

}  // namespace emdnoise
