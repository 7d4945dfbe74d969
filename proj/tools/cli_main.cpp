// tools/cli_main.cpp

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

// Command-line front end over the emdnoise C API.
//
// Subcommands:
//   decompose      dump IMFs + residue of a WAV file
//   add-noise      inject seeded white Gaussian noise at an exact SNR
//   denoise        run any of the six denoising methods
//   bench          SNR sweep over a corpus, emitting report.csv/report.json
//   make-fixtures  synthesize the benchmark corpus (no external data needed)
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include "emdnoise.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "emdnoise/rng.hpp"  // header-only; fixture synthesis

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kFixtureRate = 8000;
constexpr std::size_t kFixtureLength = 8192;

const std::vector<std::string> kMethodNames = {
    "proposed",  "emd-universal-soft", "emd-universal-hard",
    "dwt-soft", "dwt-hard",           "wiener"};

// Problems with the data, not the flags. Exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(emdn_status status, const std::string& context) {
  if (status != EMDN_OK) throw DataError(context + ": " + emdn_last_error());
}

struct SignalDeleter {
  void operator()(emdn_signal* s) const { emdn_signal_free(s); }
};
using SignalPtr = std::unique_ptr<emdn_signal, SignalDeleter>;

struct DecompDeleter {
  void operator()(emdn_decomposition* d) const { emdn_decomposition_free(d); }
};
using DecompPtr = std::unique_ptr<emdn_decomposition, DecompDeleter>;

struct ResultDeleter {
  void operator()(emdn_denoise_result* r) const { emdn_denoise_result_free(r); }
};
using ResultPtr = std::unique_ptr<emdn_denoise_result, ResultDeleter>;

SignalPtr load_signal(const std::string& path) {
  emdn_signal* raw = nullptr;
  check(emdn_wav_load(path.c_str(), &raw), "loading " + path);
  return SignalPtr(raw);
}

void save_signal(const emdn_signal* signal, const fs::path& path) {
  check(emdn_wav_save(signal, path.string().c_str()),
        "writing " + path.string());
}

SignalPtr make_signal(const std::vector<double>& samples, int rate) {
  emdn_signal* raw = nullptr;
  check(emdn_signal_create(samples.data(), samples.size(), rate, &raw),
        "building signal");
  return SignalPtr(raw);
}

// FNV-1a, used to derive one independent noise seed per benchmark trial
// from (file name, SNR, seed index). Stable across platforms.
std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string format_fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string format_compact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw DataError("write failed: " + path.string());
}

void write_json_file(const fs::path& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

void ensure_parent_dir(const fs::path& path) {
  const fs::path parent = path.parent_path();
  if (!parent.empty()) fs::create_directories(parent);
}

fs::path sidecar_path(const std::string& flag_value,
                      const std::string& out_file, const char* default_name) {
  if (!flag_value.empty()) return flag_value;
  return fs::path(out_file).parent_path() / default_name;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/* ------------------------------------------------------------------ */
/* Method configuration flags (shared by denoise and bench)            */
/* ------------------------------------------------------------------ */

struct MethodFlags {
  double sd_threshold = 0.3;
  int max_sift_iterations = 100;
  int max_imfs = 20;
  std::string boundary = "mirror";
  std::size_t frame_length = 128;
  std::string sigma_policy = "per-imf";
  double known_sigma = 0.0;
  bool unsquared_variance = false;
  std::size_t wiener_frame_length = 256;
  double wiener_overlap = 0.5;
  std::string wiener_noise = "estimate";
  double wiener_known_power = 0.0;
  std::size_t wiener_estimate_frames = 8;
  std::size_t dwt_levels = 0;
};

MethodFlags library_defaults() {
  emdn_denoise_config c;
  emdn_denoise_config_init(&c);
  MethodFlags f;
  f.sd_threshold = c.sift.sd_threshold;
  f.max_sift_iterations = c.sift.max_sift_iterations;
  f.max_imfs = c.sift.max_imfs;
  f.boundary =
      c.sift.boundary_policy == EMDN_BOUNDARY_CLAMP_ENDPOINTS ? "clamp"
                                                              : "mirror";
  f.frame_length = c.frame_length;
  switch (c.noise_sigma_policy) {
    case EMDN_SIGMA_GLOBAL_FIRST_IMF_MAD: f.sigma_policy = "global-first-imf"; break;
    case EMDN_SIGMA_KNOWN: f.sigma_policy = "known"; break;
    default: f.sigma_policy = "per-imf"; break;
  }
  f.known_sigma = c.known_sigma;
  f.unsquared_variance = c.unsquared_variance != 0;
  f.wiener_frame_length = c.wiener_frame_length;
  f.wiener_overlap = c.wiener_overlap_fraction;
  f.wiener_noise =
      c.wiener_noise_policy == EMDN_WIENER_NOISE_KNOWN ? "known" : "estimate";
  f.wiener_known_power = c.wiener_known_noise_power;
  f.wiener_estimate_frames = c.wiener_estimate_frames;
  f.dwt_levels = c.dwt_levels;
  return f;
}

emdn_denoise_config to_config(const MethodFlags& f) {
  emdn_denoise_config c;
  emdn_denoise_config_init(&c);
  c.sift.sd_threshold = f.sd_threshold;
  c.sift.max_sift_iterations = f.max_sift_iterations;
  c.sift.max_imfs = f.max_imfs;
  c.sift.boundary_policy = f.boundary == "clamp"
                               ? EMDN_BOUNDARY_CLAMP_ENDPOINTS
                               : EMDN_BOUNDARY_MIRROR_EXTREMA;
  c.frame_length = f.frame_length;
  if (f.sigma_policy == "global-first-imf")
    c.noise_sigma_policy = EMDN_SIGMA_GLOBAL_FIRST_IMF_MAD;
  else if (f.sigma_policy == "known")
    c.noise_sigma_policy = EMDN_SIGMA_KNOWN;
  else
    c.noise_sigma_policy = EMDN_SIGMA_PER_IMF_MAD;
  c.known_sigma = f.known_sigma;
  c.unsquared_variance = f.unsquared_variance ? 1 : 0;
  c.wiener_frame_length = f.wiener_frame_length;
  c.wiener_overlap_fraction = f.wiener_overlap;
  c.wiener_noise_policy = f.wiener_noise == "known"
                              ? EMDN_WIENER_NOISE_KNOWN
                              : EMDN_WIENER_NOISE_ESTIMATE_FIRST_FRAMES;
  c.wiener_known_noise_power = f.wiener_known_power;
  c.wiener_estimate_frames = f.wiener_estimate_frames;
  c.dwt_levels = f.dwt_levels;
  return c;
}

json config_fingerprint(const emdn_denoise_config& c) {
  const char* sigma_policy = "per-imf-mad";
  if (c.noise_sigma_policy == EMDN_SIGMA_GLOBAL_FIRST_IMF_MAD)
    sigma_policy = "global-first-imf-mad";
  else if (c.noise_sigma_policy == EMDN_SIGMA_KNOWN)
    sigma_policy = "known";
  return json{
      {"frame_length", c.frame_length},
      {"sift",
       {{"sd_threshold", c.sift.sd_threshold},
        {"max_sift_iterations", c.sift.max_sift_iterations},
        {"max_imfs", c.sift.max_imfs},
        {"boundary_policy",
         c.sift.boundary_policy == EMDN_BOUNDARY_CLAMP_ENDPOINTS
             ? "clamp-endpoints"
             : "mirror-extrema"}}},
      {"noise_sigma_policy", sigma_policy},
      {"known_sigma", c.known_sigma},
      {"unsquared_variance", c.unsquared_variance != 0},
      {"wiener",
       {{"frame_length", c.wiener_frame_length},
        {"overlap_fraction", c.wiener_overlap_fraction},
        {"noise_policy", c.wiener_noise_policy == EMDN_WIENER_NOISE_KNOWN
                             ? "known"
                             : "estimate-first-frames"},
        {"known_noise_power", c.wiener_known_noise_power},
        {"estimate_frames", c.wiener_estimate_frames}}},
      {"dwt", {{"levels", c.dwt_levels}}}};
}

void register_sift_flags(CLI::App* cmd, MethodFlags& f) {
  cmd->add_option("--sd-threshold", f.sd_threshold,
                  "Sifting stop threshold (SD statistic)")
      ->capture_default_str();
  cmd->add_option("--max-sift-iterations", f.max_sift_iterations,
                  "Sift iteration cap per IMF")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-imfs", f.max_imfs, "Cap on extracted IMFs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--boundary", f.boundary, "Envelope boundary policy")
      ->check(CLI::IsMember({"mirror", "clamp"}))
      ->capture_default_str();
}

void register_method_flags(CLI::App* cmd, MethodFlags& f) {
  register_sift_flags(cmd, f);
  cmd->add_option("--frame-length", f.frame_length,
                  "EMD pipeline frame length in samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--sigma-policy", f.sigma_policy,
                  "Noise sigma source for frame classification")
      ->check(CLI::IsMember({"per-imf", "global-first-imf", "known"}))
      ->capture_default_str();
  cmd->add_option("--known-sigma", f.known_sigma,
                  "Noise sigma when --sigma-policy known")
      ->capture_default_str();
  cmd->add_flag("--unsquared-variance", f.unsquared_variance,
                "NormalShrink numerator uses sigma-hat, not its square");
  cmd->add_option("--wiener-frame", f.wiener_frame_length,
                  "Wiener FFT frame length (power of two)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--wiener-overlap", f.wiener_overlap,
                  "Wiener frame overlap fraction, in [0, 1)")
      ->capture_default_str();
  cmd->add_option("--wiener-noise", f.wiener_noise,
                  "Wiener noise power source")
      ->check(CLI::IsMember({"estimate", "known"}))
      ->capture_default_str();
  cmd->add_option("--wiener-known-power", f.wiener_known_power,
                  "Per-sample noise power when --wiener-noise known")
      ->capture_default_str();
  cmd->add_option("--wiener-estimate-frames", f.wiener_estimate_frames,
                  "Leading frames used for the Wiener noise estimate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--dwt-levels", f.dwt_levels,
                  "Haar DWT levels (0 = automatic)")
      ->capture_default_str();
}

bool is_emd_method(emdn_method method) {
  return method == EMDN_METHOD_PROPOSED ||
         method == EMDN_METHOD_EMD_UNIVERSAL_SOFT ||
         method == EMDN_METHOD_EMD_UNIVERSAL_HARD;
}

/* ------------------------------------------------------------------ */
/* Fixture synthesis                                                   */
/* ------------------------------------------------------------------ */

// One-pole lowpass, applied in place. Used twice per edge to build the
// "filtered noise" band for the speech-like burst fixtures.
std::vector<double> lowpass(std::vector<double> x, double cutoff_hz) {
  const double a = std::exp(-2.0 * kPi * cutoff_hz / kFixtureRate);
  double y = 0.0;
  for (double& v : x) {
    y = a * y + (1.0 - a) * v;
    v = y;
  }
  return x;
}

std::vector<double> bandpass_noise(std::uint64_t seed, double low_hz,
                                   double high_hz) {
  std::vector<double> white(kFixtureLength);
  emdnoise::GaussianRng rng(seed);
  rng.fill(white);
  std::vector<double> wide = lowpass(lowpass(white, high_hz), high_hz);
  const std::vector<double> narrow = lowpass(lowpass(white, low_hz), low_hz);
  for (std::size_t i = 0; i < wide.size(); ++i) wide[i] -= narrow[i];
  return wide;
}

struct Burst {
  std::size_t start;
  std::size_t length;
};

// Raised-cosine gated bursts; silence elsewhere. Every fixture keeps its
// bursts under half of the samples so that robust (median-based) noise
// estimates settle on the quiet gaps rather than on the signal, the way
// they do on real speech with pauses.
std::vector<double> burst_envelope(std::span<const Burst> bursts,
                                   std::size_t ramp) {
  std::vector<double> env(kFixtureLength, 0.0);
  for (const Burst& b : bursts) {
    for (std::size_t i = 0; i < b.length && b.start + i < env.size(); ++i) {
      double gain = 1.0;
      if (i < ramp)
        gain = 0.5 * (1.0 - std::cos(kPi * (i + 1.0) / (ramp + 1.0)));
      const std::size_t from_end = b.length - 1 - i;
      if (from_end < ramp)
        gain = std::min(
            gain, 0.5 * (1.0 - std::cos(kPi * (from_end + 1.0) / (ramp + 1.0))));
      env[b.start + i] = gain;
    }
  }
  return env;
}

void normalize_peak(std::vector<double>& x, double peak) {
  double max_abs = 0.0;
  for (double v : x) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs > 0.0)
    for (double& v : x) v *= peak / max_abs;
}

void normalize_rms(std::vector<double>& x) {
  double rms = 0.0;
  for (double v : x) rms += v * v;
  rms = std::sqrt(rms / static_cast<double>(x.size()));
  if (rms > 0.0)
    for (double& v : x) v /= rms;
}

// Spectral envelope of the synthetic "vowel" stacks: three Gaussian
// formant bumps over a small floor, so harmonic energy is spread across
// many moderate partials the way voiced speech spreads it, instead of
// being parked in one or two dominant lines.
double formant_amp(double f, double f1, double f2, double f3) {
  const auto bump = [&](double center, double width, double gain) {
    const double d = (f - center) / width;
    return gain * std::exp(-0.5 * d * d);
  };
  return bump(f1, 90.0, 1.0) + bump(f2, 120.0, 0.5) + bump(f3, 180.0, 0.25) +
         0.02;
}

// Deterministic pseudo-random phase for harmonic k (golden-ratio
// rotation) to keep the stack's crest factor reasonable.
double harmonic_phase(int k) {
  const double x = 0.6180339887 * k;
  return 2.0 * kPi * (x - std::floor(x));
}

// Burst layouts. All start at sample 0 so the leading samples already
// carry signal, and every layout leaves generous quiet gaps between
// bursts. The voiced/fricative pairs interleave strong harmonic bursts
// with weaker filtered-noise bursts, mimicking running speech.
constexpr Burst kBurstsA[] = {
    {0, 800}, {1900, 700}, {3700, 800}, {5600, 700}, {7200, 600}};
constexpr Burst kBurstsB[] = {
    {0, 900}, {2100, 800}, {4100, 700}, {6000, 800}, {7400, 500}};
constexpr Burst kVoicedA[] = {{0, 900}, {1900, 900}, {4400, 900}, {6600, 800}};
constexpr Burst kFricativeA[] = {{1100, 500}, {3100, 600}, {5800, 500}};
constexpr Burst kVoicedB[] = {{0, 800}, {2200, 900}, {4800, 800}, {7000, 700}};
constexpr Burst kFricativeB[] = {{1200, 600}, {3600, 500}, {6100, 500}};

// Two AM tones in voiced bursts plus interleaved fricative noise bursts.
// The deep amplitude modulation (envelope swings 0.1..1.0) is the
// syllabic energy contour of speech.
std::vector<double> fixture_twotone(double f1, double f2, double am_rate,
                                    std::uint64_t noise_seed,
                                    double noise_low_hz, double noise_high_hz,
                                    double fric_gain) {
  std::vector<double> band = bandpass_noise(noise_seed, noise_low_hz,
                                            noise_high_hz);
  normalize_rms(band);
  const std::vector<double> voiced_env = burst_envelope(kVoicedB, 240);
  const std::vector<double> fric_env = burst_envelope(kFricativeB, 160);
  std::vector<double> s(kFixtureLength);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double t = static_cast<double>(i) / kFixtureRate;
    const double m = 0.55 + 0.45 * std::sin(2.0 * kPi * am_rate * t);
    s[i] = voiced_env[i] * m *
               (std::sin(2.0 * kPi * f1 * t) +
                0.7 * std::sin(2.0 * kPi * f2 * t + 0.6)) +
           fric_env[i] * fric_gain * band[i];
  }
  normalize_peak(s, 0.5);
  return s;
}

std::vector<double> fixture_twotone_am_a() {
  return fixture_twotone(280.0, 840.0, 2.9, 47, 1700.0, 2600.0, 0.50);
}

std::vector<double> fixture_twotone_am_b() {
  return fixture_twotone(330.0, 990.0, 2.9, 49, 1700.0, 2600.0, 0.45);
}

// Each burst is its own fast wide sweep (300 Hz to 3.4 kHz), so within
// any short analysis frame the energy is smeared over many bins.
std::vector<double> fixture_chirp_am() {
  const std::vector<double> env = burst_envelope(kBurstsB, 240);
  std::vector<double> s(kFixtureLength, 0.0);
  for (const Burst& b : kBurstsB) {
    const double duration = static_cast<double>(b.length) / kFixtureRate;
    for (std::size_t i = 0; i < b.length && b.start + i < s.size(); ++i) {
      const double local = static_cast<double>(i) / kFixtureRate;
      const double t = static_cast<double>(b.start + i) / kFixtureRate;
      const double m = 0.6 + 0.4 * std::sin(2.0 * kPi * 4.2 * t + kPi / 2);
      const double phase = 2.0 * kPi *
          (300.0 * local + 0.5 * (3400.0 - 300.0) / duration * local * local);
      s[b.start + i] = env[b.start + i] * m * std::sin(phase);
    }
  }
  normalize_peak(s, 0.5);
  return s;
}

// Pitch-glide: a harmonic stack whose fundamental sweeps 120 -> 180 Hz
// over each burst, shaped by fixed formants, with a touch of aspiration
// noise mixed into the bursts.
std::vector<double> fixture_glide_am() {
  const std::vector<double> env = burst_envelope(kBurstsA, 240);
  const int harmonics = static_cast<int>(3600.0 / 180.0);
  std::vector<double> pure(kFixtureLength, 0.0);
  for (const Burst& b : kBurstsA) {
    const double duration = static_cast<double>(b.length) / kFixtureRate;
    for (std::size_t i = 0; i < b.length && b.start + i < pure.size(); ++i) {
      const double local = static_cast<double>(i) / kFixtureRate;
      const double base_phase = 2.0 * kPi *
          (120.0 * local + 0.5 * (180.0 - 120.0) / duration * local * local);
      double v = 0.0;
      for (int k = 1; k <= harmonics; ++k) {
        const double mid_freq = k * 0.5 * (120.0 + 180.0);
        const double a = formant_amp(mid_freq, 550.0, 1400.0, 2450.0);
        v += a * std::sin(k * base_phase + harmonic_phase(k));
      }
      pure[b.start + i] = v;
    }
  }
  double pure_rms = 0.0;
  for (double v : pure) pure_rms += v * v;
  pure_rms = std::sqrt(pure_rms / static_cast<double>(pure.size()));
  std::vector<double> breath = bandpass_noise(5, 400.0, 3400.0);
  normalize_rms(breath);
  std::vector<double> s(kFixtureLength);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double t = static_cast<double>(i) / kFixtureRate;
    const double m = 0.75 + 0.25 * std::sin(2.0 * kPi * 2.9 * t);
    s[i] = env[i] * m * (pure[i] + 0.18 * pure_rms * breath[i]);
  }
  normalize_peak(s, 0.5);
  return s;
}

// Alternating "voiced" (formant-shaped harmonic stack with vibrato) and
// "fricative" (band-limited noise, weaker) bursts, the closest of the
// fixtures to the spectral texture of running speech.
std::vector<double> fixture_speechlike(double f0, double formant1,
                                       double formant2, double formant3,
                                       std::uint64_t noise_seed,
                                       double noise_low_hz,
                                       double noise_high_hz, double fric_gain,
                                       std::span<const Burst> voiced,
                                       std::span<const Burst> fricative) {
  const int harmonics = static_cast<int>(3600.0 / f0);
  std::vector<double> pure(kFixtureLength);
  for (std::size_t i = 0; i < pure.size(); ++i) {
    const double t = static_cast<double>(i) / kFixtureRate;
    // 2% vibrato at 5.2 Hz, integrated so the phase stays coherent.
    const double warped = t - 0.02 / (2.0 * kPi * 5.2) *
                                  (std::cos(2.0 * kPi * 5.2 * t) - 1.0);
    const double base_phase = 2.0 * kPi * f0 * warped;
    double v = 0.0;
    for (int k = 1; k <= harmonics; ++k) {
      const double a = formant_amp(k * f0, formant1, formant2, formant3);
      v += a * std::sin(k * base_phase + harmonic_phase(k));
    }
    pure[i] = v;
  }
  normalize_rms(pure);
  std::vector<double> band = bandpass_noise(noise_seed, noise_low_hz,
                                            noise_high_hz);
  normalize_rms(band);
  const std::vector<double> voiced_env = burst_envelope(voiced, 240);
  const std::vector<double> fric_env = burst_envelope(fricative, 160);
  std::vector<double> s(kFixtureLength);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double t = static_cast<double>(i) / kFixtureRate;
    const double m = 0.75 + 0.25 * std::sin(2.0 * kPi * 2.9 * t);
    s[i] = voiced_env[i] * m * pure[i] + fric_env[i] * fric_gain * band[i];
  }
  normalize_peak(s, 0.5);
  return s;
}

std::vector<double> fixture_speechlike_a() {
  return fixture_speechlike(132.0, 500.0, 1500.0, 2500.0, 31, 1400.0, 2400.0,
                            0.55, kVoicedA, kFricativeA);
}

std::vector<double> fixture_speechlike_b() {
  return fixture_speechlike(165.0, 700.0, 1200.0, 2600.0, 49, 1700.0, 2600.0,
                            0.60, kVoicedB, kFricativeB);
}

void run_make_fixtures(const std::string& out_dir) {
  fs::create_directories(out_dir);
  const std::vector<std::pair<std::string, std::vector<double>>> fixtures = {
      {"chirp_am.wav", fixture_chirp_am()},
      {"glide_am.wav", fixture_glide_am()},
      {"speechlike_a.wav", fixture_speechlike_a()},
      {"speechlike_b.wav", fixture_speechlike_b()},
      {"twotone_am_a.wav", fixture_twotone_am_a()},
      {"twotone_am_b.wav", fixture_twotone_am_b()},
  };
  json files = json::array();
  for (const auto& [name, samples] : fixtures) {
    const SignalPtr signal = make_signal(samples, kFixtureRate);
    save_signal(signal.get(), fs::path(out_dir) / name);
    files.push_back(name);
  }
  write_json_file(fs::path(out_dir) / "manifest.json",
                  json{{"sample_rate_hz", kFixtureRate},
                       {"num_samples", kFixtureLength},
                       {"files", files}});
  std::cout << "wrote " << fixtures.size() << " fixtures to " << out_dir
            << "\n";
}

/* ------------------------------------------------------------------ */
/* decompose                                                           */
/* ------------------------------------------------------------------ */

void run_decompose(const std::string& input, const std::string& out_dir,
                   const MethodFlags& flags) {
  const SignalPtr signal = load_signal(input);
  const emdn_denoise_config config = to_config(flags);
  emdn_decomposition* raw = nullptr;
  check(emdn_decompose(signal.get(), &config.sift, &raw),
        "decomposing " + input);
  const DecompPtr decomp(raw);

  fs::create_directories(out_dir);
  const std::size_t count = emdn_imf_count(decomp.get());
  json imfs = json::array();
  for (std::size_t j = 0; j < count; ++j) {
    emdn_signal* imf_raw = nullptr;
    check(emdn_imf(decomp.get(), j, &imf_raw), "extracting IMF");
    const SignalPtr imf(imf_raw);
    char name[32];
    std::snprintf(name, sizeof name, "imf_%02zu.wav", j + 1);
    save_signal(imf.get(), fs::path(out_dir) / name);
    std::size_t maxima = 0;
    std::size_t minima = 0;
    check(emdn_count_extrema(imf.get(), &maxima, &minima),
          "counting extrema");
    imfs.push_back(json{{"index", j + 1},
                        {"file", name},
                        {"energy", emdn_signal_energy(imf.get())},
                        {"sift_iterations", emdn_sift_count(decomp.get(), j)},
                        {"maxima", maxima},
                        {"minima", minima}});
  }
  emdn_signal* res_raw = nullptr;
  check(emdn_residue(decomp.get(), &res_raw), "extracting residue");
  const SignalPtr residue(res_raw);
  save_signal(residue.get(), fs::path(out_dir) / "residue.wav");

  write_json_file(
      fs::path(out_dir) / "decomposition.json",
      json{{"input", input},
           {"sample_rate_hz", emdn_signal_sample_rate(signal.get())},
           {"num_samples", emdn_signal_length(signal.get())},
           {"num_imfs", count},
           {"imfs", imfs},
           {"residue",
            {{"file", "residue.wav"},
             {"energy", emdn_signal_energy(residue.get())}}}});
  std::cout << "wrote " << count << " IMF file(s) and residue.wav to "
            << out_dir << "\n";
}

/* ------------------------------------------------------------------ */
/* add-noise                                                           */
/* ------------------------------------------------------------------ */

void run_add_noise(const std::string& input, double snr, std::uint64_t seed,
                   const std::string& out, const std::string& json_flag) {
  const SignalPtr clean = load_signal(input);
  emdn_signal* noisy_raw = nullptr;
  check(emdn_add_awgn(clean.get(), snr, seed, &noisy_raw, nullptr),
        "adding noise to " + input);
  const SignalPtr noisy(noisy_raw);
  double realized = 0.0;
  check(emdn_snr_db(clean.get(), noisy.get(), &realized),
        "measuring realized SNR");

  ensure_parent_dir(out);
  save_signal(noisy.get(), out);
  const fs::path sidecar = sidecar_path(json_flag, out, "noise.json");
  ensure_parent_dir(sidecar);
  write_json_file(sidecar,
                  json{{"input", input},
                       {"output", out},
                       {"target_snr_db", snr},
                       {"realized_snr_db_prequantization", realized},
                       {"seed", seed}});
  std::cout << "wrote " << out << " (target " << format_compact(snr)
            << " dB)\n";
}

/* ------------------------------------------------------------------ */
/* denoise                                                             */
/* ------------------------------------------------------------------ */

void run_denoise(const std::string& input, const std::string& method_name,
                 const std::string& out, const std::string& clean_path,
                 const std::string& metrics_flag, const MethodFlags& flags) {
  emdn_method method{};
  check(emdn_method_from_name(method_name.c_str(), &method),
        "resolving method");
  const SignalPtr noisy = load_signal(input);
  const emdn_denoise_config config = to_config(flags);
  emdn_denoise_result* res_raw = nullptr;
  check(emdn_denoise(noisy.get(), method, &config, &res_raw),
        "denoising " + input);
  const ResultPtr result(res_raw);
  emdn_signal* den_raw = nullptr;
  check(emdn_denoise_result_signal(result.get(), &den_raw),
        "reading result");
  const SignalPtr denoised(den_raw);

  ensure_parent_dir(out);
  save_signal(denoised.get(), out);

  json metrics{{"input", input},
               {"output", out},
               {"method", method_name},
               {"config", config_fingerprint(config)}};
  if (is_emd_method(method)) {
    const std::size_t frames = emdn_denoise_result_frame_count(result.get());
    const std::size_t dominant =
        emdn_denoise_result_signal_dominant_count(result.get());
    metrics["frame_stats"] =
        json{{"imf_count", emdn_denoise_result_imf_count(result.get())},
             {"frames_total", frames},
             {"frames_signal_dominant", dominant},
             {"frames_noise_dominant", frames - dominant},
             {"universal_fallbacks",
              emdn_denoise_result_universal_fallback_count(result.get())}};
  } else {
    metrics["frame_stats"] = nullptr;
  }
  if (!clean_path.empty()) {
    const SignalPtr clean = load_signal(clean_path);
    double out_snr_db = 0.0;
    double out_snr_paper = 0.0;
    double noisy_snr = 0.0;
    check(emdn_snr_db(clean.get(), denoised.get(), &out_snr_db),
          "snr_db against clean");
    check(emdn_snr_out_paper(clean.get(), denoised.get(), &out_snr_paper),
          "snr_out_paper against clean");
    check(emdn_snr_db(clean.get(), noisy.get(), &noisy_snr),
          "snr_db of the noisy input");
    metrics["metrics"] = json{{"snr_db", out_snr_db},
                              {"snr_out_paper", out_snr_paper},
                              {"noisy_snr_db", noisy_snr}};
  }
  const fs::path sidecar = sidecar_path(metrics_flag, out, "metrics.json");
  ensure_parent_dir(sidecar);
  write_json_file(sidecar, metrics);
  std::cout << "wrote " << out << " (method " << method_name << ")\n";
}

/* ------------------------------------------------------------------ */
/* bench                                                               */
/* ------------------------------------------------------------------ */

struct Trial {
  std::string file;
  double input_snr_db;
  int seed_index;
  std::uint64_t seed;
  std::string method;
  double snr_out_paper;
  double snr_db;
};

struct Moments {
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t count = 0;
};

Moments moments(const std::vector<double>& values) {
  Moments m;
  m.count = values.size();
  if (values.empty()) return m;
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - m.mean) * (v - m.mean);
  m.stddev = std::sqrt(sq / static_cast<double>(values.size()));
  return m;
}

void run_bench(const std::string& corpus, const std::vector<double>& snrs,
               int seed_count, const std::vector<std::string>& methods,
               const std::string& out_dir, const MethodFlags& flags) {
  if (!fs::is_directory(corpus))
    throw DataError("corpus is not a directory: " + corpus);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus))
    if (entry.is_regular_file() && entry.path().extension() == ".wav")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });
  if (files.empty())
    throw DataError("no .wav files in corpus directory: " + corpus);
  if (snrs.empty()) throw DataError("no input SNRs given");
  if (methods.empty()) throw DataError("no methods given");

  const emdn_denoise_config config = to_config(flags);

  std::vector<Trial> trials;
  json failures = json::array();
  auto record_failure = [&failures](const std::string& file, double snr,
                                    int seed_index, const std::string& method,
                                    const std::string& error) {
    failures.push_back(json{{"file", file},
                            {"input_snr_db", snr},
                            {"seed_index", seed_index},
                            {"method", method},
                            {"error", error}});
  };

  for (const fs::path& file : files) {
    const std::string name = file.filename().string();
    SignalPtr clean;
    try {
      clean = load_signal(file.string());
    } catch (const DataError& e) {
      record_failure(name, 0.0, -1, "", e.what());
      continue;
    }
    for (double snr : snrs) {
      for (int seed_index = 0; seed_index < seed_count; ++seed_index) {
        const std::uint64_t seed = fnv1a64(name + "|" + format_compact(snr) +
                                           "|" + std::to_string(seed_index));
        emdn_signal* noisy_raw = nullptr;
        if (emdn_add_awgn(clean.get(), snr, seed, &noisy_raw, nullptr) !=
            EMDN_OK) {
          record_failure(name, snr, seed_index, "", emdn_last_error());
          continue;
        }
        const SignalPtr noisy(noisy_raw);
        for (const std::string& method_name : methods) {
          emdn_method method{};
          if (emdn_method_from_name(method_name.c_str(), &method) !=
              EMDN_OK) {
            record_failure(name, snr, seed_index, method_name,
                           emdn_last_error());
            continue;
          }
          emdn_denoise_result* res_raw = nullptr;
          if (emdn_denoise(noisy.get(), method, &config, &res_raw) !=
              EMDN_OK) {
            record_failure(name, snr, seed_index, method_name,
                           emdn_last_error());
            continue;
          }
          const ResultPtr result(res_raw);
          emdn_signal* den_raw = nullptr;
          if (emdn_denoise_result_signal(result.get(), &den_raw) != EMDN_OK) {
            record_failure(name, snr, seed_index, method_name,
                           emdn_last_error());
            continue;
          }
          const SignalPtr denoised(den_raw);
          double out_paper = 0.0;
          double out_db = 0.0;
          if (emdn_snr_out_paper(clean.get(), denoised.get(), &out_paper) !=
                  EMDN_OK ||
              emdn_snr_db(clean.get(), denoised.get(), &out_db) != EMDN_OK) {
            record_failure(name, snr, seed_index, method_name,
                           emdn_last_error());
            continue;
          }
          trials.push_back(
              {name, snr, seed_index, seed, method_name, out_paper, out_db});
        }
      }
    }
  }
  if (trials.empty()) throw DataError("every benchmark trial failed");

  // Summary CSV: rows = input SNR, columns = methods, cells = "mean±std"
  // of the snr_out_paper metric over all (file, seed) trials.
  std::string csv = "input_snr_db";
  for (const std::string& m : methods) csv += "," + m;
  csv += "\r\n";
  json aggregates = json::object();
  for (double snr : snrs) {
    csv += format_compact(snr);
    for (const std::string& method_name : methods) {
      std::vector<double> out_paper_values;
      std::vector<double> out_db_values;
      for (const Trial& t : trials)
        if (t.method == method_name && t.input_snr_db == snr) {
          out_paper_values.push_back(t.snr_out_paper);
          out_db_values.push_back(t.snr_db);
        }
      const Moments out_paper = moments(out_paper_values);
      const Moments out_db = moments(out_db_values);
      csv += "," + format_fixed4(out_paper.mean) + "±" +
             format_fixed4(out_paper.stddev);
      aggregates[method_name][format_compact(snr)] =
          json{{"trials", out_paper.count},
               {"snr_out_paper",
                {{"mean", out_paper.mean}, {"std", out_paper.stddev}}},
               {"snr_db", {{"mean", out_db.mean}, {"std", out_db.stddev}}}};
    }
    csv += "\r\n";
  }

  fs::create_directories(out_dir);
  write_text(fs::path(out_dir) / "report.csv", csv);

  json trial_list = json::array();
  for (const Trial& t : trials)
    trial_list.push_back(json{{"file", t.file},
                              {"input_snr_db", t.input_snr_db},
                              {"seed_index", t.seed_index},
                              {"seed", t.seed},
                              {"method", t.method},
                              {"snr_out_paper", t.snr_out_paper},
                              {"snr_db", t.snr_db}});
  json file_list = json::array();
  for (const fs::path& f : files) file_list.push_back(f.filename().string());

  write_json_file(fs::path(out_dir) / "report.json",
                  json{{"command", "bench"},
                       {"generated_at_utc", utc_timestamp()},
                       {"corpus", corpus},
                       {"files", file_list},
                       {"input_snrs_db", snrs},
                       {"seeds_per_condition", seed_count},
                       {"methods", methods},
                       {"config", config_fingerprint(config)},
                       {"csv_metric", "snr_out_paper"},
                       {"aggregates", aggregates},
                       {"trials", trial_list},
                       {"failures", failures}});
  std::cout << "bench: " << trials.size() << " trials, " << failures.size()
            << " failure(s); report.csv and report.json in " << out_dir
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empirical-mode-decomposition speech denoising toolkit"};
  app.set_version_flag("--version", std::string(emdn_version()));
  app.require_subcommand(1);

  MethodFlags flags = library_defaults();

  auto* dec = app.add_subcommand(
      "decompose", "Write one WAV per IMF plus the residue and a JSON summary");
  std::string dec_input;
  std::string dec_out_dir = ".";
  dec->add_option("input", dec_input, "Input WAV file")->required();
  dec->add_option("--out-dir", dec_out_dir, "Output directory")
      ->capture_default_str();
  register_sift_flags(dec, flags);
  dec->callback([&] { run_decompose(dec_input, dec_out_dir, flags); });

  auto* an = app.add_subcommand(
      "add-noise", "Add seeded white Gaussian noise at an exact input SNR");
  std::string an_input;
  std::string an_out = "noisy.wav";
  std::string an_json;
  double an_snr = 0.0;
  std::uint64_t an_seed = 0;
  an->add_option("input", an_input, "Clean WAV file")->required();
  an->add_option("--snr", an_snr, "Target input SNR in dB")->required();
  an->add_option("--seed", an_seed, "Noise seed")->capture_default_str();
  an->add_option("--out", an_out, "Noisy output WAV")->capture_default_str();
  an->add_option("--json", an_json,
                 "Sidecar path (default: noise.json beside --out)");
  an->callback([&] { run_add_noise(an_input, an_snr, an_seed, an_out, an_json); });

  auto* dn = app.add_subcommand("denoise", "Denoise a WAV file");
  std::string dn_input;
  std::string dn_method;
  std::string dn_out = "denoised.wav";
  std::string dn_clean;
  std::string dn_metrics;
  dn->add_option("input", dn_input, "Noisy WAV file")->required();
  dn->add_option("--method", dn_method, "Denoising method")
      ->required()
      ->check(CLI::IsMember(kMethodNames));
  dn->add_option("--out", dn_out, "Denoised output WAV")
      ->capture_default_str();
  dn->add_option("--clean", dn_clean, "Clean reference WAV for SNR metrics");
  dn->add_option("--metrics-json", dn_metrics,
                 "Sidecar path (default: metrics.json beside --out)");
  register_method_flags(dn, flags);
  dn->callback([&] {
    run_denoise(dn_input, dn_method, dn_out, dn_clean, dn_metrics, flags);
  });

  auto* bn = app.add_subcommand(
      "bench", "SNR sweep over a corpus; writes report.csv and report.json");
  std::string bn_corpus;
  std::string bn_out_dir = ".";
  std::vector<double> bn_snrs = {0.0, 5.0, 10.0, 15.0};
  int bn_seeds = 10;
  std::vector<std::string> bn_methods = {"dwt-soft", "dwt-hard", "wiener",
                                         "proposed"};
  bn->add_option("--corpus", bn_corpus, "Directory of clean WAV fixtures")
      ->required();
  bn->add_option("--snrs", bn_snrs, "Input SNRs in dB")
      ->delimiter(',')
      ->capture_default_str();
  bn->add_option("--seeds", bn_seeds, "Noise seeds per (file, SNR)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bn->add_option("--methods", bn_methods, "Methods to benchmark")
      ->delimiter(',')
      ->check(CLI::IsMember(kMethodNames))
      ->capture_default_str();
  bn->add_option("--out-dir", bn_out_dir, "Report directory")
      ->capture_default_str();
  register_method_flags(bn, flags);
  bn->callback([&] {
    run_bench(bn_corpus, bn_snrs, bn_seeds, bn_methods, bn_out_dir, flags);
  });

  auto* mk = app.add_subcommand("make-fixtures",
                                "Synthesize the benchmark fixture corpus");
  std::string mk_out = "fixtures";
  mk->add_option("--out-dir", mk_out, "Output directory")
      ->capture_default_str();
  mk->callback([&] { run_make_fixtures(mk_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help / --version
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
