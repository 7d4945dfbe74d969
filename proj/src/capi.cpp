// src/capi.cpp

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

#include "emdnoise.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "emdnoise/baselines.hpp"
#include "emdnoise/emd.hpp"
#include "emdnoise/errors.hpp"
#include "emdnoise/pipeline.hpp"
#include "emdnoise/signal.hpp"
#include "emdnoise/wav.hpp"

using emdnoise::Signal;

struct emdn_signal {
  Signal value;
};

struct emdn_decomposition {
  emdnoise::ImfDecomposition value;
};

struct emdn_denoise_result {
  Signal denoised;
  size_t imf_count = 0;
  size_t frame_count = 0;
  size_t signal_dominant_count = 0;
  size_t universal_fallback_count = 0;
};

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const std::string& message) { g_last_error = message; }

// Runs `body`, translating exceptions to status codes.
template <typename Body>
emdn_status guarded(Body&& body) {
  try {
    return body();
  } catch (const emdnoise::LengthMismatchError& e) {
    set_error(e.what());
    return EMDN_ERR_LENGTH_MISMATCH;
  } catch (const emdnoise::ZeroEnergyError& e) {
    set_error(e.what());
    return EMDN_ERR_ZERO_ENERGY;
  } catch (const emdnoise::InsufficientExtremaError& e) {
    set_error(e.what());
    return EMDN_ERR_INSUFFICIENT_EXTREMA;
  } catch (const emdnoise::WavFormatError& e) {
    set_error(e.what());
    return EMDN_ERR_BAD_FORMAT;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return EMDN_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return EMDN_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return EMDN_ERR_INTERNAL;
  } catch (const std::runtime_error& e) {
    set_error(e.what());
    return EMDN_ERR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return EMDN_ERR_INTERNAL;
  }
}

emdn_status require(bool condition, const char* message) {
  if (condition) return EMDN_OK;
  set_error(message);
  return EMDN_ERR_INVALID_ARGUMENT;
}

emdn_signal* wrap(Signal s) { return new emdn_signal{std::move(s)}; }

emdnoise::SiftConfig to_sift_config(const emdn_sift_config* c) {
  emdnoise::SiftConfig out;
  if (c == nullptr) return out;
  out.sd_threshold = c->sd_threshold;
  out.max_sift_iterations = c->max_sift_iterations;
  out.max_imfs = c->max_imfs;
  out.boundary_policy = c->boundary_policy == EMDN_BOUNDARY_CLAMP_ENDPOINTS
                            ? emdnoise::BoundaryPolicy::ClampEndpoints
                            : emdnoise::BoundaryPolicy::MirrorExtrema;
  return out;
}

emdnoise::DenoiseConfig to_denoise_config(const emdn_denoise_config* c,
                                          emdnoise::ShrinkFlavor flavor) {
  emdnoise::DenoiseConfig out;
  out.shrink_flavor = flavor;
  if (c == nullptr) return out;
  out.frame_length = c->frame_length;
  out.sift = to_sift_config(&c->sift);
  switch (c->noise_sigma_policy) {
    case EMDN_SIGMA_GLOBAL_FIRST_IMF_MAD:
      out.noise_sigma_policy = emdnoise::NoiseSigmaPolicy::GlobalFirstImfMad;
      break;
    case EMDN_SIGMA_KNOWN:
      out.noise_sigma_policy = emdnoise::NoiseSigmaPolicy::Known;
      break;
    default:
      out.noise_sigma_policy = emdnoise::NoiseSigmaPolicy::PerImfMad;
      break;
  }
  out.known_sigma = c->known_sigma;
  out.unsquared_variance = c->unsquared_variance != 0;
  return out;
}

emdnoise::WienerConfig to_wiener_config(const emdn_denoise_config* c) {
  emdnoise::WienerConfig out;
  if (c == nullptr) return out;
  out.fft_frame_length = c->wiener_frame_length;
  out.overlap_fraction = c->wiener_overlap_fraction;
  out.noise_power_policy = c->wiener_noise_policy == EMDN_WIENER_NOISE_KNOWN
                               ? emdnoise::NoisePowerPolicy::Known
                               : emdnoise::NoisePowerPolicy::EstimateFromFirstFrames;
  out.known_noise_power = c->wiener_known_noise_power;
  out.estimate_frames = c->wiener_estimate_frames;
  return out;
}

emdn_denoise_result* from_trace(emdnoise::DenoiseTrace trace) {
  auto* result = new emdn_denoise_result;
  result->denoised = std::move(trace.denoised);
  result->imf_count = trace.decomposition.imfs.size();
  result->frame_count = trace.decisions.size();
  for (const auto& decision : trace.decisions) {
    if (decision.dominant == emdnoise::FrameDominance::SignalDominant)
      ++result->signal_dominant_count;
    if (decision.used_universal_fallback) ++result->universal_fallback_count;
  }
  return result;
}

}  // namespace

extern "C" {

const char* emdn_status_name(emdn_status status) {
  switch (status) {
    case EMDN_OK: return "ok";
    case EMDN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EMDN_ERR_LENGTH_MISMATCH: return "length mismatch";
    case EMDN_ERR_ZERO_ENERGY: return "zero energy";
    case EMDN_ERR_INSUFFICIENT_EXTREMA: return "insufficient extrema";
    case EMDN_ERR_IO: return "io error";
    case EMDN_ERR_BAD_FORMAT: return "bad format";
    case EMDN_ERR_UNSUPPORTED: return "unsupported";
    case EMDN_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* emdn_last_error(void) { return g_last_error.c_str(); }

const char* emdn_version(void) { return "0.1.0"; }

emdn_status emdn_signal_create(const double* samples, size_t length,
                               int sample_rate_hz, emdn_signal** out) {
  if (auto s = require(out != nullptr, "out is NULL")) return s;
  if (auto s = require(samples != nullptr || length == 0, "samples is NULL"))
    return s;
  return guarded([&] {
    Signal signal;
    signal.samples.assign(samples, samples + length);
    signal.sample_rate_hz = sample_rate_hz;
    emdnoise::validate(signal);
    *out = wrap(std::move(signal));
    return EMDN_OK;
  });
}

void emdn_signal_free(emdn_signal* signal) { delete signal; }

size_t emdn_signal_length(const emdn_signal* signal) {
  return signal == nullptr ? 0 : signal->value.samples.size();
}

int emdn_signal_sample_rate(const emdn_signal* signal) {
  return signal == nullptr ? 0 : signal->value.sample_rate_hz;
}

const double* emdn_signal_samples(const emdn_signal* signal) {
  return signal == nullptr ? nullptr : signal->value.samples.data();
}

double emdn_signal_energy(const emdn_signal* signal) {
  return signal == nullptr ? 0.0 : emdnoise::energy(signal->value);
}

emdn_status emdn_wav_load(const char* path, emdn_signal** out) {
  if (auto s = require(path != nullptr && out != nullptr,
                       "path and out must be non-NULL"))
    return s;
  return guarded([&] {
    *out = wrap(emdnoise::load_wav(path).signal);
    return EMDN_OK;
  });
}

emdn_status emdn_wav_save(const emdn_signal* signal, const char* path) {
  if (auto s = require(signal != nullptr && path != nullptr,
                       "signal and path must be non-NULL"))
    return s;
  return guarded([&] {
    emdnoise::save_wav(signal->value, path);
    return EMDN_OK;
  });
}

emdn_status emdn_add_awgn(const emdn_signal* clean, double target_snr_db,
                          uint64_t seed, emdn_signal** noisy_out,
                          emdn_signal** noise_out) {
  if (auto s = require(clean != nullptr && noisy_out != nullptr,
                       "clean and noisy_out must be non-NULL"))
    return s;
  return guarded([&] {
    emdnoise::NoisyPair pair = emdnoise::add_awgn(
        clean->value, {.target_input_snr_db = target_snr_db, .seed = seed});
    *noisy_out = wrap(std::move(pair.noisy));
    if (noise_out != nullptr) *noise_out = wrap(std::move(pair.noise));
    return EMDN_OK;
  });
}

emdn_status emdn_snr_db(const emdn_signal* reference,
                        const emdn_signal* estimate, double* out) {
  if (auto s = require(reference != nullptr && estimate != nullptr &&
                           out != nullptr,
                       "reference, estimate and out must be non-NULL"))
    return s;
  return guarded([&] {
    *out = emdnoise::snr_db(reference->value, estimate->value);
    return EMDN_OK;
  });
}

emdn_status emdn_snr_out_paper(const emdn_signal* clean,
                               const emdn_signal* denoised, double* out) {
  if (auto s = require(clean != nullptr && denoised != nullptr &&
                           out != nullptr,
                       "clean, denoised and out must be non-NULL"))
    return s;
  return guarded([&] {
    *out = emdnoise::snr_out_paper(clean->value, denoised->value);
    return EMDN_OK;
  });
}

void emdn_sift_config_init(emdn_sift_config* config) {
  if (config == nullptr) return;
  const emdnoise::SiftConfig defaults;
  config->sd_threshold = defaults.sd_threshold;
  config->max_sift_iterations = defaults.max_sift_iterations;
  config->max_imfs = defaults.max_imfs;
  config->boundary_policy = EMDN_BOUNDARY_MIRROR_EXTREMA;
}

emdn_status emdn_decompose(const emdn_signal* signal,
                           const emdn_sift_config* config,
                           emdn_decomposition** out) {
  if (auto s = require(signal != nullptr && out != nullptr,
                       "signal and out must be non-NULL"))
    return s;
  return guarded([&] {
    *out = new emdn_decomposition{
        emdnoise::decompose(signal->value, to_sift_config(config))};
    return EMDN_OK;
  });
}

void emdn_decomposition_free(emdn_decomposition* decomp) { delete decomp; }

size_t emdn_imf_count(const emdn_decomposition* decomp) {
  return decomp == nullptr ? 0 : decomp->value.imfs.size();
}

emdn_status emdn_imf(const emdn_decomposition* decomp, size_t index,
                     emdn_signal** out) {
  if (auto s = require(decomp != nullptr && out != nullptr,
                       "decomp and out must be non-NULL"))
    return s;
  if (auto s = require(index < decomp->value.imfs.size(),
                       "IMF index out of range"))
    return s;
  return guarded([&] {
    *out = wrap(decomp->value.imfs[index]);
    return EMDN_OK;
  });
}

emdn_status emdn_residue(const emdn_decomposition* decomp,
                         emdn_signal** out) {
  if (auto s = require(decomp != nullptr && out != nullptr,
                       "decomp and out must be non-NULL"))
    return s;
  return guarded([&] {
    *out = wrap(decomp->value.residue);
    return EMDN_OK;
  });
}

int emdn_sift_count(const emdn_decomposition* decomp, size_t index) {
  if (decomp == nullptr || index >= decomp->value.sift_counts.size())
    return -1;
  return decomp->value.sift_counts[index];
}

emdn_status emdn_count_extrema(const emdn_signal* signal, size_t* maxima_out,
                               size_t* minima_out) {
  if (auto s = require(signal != nullptr && maxima_out != nullptr &&
                           minima_out != nullptr,
                       "signal, maxima_out and minima_out must be non-NULL"))
    return s;
  return guarded([&] {
    const emdnoise::ExtremaSet set =
        emdnoise::find_extrema(signal->value.samples);
    *maxima_out = set.maxima.size();
    *minima_out = set.minima.size();
    return EMDN_OK;
  });
}

emdn_status emdn_method_from_name(const char* name, emdn_method* out) {
  if (auto s = require(name != nullptr && out != nullptr,
                       "name and out must be non-NULL"))
    return s;
  const std::string n = name;
  if (n == "proposed") *out = EMDN_METHOD_PROPOSED;
  else if (n == "emd-universal-soft") *out = EMDN_METHOD_EMD_UNIVERSAL_SOFT;
  else if (n == "emd-universal-hard") *out = EMDN_METHOD_EMD_UNIVERSAL_HARD;
  else if (n == "dwt-soft") *out = EMDN_METHOD_DWT_SOFT;
  else if (n == "dwt-hard") *out = EMDN_METHOD_DWT_HARD;
  else if (n == "wiener") *out = EMDN_METHOD_WIENER;
  else {
    set_error("unknown method name: " + n);
    return EMDN_ERR_INVALID_ARGUMENT;
  }
  return EMDN_OK;
}

const char* emdn_method_name(emdn_method method) {
  switch (method) {
    case EMDN_METHOD_PROPOSED: return "proposed";
    case EMDN_METHOD_EMD_UNIVERSAL_SOFT: return "emd-universal-soft";
    case EMDN_METHOD_EMD_UNIVERSAL_HARD: return "emd-universal-hard";
    case EMDN_METHOD_DWT_SOFT: return "dwt-soft";
    case EMDN_METHOD_DWT_HARD: return "dwt-hard";
    case EMDN_METHOD_WIENER: return "wiener";
  }
  return "unknown";
}

void emdn_denoise_config_init(emdn_denoise_config* config) {
  if (config == nullptr) return;
  const emdnoise::DenoiseConfig d;
  const emdnoise::WienerConfig w;
  const emdnoise::DwtConfig dwt;
  config->frame_length = d.frame_length;
  emdn_sift_config_init(&config->sift);
  config->noise_sigma_policy = EMDN_SIGMA_PER_IMF_MAD;
  config->known_sigma = d.known_sigma;
  config->unsquared_variance = d.unsquared_variance ? 1 : 0;
  config->wiener_frame_length = w.fft_frame_length;
  config->wiener_overlap_fraction = w.overlap_fraction;
  config->wiener_noise_policy = EMDN_WIENER_NOISE_ESTIMATE_FIRST_FRAMES;
  config->wiener_known_noise_power = w.known_noise_power;
  config->wiener_estimate_frames = w.estimate_frames;
  config->dwt_levels = dwt.levels;
}

emdn_status emdn_denoise(const emdn_signal* noisy, emdn_method method,
                         const emdn_denoise_config* config,
                         emdn_denoise_result** out) {
  if (auto s = require(noisy != nullptr && out != nullptr,
                       "noisy and out must be non-NULL"))
    return s;
  return guarded([&] {
    switch (method) {
      case EMDN_METHOD_PROPOSED: {
        *out = from_trace(emdnoise::denoise_emd_normalshrink(
            noisy->value,
            to_denoise_config(config, emdnoise::ShrinkFlavor::Soft)));
        return EMDN_OK;
      }
      case EMDN_METHOD_EMD_UNIVERSAL_SOFT:
      case EMDN_METHOD_EMD_UNIVERSAL_HARD: {
        const auto flavor = method == EMDN_METHOD_EMD_UNIVERSAL_SOFT
                                ? emdnoise::ShrinkFlavor::Soft
                                : emdnoise::ShrinkFlavor::Hard;
        *out = from_trace(emdnoise::denoise_emd_universal(
            noisy->value, flavor, to_denoise_config(config, flavor)));
        return EMDN_OK;
      }
      case EMDN_METHOD_DWT_SOFT:
      case EMDN_METHOD_DWT_HARD: {
        const auto flavor = method == EMDN_METHOD_DWT_SOFT
                                ? emdnoise::ShrinkFlavor::Soft
                                : emdnoise::ShrinkFlavor::Hard;
        emdnoise::DwtConfig dwt;
        if (config != nullptr) dwt.levels = config->dwt_levels;
        auto* result = new emdn_denoise_result;
        result->denoised =
            emdnoise::universal_dwt_denoise(noisy->value, flavor, dwt);
        *out = result;
        return EMDN_OK;
      }
      case EMDN_METHOD_WIENER: {
        auto* result = new emdn_denoise_result;
        result->denoised =
            emdnoise::wiener_denoise(noisy->value, to_wiener_config(config));
        *out = result;
        return EMDN_OK;
      }
    }
    set_error("unknown method code");
    return EMDN_ERR_INVALID_ARGUMENT;
  });
}

void emdn_denoise_result_free(emdn_denoise_result* result) { delete result; }

emdn_status emdn_denoise_result_signal(const emdn_denoise_result* result,
                                       emdn_signal** out) {
  if (auto s = require(result != nullptr && out != nullptr,
                       "result and out must be non-NULL"))
    return s;
  return guarded([&] {
    *out = wrap(result->denoised);
    return EMDN_OK;
  });
}

size_t emdn_denoise_result_imf_count(const emdn_denoise_result* result) {
  return result == nullptr ? 0 : result->imf_count;
}

size_t emdn_denoise_result_frame_count(const emdn_denoise_result* result) {
  return result == nullptr ? 0 : result->frame_count;
}

size_t emdn_denoise_result_signal_dominant_count(
    const emdn_denoise_result* result) {
  return result == nullptr ? 0 : result->signal_dominant_count;
}

size_t emdn_denoise_result_universal_fallback_count(
    const emdn_denoise_result* result) {
  return result == nullptr ? 0 : result->universal_fallback_count;
}

}  // extern "C"
