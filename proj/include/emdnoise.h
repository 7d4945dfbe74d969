/* include/emdnoise.h */

/* Copyright 2026  The emdnoise authors */

/* Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 * THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
 * KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
 * WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
 * MERCHANTABILITY OR NON-INFRINGEMENT.
 * See the Apache 2 License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the emdnoise library.
 *
 * All objects are opaque handles created and destroyed by this API.
 * Functions that can fail return an emdn_status; on failure
 * emdn_last_error() holds a message for the calling thread, valid until
 * the thread's next emdnoise call. Output parameters are written only on
 * EMDN_OK.
 */

#ifndef EMDNOISE_H_
#define EMDNOISE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EMDN_API __declspec(dllexport)
#else
#define EMDN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum emdn_status {
  EMDN_OK = 0,
  EMDN_ERR_INVALID_ARGUMENT = 1,
  EMDN_ERR_LENGTH_MISMATCH = 2,
  EMDN_ERR_ZERO_ENERGY = 3,
  EMDN_ERR_INSUFFICIENT_EXTREMA = 4,
  EMDN_ERR_IO = 5,
  EMDN_ERR_BAD_FORMAT = 6,
  EMDN_ERR_UNSUPPORTED = 7,
  EMDN_ERR_INTERNAL = 8
} emdn_status;

EMDN_API const char* emdn_status_name(emdn_status status);

/* Message for the calling thread's most recent failure; never NULL. */
EMDN_API const char* emdn_last_error(void);

EMDN_API const char* emdn_version(void);

/* ------------------------------------------------------------------ */
/* Signals                                                             */
/* ------------------------------------------------------------------ */

typedef struct emdn_signal emdn_signal;

/* Copies `length` samples. Samples must be finite. */
EMDN_API emdn_status emdn_signal_create(const double* samples, size_t length,
                                        int sample_rate_hz,
                                        emdn_signal** out);
EMDN_API void emdn_signal_free(emdn_signal* signal);
EMDN_API size_t emdn_signal_length(const emdn_signal* signal);
EMDN_API int emdn_signal_sample_rate(const emdn_signal* signal);
/* Borrowed pointer, valid for the lifetime of the handle. */
EMDN_API const double* emdn_signal_samples(const emdn_signal* signal);
EMDN_API double emdn_signal_energy(const emdn_signal* signal);

/* ------------------------------------------------------------------ */
/* WAV I/O (mono PCM16; multichannel input is averaged to mono)        */
/* ------------------------------------------------------------------ */

EMDN_API emdn_status emdn_wav_load(const char* path, emdn_signal** out);
EMDN_API emdn_status emdn_wav_save(const emdn_signal* signal,
                                   const char* path);

/* ------------------------------------------------------------------ */
/* Noise injection and SNR metrics                                     */
/* ------------------------------------------------------------------ */

/* White Gaussian noise scaled so the realized input SNR equals
 * target_snr_db exactly. noise_out may be NULL. */
EMDN_API emdn_status emdn_add_awgn(const emdn_signal* clean,
                                   double target_snr_db, uint64_t seed,
                                   emdn_signal** noisy_out,
                                   emdn_signal** noise_out);

/* 10*log10(E[reference] / E[reference - estimate]); +inf on zero error. */
EMDN_API emdn_status emdn_snr_db(const emdn_signal* reference,
                                 const emdn_signal* estimate, double* out);

/* 10*log10(E[denoised] / E[clean - denoised]): denoised energy in the
 * numerator. +inf on zero error, -inf on zero denoised energy. */
EMDN_API emdn_status emdn_snr_out_paper(const emdn_signal* clean,
                                        const emdn_signal* denoised,
                                        double* out);

/* ------------------------------------------------------------------ */
/* Empirical mode decomposition                                        */
/* ------------------------------------------------------------------ */

typedef enum emdn_boundary_policy {
  EMDN_BOUNDARY_MIRROR_EXTREMA = 0,
  EMDN_BOUNDARY_CLAMP_ENDPOINTS = 1
} emdn_boundary_policy;

typedef struct emdn_sift_config {
  double sd_threshold;      /* sifting stop: SD below this ends the sift */
  int max_sift_iterations;  /* hard cap per IMF */
  int max_imfs;             /* hard cap on extracted IMFs */
  int boundary_policy;      /* emdn_boundary_policy */
} emdn_sift_config;

/* Fills in the library defaults (0.3, 100, 20, mirror). */
EMDN_API void emdn_sift_config_init(emdn_sift_config* config);

typedef struct emdn_decomposition emdn_decomposition;

/* config may be NULL for defaults. */
EMDN_API emdn_status emdn_decompose(const emdn_signal* signal,
                                    const emdn_sift_config* config,
                                    emdn_decomposition** out);
EMDN_API void emdn_decomposition_free(emdn_decomposition* decomp);
EMDN_API size_t emdn_imf_count(const emdn_decomposition* decomp);
/* Copies IMF `index` (0-based) into a fresh signal handle. */
EMDN_API emdn_status emdn_imf(const emdn_decomposition* decomp, size_t index,
                              emdn_signal** out);
EMDN_API emdn_status emdn_residue(const emdn_decomposition* decomp,
                                  emdn_signal** out);
/* Sift iterations spent on IMF `index`; -1 if out of range. */
EMDN_API int emdn_sift_count(const emdn_decomposition* decomp, size_t index);

EMDN_API emdn_status emdn_count_extrema(const emdn_signal* signal,
                                        size_t* maxima_out,
                                        size_t* minima_out);

/* ------------------------------------------------------------------ */
/* Denoising                                                           */
/* ------------------------------------------------------------------ */

typedef enum emdn_method {
  EMDN_METHOD_PROPOSED = 0,            /* EMD + NormalShrink */
  EMDN_METHOD_EMD_UNIVERSAL_SOFT = 1,
  EMDN_METHOD_EMD_UNIVERSAL_HARD = 2,
  EMDN_METHOD_DWT_SOFT = 3,            /* Haar DWT, universal threshold */
  EMDN_METHOD_DWT_HARD = 4,
  EMDN_METHOD_WIENER = 5
} emdn_method;

/* Parses "proposed", "emd-universal-soft", "emd-universal-hard",
 * "dwt-soft", "dwt-hard", "wiener". */
EMDN_API emdn_status emdn_method_from_name(const char* name,
                                           emdn_method* out);
EMDN_API const char* emdn_method_name(emdn_method method);

typedef enum emdn_shrink_flavor {
  EMDN_SHRINK_SOFT = 0,
  EMDN_SHRINK_HARD = 1
} emdn_shrink_flavor;

typedef enum emdn_sigma_policy {
  EMDN_SIGMA_PER_IMF_MAD = 0,
  EMDN_SIGMA_GLOBAL_FIRST_IMF_MAD = 1,
  EMDN_SIGMA_KNOWN = 2
} emdn_sigma_policy;

typedef enum emdn_wiener_noise_policy {
  EMDN_WIENER_NOISE_ESTIMATE_FIRST_FRAMES = 0,
  EMDN_WIENER_NOISE_KNOWN = 1
} emdn_wiener_noise_policy;

typedef struct emdn_denoise_config {
  /* EMD methods */
  size_t frame_length;
  emdn_sift_config sift;
  int noise_sigma_policy; /* emdn_sigma_policy */
  double known_sigma;     /* used when policy is KNOWN */
  int unsquared_variance; /* nonzero: sigma_hat^2 -> sigma_hat in T */
  /* Wiener */
  size_t wiener_frame_length;     /* power of two */
  double wiener_overlap_fraction; /* in [0, 1) */
  int wiener_noise_policy;        /* emdn_wiener_noise_policy */
  double wiener_known_noise_power;
  size_t wiener_estimate_frames;
  /* DWT */
  size_t dwt_levels; /* 0 = automatic */
} emdn_denoise_config;

EMDN_API void emdn_denoise_config_init(emdn_denoise_config* config);

typedef struct emdn_denoise_result emdn_denoise_result;

/* config may be NULL for defaults. The soft/hard variant of each EMD
 * and DWT method is fixed by `method`, not by the config. */
EMDN_API emdn_status emdn_denoise(const emdn_signal* noisy,
                                  emdn_method method,
                                  const emdn_denoise_config* config,
                                  emdn_denoise_result** out);
EMDN_API void emdn_denoise_result_free(emdn_denoise_result* result);
EMDN_API emdn_status emdn_denoise_result_signal(
    const emdn_denoise_result* result, emdn_signal** out);

/* Frame-decision statistics. Zero for the DWT and Wiener methods,
 * which do not run the EMD frame pipeline. */
EMDN_API size_t emdn_denoise_result_imf_count(
    const emdn_denoise_result* result);
EMDN_API size_t emdn_denoise_result_frame_count(
    const emdn_denoise_result* result);
EMDN_API size_t emdn_denoise_result_signal_dominant_count(
    const emdn_denoise_result* result);
EMDN_API size_t emdn_denoise_result_universal_fallback_count(
    const emdn_denoise_result* result);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EMDNOISE_H_ */
