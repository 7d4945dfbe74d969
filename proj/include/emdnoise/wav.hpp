// include/emdnoise/wav.hpp

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

// PCM16 RIFF/WAVE reader and writer. Mono only; multichannel inputs are
// averaged down. Unknown chunks (LIST, fact, ...) are skipped. Malformed
// input raises WavFormatError with the offending byte offset -- never a
// crash, whatever the bytes.

#ifndef EMDNOISE_WAV_HPP_
#define EMDNOISE_WAV_HPP_

#include <cstdint>
#include <span>
#include <string>

#include "emdnoise/signal.hpp"

namespace emdnoise {

struct AudioFile {
  Signal signal;  // samples in [-1, 1], PCM16 divided by 32768
  std::string source_path;
  int source_channels = 1;  // channel count before the mono downmix
};

// Parses an in-memory RIFF/WAVE image. Exposed separately from
// load_wav so malformed inputs can be exercised without touching disk.
AudioFile parse_wav(std::span<const std::uint8_t> bytes,
                    const std::string& source_path = "");

AudioFile load_wav(const std::string& path);

// Clamps to [-1, 1], quantizes with round(x * 32768) held to the int16
// range, and writes mono PCM16 with a canonical 44-byte header. The
// load(save(x)) round trip is within one quantization step per sample.
void save_wav(const Signal& signal, const std::string& path);

}  // namespace emdnoise

#endif  // EMDNOISE_WAV_HPP_
