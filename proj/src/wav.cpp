// src/wav.cpp

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

#include "emdnoise/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "emdnoise/errors.hpp"

namespace emdnoise {

namespace {

std::uint32_t read_u32(std::span<const std::uint8_t> bytes, std::size_t off) {
  return static_cast<std::uint32_t>(bytes[off]) |
         static_cast<std::uint32_t>(bytes[off + 1]) << 8 |
         static_cast<std::uint32_t>(bytes[off + 2]) << 16 |
         static_cast<std::uint32_t>(bytes[off + 3]) << 24;
}

std::uint16_t read_u16(std::span<const std::uint8_t> bytes, std::size_t off) {
  return static_cast<std::uint16_t>(
      bytes[off] | static_cast<std::uint16_t>(bytes[off + 1]) << 8);
}

bool tag_is(std::span<const std::uint8_t> bytes, std::size_t off,
            const char* tag) {
  return std::memcmp(bytes.data() + off, tag, 4) == 0;
}

struct FmtChunk {
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
};

}  // namespace

AudioFile parse_wav(std::span<const std::uint8_t> bytes,
                    const std::string& source_path) {
  if (bytes.size() < 12)
    throw WavFormatError("file too short for a RIFF header", bytes.size());
  if (!tag_is(bytes, 0, "RIFF"))
    throw WavFormatError("missing RIFF magic", 0);
  if (!tag_is(bytes, 8, "WAVE"))
    throw WavFormatError("missing WAVE form type", 8);

  FmtChunk fmt;
  bool have_fmt = false;
  bool have_data = false;
  std::span<const std::uint8_t> data;

  std::size_t off = 12;
  while (off < bytes.size()) {
    if (bytes.size() - off < 8)
      throw WavFormatError("truncated chunk header", off);
    const std::size_t chunk_size = read_u32(bytes, off + 4);
    const std::size_t body = off + 8;
    if (chunk_size > bytes.size() - body)
      throw WavFormatError("chunk extends past end of file", off + 4);

    if (tag_is(bytes, off, "fmt ")) {
      if (chunk_size < 16)
        throw WavFormatError("fmt chunk too small", off + 4);
      const std::uint16_t audio_format = read_u16(bytes, body);
      if (audio_format != 1)  // PCM
        throw WavFormatError("unsupported encoding (PCM16 only)", body);
      fmt.channels = read_u16(bytes, body + 2);
      if (fmt.channels == 0)
        throw WavFormatError("zero channels", body + 2);
      fmt.sample_rate = read_u32(bytes, body + 4);
      if (fmt.sample_rate == 0)
        throw WavFormatError("zero sample rate", body + 4);
      const std::uint16_t bits = read_u16(bytes, body + 14);
      if (bits != 16)
        throw WavFormatError("unsupported bit depth (PCM16 only)", body + 14);
      have_fmt = true;
    } else if (tag_is(bytes, off, "data")) {
      if (!have_fmt)
        throw WavFormatError("data chunk before fmt chunk", off);
      data = bytes.subspan(body, chunk_size);
      have_data = true;
      // first data chunk wins; anything after it is ignored
      break;
    }
    // LIST, fact and other chunks are skipped. Chunk bodies are padded
    // to even length.
    off = body + chunk_size + (chunk_size & 1);
  }

  if (!have_fmt) throw WavFormatError("missing fmt chunk", bytes.size());
  if (!have_data) throw WavFormatError("missing data chunk", bytes.size());

  const std::size_t frame_bytes = 2u * fmt.channels;
  if (data.size() % frame_bytes != 0)
    throw WavFormatError("data size is not a whole number of sample frames",
                         bytes.size() - data.size() - 4);
  const std::size_t num_frames = data.size() / frame_bytes;
  if (num_frames == 0)
    throw WavFormatError("empty data chunk", bytes.size() - data.size() - 4);

  AudioFile out;
  out.source_path = source_path;
  out.source_channels = fmt.channels;
  out.signal.sample_rate_hz = static_cast<int>(fmt.sample_rate);
  out.signal.samples.resize(num_frames);
  for (std::size_t i = 0; i < num_frames; ++i) {
    double sum = 0.0;
    for (std::uint16_t c = 0; c < fmt.channels; ++c) {
      const std::size_t at = i * frame_bytes + 2u * c;
      const auto sample = static_cast<std::int16_t>(read_u16(data, at));
      sum += static_cast<double>(sample);
    }
    out.signal.samples[i] = sum / fmt.channels / 32768.0;
  }
  return out;
}

AudioFile load_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("read error: " + path);
  return parse_wav(bytes, path);
}

void save_wav(const Signal& signal, const std::string& path) {
  if (signal.samples.empty()) throw std::invalid_argument("empty signal");
  if (signal.sample_rate_hz <= 0)
    throw std::invalid_argument("sample rate must be positive");

  const std::uint32_t data_size =
      static_cast<std::uint32_t>(signal.samples.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_size);

  auto push_tag = [&out](const char* tag) {
    out.insert(out.end(), tag, tag + 4);
  };
  auto push_u32 = [&out](std::uint32_t v) {
    out.push_back(v & 0xff);
    out.push_back((v >> 8) & 0xff);
    out.push_back((v >> 16) & 0xff);
    out.push_back((v >> 24) & 0xff);
  };
  auto push_u16 = [&out](std::uint16_t v) {
    out.push_back(v & 0xff);
    out.push_back((v >> 8) & 0xff);
  };

  const auto rate = static_cast<std::uint32_t>(signal.sample_rate_hz);
  push_tag("RIFF");
  push_u32(36 + data_size);
  push_tag("WAVE");
  push_tag("fmt ");
  push_u32(16);
  push_u16(1);  // PCM
  push_u16(1);  // mono
  push_u32(rate);
  push_u32(rate * 2);  // byte rate
  push_u16(2);         // block align
  push_u16(16);        // bits per sample
  push_tag("data");
  push_u32(data_size);

  for (double x : signal.samples) {
    const double clamped = std::clamp(x, -1.0, 1.0);
    const long q = std::lround(clamped * 32768.0);
    const auto pcm = static_cast<std::int16_t>(
        std::clamp<long>(q, -32768, 32767));
    push_u16(static_cast<std::uint16_t>(pcm));
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open for writing: " + path);
  file.write(reinterpret_cast<const char*>(out.data()),
             static_cast<std::streamsize>(out.size()));
  if (!file) throw std::runtime_error("write error: " + path);
}

}  // namespace emdnoise
