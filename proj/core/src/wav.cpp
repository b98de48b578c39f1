// Copyright 2026 The bdht Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bdht/wav.hpp"

#include <cmath>
#include <cstring>
#include <string>
#include <string_view>

#include "bdht/error.hpp"

namespace bdht {
namespace {

constexpr std::uint16_t kFormatPcm = 1;

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

bool tag_is(std::span<const std::uint8_t> b, std::size_t at, std::string_view tag) {
  return std::memcmp(b.data() + at, tag.data(), 4) == 0;
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

void put_tag(std::vector<std::uint8_t>& out, std::string_view tag) {
  out.insert(out.end(), tag.begin(), tag.end());
}

}  // namespace

WavAudio read_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12) throw FormatError("file too short for a RIFF header", bytes.size());
  if (!tag_is(bytes, 0, "RIFF")) throw FormatError("missing RIFF signature", 0);
  if (!tag_is(bytes, 8, "WAVE")) throw FormatError("RIFF form type is not WAVE", 8);

  WavAudio audio;
  bool have_fmt = false;
  bool have_data = false;
  std::size_t pos = 12;
  while (pos < bytes.size()) {
    if (bytes.size() - pos < 8) throw FormatError("truncated chunk header", pos);
    const std::uint32_t size = get_u32(bytes, pos + 4);
    const std::size_t body = pos + 8;
    const std::size_t remaining = bytes.size() - body;

    if (tag_is(bytes, pos, "fmt ")) {
      if (size < 16) throw FormatError("fmt chunk shorter than 16 bytes", pos + 4);
      if (size > remaining) throw FormatError("truncated fmt chunk", pos + 4);
      const std::uint16_t format = get_u16(bytes, body);
      const std::uint16_t channels = get_u16(bytes, body + 2);
      const std::uint16_t block_align = get_u16(bytes, body + 12);
      const std::uint16_t bits = get_u16(bytes, body + 14);
      if (format != kFormatPcm) {
        throw FormatError("unsupported audio format code " + std::to_string(format) +
                              " (only PCM = 1)",
                          body);
      }
      if (channels != 1) {
        throw FormatError("expected 1 channel, found " + std::to_string(channels), body + 2);
      }
      if (bits != 16) {
        throw FormatError("expected 16 bits per sample, found " + std::to_string(bits), body + 14);
      }
      if (block_align != 2) {
        throw FormatError("block align " + std::to_string(block_align) + " != 2", body + 12);
      }
      audio.sample_rate = get_u32(bytes, body + 4);
      have_fmt = true;
    } else if (tag_is(bytes, pos, "data")) {
      if (!have_fmt) throw FormatError("data chunk before fmt chunk", pos);
      if (have_data) throw FormatError("more than one data chunk", pos);
      if (size > remaining) {
        throw FormatError("truncated data chunk: header declares " + std::to_string(size) +
                              " bytes, " + std::to_string(remaining) + " present",
                          pos + 4);
      }
      if (size % 2 != 0) throw FormatError("data chunk holds a partial sample", pos + 4);
      audio.samples.resize(size / 2);
      for (std::size_t i = 0; i < audio.samples.size(); ++i) {
        audio.samples[i] = static_cast<std::int16_t>(get_u16(bytes, body + 2 * i));
      }
      have_data = true;
    } else if (size > remaining) {
      throw FormatError("truncated chunk", pos + 4);
    }

    // Chunks are word aligned; a missing final pad byte is tolerated.
    pos = body + size + (size & 1u);
  }
  if (!have_fmt) throw FormatError("no fmt chunk", bytes.size());
  if (!have_data) throw FormatError("no data chunk", bytes.size());
  return audio;
}

std::vector<std::uint8_t> write_wav(const WavAudio& audio) {
  const auto data_bytes = static_cast<std::uint32_t>(audio.samples.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);  // channels
  put_u32(out, audio.sample_rate);
  put_u32(out, audio.sample_rate * 2);  // byte rate
  put_u16(out, 2);                      // block align
  put_u16(out, 16);
  put_tag(out, "data");
  put_u32(out, data_bytes);
  for (std::int16_t s : audio.samples) put_u16(out, static_cast<std::uint16_t>(s));
  return out;
}

Signal to_signal(const WavAudio& audio) {
  std::vector<double> samples(audio.samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = audio.samples[i] / 32768.0;
  return Signal(std::move(samples), "wav");
}

WavConversion from_signal(std::span<const double> samples, std::uint32_t sample_rate) {
  require_valid_samples(samples, "from_signal");
  WavConversion conv;
  conv.audio.sample_rate = sample_rate;
  conv.audio.samples.reserve(samples.size());
  for (double v : samples) {
    double scaled = std::round(v * 32768.0);  // half away from zero
    if (scaled > 32767.0) {
      scaled = 32767.0;
      ++conv.clamped;
    } else if (scaled < -32768.0) {
      scaled = -32768.0;
      ++conv.clamped;
    }
    conv.audio.samples.push_back(static_cast<std::int16_t>(scaled));
  }
  return conv;
}

}  // namespace bdht
