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

// Mono 16-bit PCM WAV. The reader walks the RIFF chunk list and skips
// anything other than `fmt ` and `data`; the writer always emits the
// canonical 44-byte header followed by the samples.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bdht/signal.hpp"

namespace bdht {

struct WavAudio {
  std::uint32_t sample_rate = 8000;
  std::vector<std::int16_t> samples;

  friend bool operator==(const WavAudio&, const WavAudio&) = default;
};

/// Throws FormatError for anything but a mono PCM16 RIFF/WAVE file.
WavAudio read_wav(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_wav(const WavAudio& audio);

/// sample / 32768.
Signal to_signal(const WavAudio& audio);

struct WavConversion {
  WavAudio audio;
  std::size_t clamped = 0;  // samples that fell outside [-32768, 32767]
};

/// round_half_away(v * 32768), saturated to the int16 range.
WavConversion from_signal(std::span<const double> samples, std::uint32_t sample_rate);

}  // namespace bdht
