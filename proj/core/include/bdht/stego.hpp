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

// Frame-switching information hiding.
//
// The cover is cut into consecutive frames by a clock shared between
// sender and receiver. Each eligible frame carries one bit: 0 sends the
// frame as is, 1 sends its forward DHT. The receiver holds the cover and
// decides per frame which of the two candidates the received frame is
// closer to.
//
// A frame is eligible when its energy sum(x^2) reaches the threshold and
// its DHT differs from it by more than 1e-12 somewhere. Only whole frames
// starting at `offset` are used; the trailing partial frame never carries
// data.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bdht/signal.hpp"

namespace bdht {

struct FrameClock {
  std::size_t frame_len = 64;
  std::size_t offset = 0;
};

constexpr std::size_t kMinFrameLen = 8;

/// Default energy threshold for a frame of `frame_len` samples.
constexpr double default_energy_threshold(std::size_t frame_len) {
  return 1e-6 * static_cast<double>(frame_len);
}

/// Throws std::invalid_argument when frame_len < 8.
void validate(const FrameClock& clock);

/// Ordered message bits, each 0 or 1.
class BitStream {
 public:
  BitStream() = default;
  /// Throws std::invalid_argument for values other than 0 and 1.
  explicit BitStream(std::vector<std::uint8_t> bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  /// First `n` bits (all of them when n >= size()).
  BitStream prefix(std::size_t n) const;

  friend bool operator==(const BitStream&, const BitStream&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// One '0'/'1' character per bit; whitespace (including newlines) is
/// ignored. Throws FormatError on any other character.
BitStream parse_bits_ascii(std::string_view text);
/// One bit per line.
std::string format_bits_ascii(const BitStream& bits);

/// MSB-first byte packing. Packing pads the final byte with zero bits.
BitStream bits_from_bytes(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> bits_to_bytes(const BitStream& bits);

struct EmbedResult {
  Signal stego;
  std::size_t frames_used = 0;
  std::vector<std::size_t> skipped_frames;  // ineligible whole frames, anywhere in the cover
};

/// Number of eligible frames in `cover`.
std::size_t capacity(const Signal& cover, const FrameClock& clock, double energy_threshold);

/// Bit i goes into the i-th eligible frame. Frames past the last bit are
/// copied unchanged. Throws CapacityError when the cover has fewer eligible
/// frames than bits.
EmbedResult embed(const Signal& cover, const BitStream& bits, const FrameClock& clock,
                  double energy_threshold);

/// One bit per eligible frame of the cover, in frame order. With
/// d0 = |stego - cover|^2 and d1 = |stego - dht(cover)|^2 over the frame,
/// the bit is 1 iff d1 < d0.
BitStream extract(const Signal& stego, const Signal& cover, const FrameClock& clock,
                  double energy_threshold);

struct FrameDeviation {
  std::size_t frame = 0;
  std::size_t peak_bin = 0;  // largest cover bin among 1..L/2-1
  /// ||S| - |C|| / |C| at peak_bin.
  double peak_deviation = 0.0;
  /// max over bins 1..L/2-1 of ||S_k| - |C_k|| / |C_peak|.
  double max_interior_deviation = 0.0;
};

struct ImperceptibilityReport {
  std::vector<FrameDeviation> frames;
  double max_peak_deviation = 0.0;
  double max_interior_deviation = 0.0;
};

/// Compares magnitude spectra frame by frame. Both deviations are ratios
/// of magnitudes, so scaling cover and stego together leaves them
/// unchanged. Frames whose cover spectrum is zero on the interior bins
/// report 0 when the stego frame is identical and infinity otherwise.
ImperceptibilityReport imperceptibility_report(const Signal& cover, const Signal& stego,
                                               const FrameClock& clock);

}  // namespace bdht
