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

#include "bdht/stego.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bdht/dht.hpp"
#include "bdht/error.hpp"
#include "bdht/metrics.hpp"

namespace bdht {
namespace {

constexpr double kDistinctTolerance = 1e-12;

std::size_t whole_frames(std::size_t length, const FrameClock& clock) {
  if (clock.offset >= length) return 0;
  return (length - clock.offset) / clock.frame_len;
}

std::span<const double> frame_of(std::span<const double> s, const FrameClock& clock,
                                 std::size_t i) {
  return s.subspan(clock.offset + i * clock.frame_len, clock.frame_len);
}

double energy(std::span<const double> x) {
  double e = 0.0;
  for (double v : x) e += v * v;
  return e;
}

double sq_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = a[i] - b[i];
    d += t * t;
  }
  return d;
}

// Energy gate plus the undecodable-frame check. `transformed` receives the
// frame's DHT.
bool eligible(std::span<const double> frame, double threshold, std::vector<double>& transformed) {
  if (energy(frame) < threshold) return false;
  transformed.resize(frame.size());
  forward_dht(frame, transformed);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (std::abs(transformed[i] - frame[i]) > kDistinctTolerance) return true;
  }
  return false;
}

void require_same_length(const Signal& a, const Signal& b, const char* what) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(what) + ": length mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

void validate(const FrameClock& clock) {
  if (clock.frame_len < kMinFrameLen) {
    throw std::invalid_argument("frame clock: frame_len must be >= " +
                                std::to_string(kMinFrameLen) + ", got " +
                                std::to_string(clock.frame_len));
  }
}

BitStream::BitStream(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) {
      throw std::invalid_argument("BitStream: value " + std::to_string(bits_[i]) +
                                  " at position " + std::to_string(i) + " is not a bit");
    }
  }
}

BitStream BitStream::prefix(std::size_t n) const {
  const std::size_t m = std::min(n, bits_.size());
  return BitStream(std::vector<std::uint8_t>(bits_.begin(),
                                             bits_.begin() + static_cast<std::ptrdiff_t>(m)));
}

BitStream parse_bits_ascii(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
      throw FormatError(std::string("invalid bit character '") + c + "'", i);
    }
  }
  return BitStream(std::move(bits));
}

std::string format_bits_ascii(const BitStream& bits) {
  std::string out;
  out.reserve(bits.size() * 2);
  for (std::uint8_t b : bits.bits()) {
    out += static_cast<char>('0' + b);
    out += '\n';
  }
  return out;
}

BitStream bits_from_bytes(std::span<const std::uint8_t> bytes) {
  std::vector<std::uint8_t> bits;
  bits.reserve(bytes.size() * 8);
  for (std::uint8_t byte : bytes) {
    for (int shift = 7; shift >= 0; --shift) bits.push_back((byte >> shift) & 1u);
  }
  return BitStream(std::move(bits));
}

std::vector<std::uint8_t> bits_to_bytes(const BitStream& bits) {
  std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return out;
}

std::size_t capacity(const Signal& cover, const FrameClock& clock, double energy_threshold) {
  validate(clock);
  std::vector<double> scratch;
  std::size_t count = 0;
  const std::size_t frames = whole_frames(cover.size(), clock);
  for (std::size_t i = 0; i < frames; ++i) {
    if (eligible(frame_of(cover.samples(), clock, i), energy_threshold, scratch)) ++count;
  }
  return count;
}

EmbedResult embed(const Signal& cover, const BitStream& bits, const FrameClock& clock,
                  double energy_threshold) {
  validate(clock);
  std::vector<double> out(cover.samples().begin(), cover.samples().end());
  std::vector<double> transformed;
  std::vector<std::size_t> skipped;
  std::size_t next_bit = 0;
  const std::size_t frames = whole_frames(cover.size(), clock);
  for (std::size_t i = 0; i < frames; ++i) {
    const auto frame = frame_of(cover.samples(), clock, i);
    if (!eligible(frame, energy_threshold, transformed)) {
      skipped.push_back(i);
      continue;
    }
    if (next_bit == bits.size()) continue;
    if (bits[next_bit] == 1) {
      std::copy(transformed.begin(), transformed.end(),
                out.begin() + static_cast<std::ptrdiff_t>(clock.offset + i * clock.frame_len));
    }
    ++next_bit;
  }
  if (next_bit < bits.size()) {
    throw CapacityError("cover holds " + std::to_string(next_bit) + " eligible frames, message has " +
                        std::to_string(bits.size()) + " bits");
  }
  return EmbedResult{Signal(std::move(out), cover.label()), next_bit, std::move(skipped)};
}

BitStream extract(const Signal& stego, const Signal& cover, const FrameClock& clock,
                  double energy_threshold) {
  validate(clock);
  require_same_length(stego, cover, "extract");
  std::vector<std::uint8_t> bits;
  std::vector<double> transformed;
  const std::size_t frames = whole_frames(cover.size(), clock);
  for (std::size_t i = 0; i < frames; ++i) {
    const auto cover_frame = frame_of(cover.samples(), clock, i);
    if (!eligible(cover_frame, energy_threshold, transformed)) continue;
    const auto received = frame_of(stego.samples(), clock, i);
    const double d0 = sq_distance(received, cover_frame);
    const double d1 = sq_distance(received, transformed);
    bits.push_back(d1 < d0 ? 1 : 0);
  }
  return BitStream(std::move(bits));
}

ImperceptibilityReport imperceptibility_report(const Signal& cover, const Signal& stego,
                                               const FrameClock& clock) {
  validate(clock);
  require_same_length(stego, cover, "imperceptibility_report");
  ImperceptibilityReport report;
  const std::size_t half = clock.frame_len / 2;
  const std::size_t frames = whole_frames(cover.size(), clock);
  for (std::size_t i = 0; i < frames; ++i) {
    const auto c = magnitude_spectrum(frame_of(cover.samples(), clock, i));
    const auto s = magnitude_spectrum(frame_of(stego.samples(), clock, i));
    FrameDeviation dev;
    dev.frame = i;
    dev.peak_bin = 1;
    for (std::size_t k = 1; k < half; ++k) {
      if (c[k] > c[dev.peak_bin]) dev.peak_bin = k;
    }
    const double peak = c[dev.peak_bin];
    double worst_abs = 0.0;
    for (std::size_t k = 1; k < half; ++k) worst_abs = std::max(worst_abs, std::abs(s[k] - c[k]));
    if (peak > 0.0) {
      dev.peak_deviation = std::abs(s[dev.peak_bin] - peak) / peak;
      dev.max_interior_deviation = worst_abs / peak;
    } else {
      const double inf = std::numeric_limits<double>::infinity();
      dev.peak_deviation = s[dev.peak_bin] == 0.0 ? 0.0 : inf;
      dev.max_interior_deviation = worst_abs == 0.0 ? 0.0 : inf;
    }
    report.max_peak_deviation = std::max(report.max_peak_deviation, dev.peak_deviation);
    report.max_interior_deviation =
        std::max(report.max_interior_deviation, dev.max_interior_deviation);
    report.frames.push_back(dev);
  }
  return report;
}

}  // namespace bdht
