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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "bdht/dht.hpp"
#include "bdht/error.hpp"
#include "bdht/signals.hpp"
#include "oracle.hpp"

namespace bdht {
namespace {

constexpr double kThreshold = default_energy_threshold(64);

// `frames` frames of 64 samples, each holding 4 sine cycles.
Signal sine_cover(std::size_t frames, double amplitude = 0.5) {
  SignalSpec s;
  s.kind = SignalKind::kSine;
  s.n = 64 * frames;
  s.params.cycles = 4.0 * static_cast<double>(frames);
  s.params.amplitude = amplitude;
  return generate(s);
}

BitStream random_bits(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> b(n);
  for (auto& v : b) v = static_cast<std::uint8_t>(rng() & 1u);
  return BitStream(b);
}

TEST(Embed, AllZeroBitsLeaveCoverUntouched) {
  const Signal cover = sine_cover(8);
  const EmbedResult r = embed(cover, BitStream(std::vector<std::uint8_t>(8, 0)), {}, kThreshold);
  EXPECT_EQ(r.stego, cover);
  EXPECT_EQ(r.frames_used, 8u);
  EXPECT_TRUE(r.skipped_frames.empty());
}

TEST(Embed, SingleFrameBitOneIsTheDht) {
  const Signal cover = sine_cover(1);
  const EmbedResult r = embed(cover, BitStream({1}), {}, kThreshold);
  EXPECT_EQ(r.stego.samples().size(), 64u);
  EXPECT_EQ(std::vector<double>(r.stego.samples().begin(), r.stego.samples().end()),
            forward_dht(cover.samples()));
}

TEST(Embed, SkipsSilentFramesAndTrailingPartial) {
  std::vector<double> samples(64 * 3 + 10, 0.0);
  for (std::size_t i = 128; i < 192; ++i) samples[i] = std::sin(0.4 * static_cast<double>(i));
  for (std::size_t i = 0; i < 64; ++i) samples[i] = std::cos(0.3 * static_cast<double>(i));
  const Signal cover(samples);
  EXPECT_EQ(capacity(cover, {}, kThreshold), 2u);
  const EmbedResult r = embed(cover, BitStream({1, 1}), {}, kThreshold);
  EXPECT_EQ(r.skipped_frames, std::vector<std::size_t>{1});
  EXPECT_EQ(r.frames_used, 2u);
  for (std::size_t i = 64; i < 128; ++i) EXPECT_EQ(r.stego[i], 0.0);
  for (std::size_t i = 192; i < samples.size(); ++i) EXPECT_EQ(r.stego[i], 0.0);
  EXPECT_EQ(extract(r.stego, cover, {}, kThreshold), BitStream({1, 1}));
}

TEST(Embed, CapacityErrorWhenCoverTooShort) {
  const Signal cover = sine_cover(2);
  EXPECT_THROW(embed(cover, BitStream({0, 1, 0}), {}, kThreshold), CapacityError);
  EXPECT_THROW(embed(Signal::zeros(640), BitStream({1}), {}, kThreshold), CapacityError);
}

TEST(Embed, InvalidClock) {
  const Signal cover = sine_cover(2);
  EXPECT_THROW(embed(cover, BitStream({0}), FrameClock{4, 0}, kThreshold), std::invalid_argument);
  EXPECT_THROW(extract(cover, cover, FrameClock{7, 0}, kThreshold), std::invalid_argument);
}

TEST(Embed, OffsetShiftsFrames) {
  const Signal cover = sine_cover(4);
  const FrameClock clock{64, 10};
  EXPECT_EQ(capacity(cover, clock, kThreshold), 3u);
  const EmbedResult r = embed(cover, BitStream({1, 0, 1}), clock, kThreshold);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(r.stego[i], cover[i]);
  for (std::size_t i = 74; i < 138; ++i) EXPECT_EQ(r.stego[i], cover[i]);
  EXPECT_EQ(extract(r.stego, cover, clock, kThreshold), BitStream({1, 0, 1}));
}

TEST(Stego, SeededFortyEightBitRoundTrip) {
  std::mt19937_64 rng(101);
  const Signal cover = sine_cover(48);
  const BitStream bits = random_bits(48, rng);
  const EmbedResult r = embed(cover, bits, {}, kThreshold);
  EXPECT_EQ(r.frames_used, 48u);
  EXPECT_EQ(extract(r.stego, cover, {}, kThreshold), bits);
}

TEST(Stego, CoverPreservationAndDeterminism) {
  std::mt19937_64 rng(5);
  const Signal cover = sine_cover(16);
  const BitStream bits = random_bits(16, rng);
  const EmbedResult a = embed(cover, bits, {}, kThreshold);
  const EmbedResult b = embed(cover, bits, {}, kThreshold);
  EXPECT_EQ(a.stego, b.stego);
  for (std::size_t f = 0; f < 16; ++f) {
    if (bits[f] != 0) continue;
    for (std::size_t i = 64 * f; i < 64 * (f + 1); ++i) EXPECT_EQ(a.stego[i], cover[i]);
  }
}

TEST(Stego, RoundTripOnCatalogCovers) {
  std::mt19937_64 rng(77);
  for (const auto& spec : catalog_default_specs()) {
    const Signal cover = generate(spec);
    const std::size_t cap = capacity(cover, {}, kThreshold);
    ASSERT_GT(cap, 0u) << spec.label;
    for (int trial = 0; trial < 100; ++trial) {
      const BitStream bits = random_bits(cap, rng);
      const EmbedResult r = embed(cover, bits, {}, kThreshold);
      ASSERT_EQ(r.frames_used, cap);
      ASSERT_EQ(extract(r.stego, cover, {}, kThreshold), bits) << spec.label;
    }
  }
}

TEST(Stego, StegoEqualsCoverGivesZeros) {
  const Signal cover = sine_cover(5);
  EXPECT_EQ(extract(cover, cover, {}, kThreshold), BitStream(std::vector<std::uint8_t>(5, 0)));
  EXPECT_THROW(extract(sine_cover(4), cover, {}, kThreshold), std::invalid_argument);
}

TEST(Stego, FortyDecibelNoise) {
  std::mt19937_64 rng(4040);
  const Signal cover = sine_cover(48);
  double power = 0.0;
  for (double v : cover.samples()) power += v * v;
  power /= static_cast<double>(cover.size());
  // Uniform on [-a, a] has power a^2 / 3.
  const double a = std::sqrt(3.0 * power * 1e-4);
  std::uniform_real_distribution<double> noise(-a, a);
  std::size_t errors = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const BitStream bits = random_bits(48, rng);
    const EmbedResult r = embed(cover, bits, {}, kThreshold);
    std::vector<double> rx(r.stego.samples().begin(), r.stego.samples().end());
    for (auto& v : rx) v += noise(rng);
    const BitStream got = extract(Signal(rx), cover, {}, kThreshold);
    for (std::size_t i = 0; i < 48; ++i) errors += got[i] != bits[i];
  }
  EXPECT_EQ(errors, 0u);
}

TEST(Imperceptibility, IdenticalSignals) {
  const Signal cover = sine_cover(3);
  const auto rep = imperceptibility_report(cover, cover, {});
  ASSERT_EQ(rep.frames.size(), 3u);
  EXPECT_EQ(rep.max_peak_deviation, 0.0);
  EXPECT_EQ(rep.max_interior_deviation, 0.0);
}

TEST(Imperceptibility, SineFrameBitOne) {
  const Signal cover = sine_cover(1, 1.0);
  const EmbedResult r = embed(cover, BitStream({1}), {}, kThreshold);
  const auto rep = imperceptibility_report(cover, r.stego, {});
  ASSERT_EQ(rep.frames.size(), 1u);
  EXPECT_EQ(rep.frames[0].peak_bin, 4u);
  EXPECT_NEAR(rep.frames[0].peak_deviation, testing::kSineFramePeakDeviation, 1e-12);
  EXPECT_NEAR(rep.frames[0].max_interior_deviation, testing::kSineFrameInteriorDeviation, 1e-12);
}

TEST(Imperceptibility, ScaleInvariant) {
  std::mt19937_64 rng(8);
  const Signal cover = sine_cover(6, 1.0);
  const EmbedResult r = embed(cover, random_bits(6, rng), {}, kThreshold);
  const auto base = imperceptibility_report(cover, r.stego, {});
  for (double s : {0.01, 3.0, 1000.0}) {
    std::vector<double> c(cover.samples().begin(), cover.samples().end());
    std::vector<double> t(r.stego.samples().begin(), r.stego.samples().end());
    for (auto& v : c) v *= s;
    for (auto& v : t) v *= s;
    const auto scaled = imperceptibility_report(Signal(c), Signal(t), {});
    for (std::size_t f = 0; f < base.frames.size(); ++f) {
      EXPECT_NEAR(scaled.frames[f].peak_deviation, base.frames[f].peak_deviation, 1e-9);
      EXPECT_NEAR(scaled.frames[f].max_interior_deviation, base.frames[f].max_interior_deviation,
                  1e-9);
    }
  }
}

TEST(Bits, AsciiAndBytes) {
  const BitStream b = parse_bits_ascii("1 0\n1\r\n1\t0");
  EXPECT_EQ(b, BitStream({1, 0, 1, 1, 0}));
  EXPECT_EQ(format_bits_ascii(b), "1\n0\n1\n1\n0\n");
  try {
    parse_bits_ascii("01x");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  const BitStream bytes = bits_from_bytes(std::vector<std::uint8_t>{0xA5});
  EXPECT_EQ(bytes, BitStream({1, 0, 1, 0, 0, 1, 0, 1}));
  EXPECT_EQ(bits_to_bytes(bytes), std::vector<std::uint8_t>{0xA5});
  EXPECT_EQ(bits_to_bytes(BitStream({1, 1})), std::vector<std::uint8_t>{0xC0});
  EXPECT_THROW(BitStream({2}), std::invalid_argument);
  EXPECT_EQ(b.prefix(2), BitStream({1, 0}));
  EXPECT_EQ(b.prefix(99), b);
}

}  // namespace
}  // namespace bdht
