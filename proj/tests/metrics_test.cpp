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

#include "bdht/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "bdht/dht.hpp"
#include "bdht/signals.hpp"
#include "oracle.hpp"

namespace bdht {
namespace {

ErrorReport report_of(std::vector<double> per_sample) {
  ErrorReport r;
  r.per_sample = std::move(per_sample);
  std::size_t best = 0;
  for (std::size_t i = 1; i < r.per_sample.size(); ++i) {
    if (r.per_sample[i] > r.per_sample[best]) best = i;
  }
  r.argmax_index = best;
  return r;
}

TEST(ErrorReport, IdenticalInputs) {
  const std::vector<double> f{1.0, -2.0, 3.0};
  const ErrorReport r = error_report(f, f);
  EXPECT_EQ(r.per_sample, (std::vector<double>{0, 0, 0}));
  EXPECT_EQ(r.average_sq_error, 0.0);
  EXPECT_EQ(r.rms, 0.0);
  EXPECT_EQ(r.argmax_index, 0u);
}

TEST(ErrorReport, TwoPointHandCase) {
  const double d = 4.0 / (std::numbers::pi * std::numbers::pi);
  const ErrorReport r = error_report(std::vector<double>{1.0, 0.0}, std::vector<double>{d, 0.0});
  EXPECT_NEAR(r.average_sq_error, (1 - d) * (1 - d) / 2, 1e-16);
  EXPECT_NEAR(r.average_sq_error, 0.1768431234681236, 1e-15);
  EXPECT_NEAR(r.rms, std::sqrt(r.average_sq_error), 1e-16);
  EXPECT_EQ(r.argmax_index, 0u);
}

TEST(ErrorReport, TiesGoToLowestIndex) {
  const ErrorReport r = error_report(std::vector<double>{0, 1, 0, -1}, std::vector<double>{0, 0, 0, 0});
  EXPECT_EQ(r.argmax_index, 1u);
}

TEST(ErrorReport, LengthMismatch) {
  EXPECT_THROW(error_report(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}),
               std::invalid_argument);
}

TEST(ErrorReport, GuardedSineIsSmaller) {
  const auto specs = catalog_default_specs();
  const Signal plain = generate(specs[0]);
  const Signal guarded = generate(specs[1]);
  const double e0 = error_report(plain, round_trip(plain)).average_sq_error;
  const double e1 = error_report(guarded, round_trip(guarded)).average_sq_error;
  EXPECT_LT(e1, e0);
}

TEST(ErrorReport, SymmetryAndScaling) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 100;
    const auto a = testing::random_samples(n, rng);
    const auto b = testing::random_samples(n, rng);
    const ErrorReport ab = error_report(a, b);
    const ErrorReport ba = error_report(b, a);
    EXPECT_EQ(ab.per_sample, ba.per_sample);
    EXPECT_EQ(ab.average_sq_error, ba.average_sq_error);

    const double s = 0.1 + 5.0 * std::uniform_real_distribution<double>(0, 1)(rng);
    auto sa = a;
    auto sb = b;
    for (auto& v : sa) v *= s;
    for (auto& v : sb) v *= s;
    const double scaled = error_report(sa, sb).average_sq_error;
    EXPECT_NEAR(scaled, s * s * ab.average_sq_error, 1e-12 * scaled);
    for (double v : ab.per_sample) EXPECT_GE(v, 0.0);
    EXPECT_GE(ab.per_sample[ab.argmax_index], ab.per_sample[0]);
  }
}

TEST(BoundaryConcentration, Examples) {
  EXPECT_TRUE(boundary_concentration(report_of({9, 1, 1, 1}), 0.25));
  EXPECT_FALSE(boundary_concentration(report_of({1, 9, 1, 1}), 0.25));
  EXPECT_TRUE(boundary_concentration(report_of({1, 1, 1, 9}), 0.25));
  // ceil(0.1 * 11) = 2 samples at each edge.
  EXPECT_TRUE(boundary_concentration(report_of({0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}), 0.1));
  EXPECT_FALSE(boundary_concentration(report_of({0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}), 0.1));
}

TEST(BoundaryConcentration, RejectsBadFraction) {
  EXPECT_THROW(boundary_concentration(report_of({1, 2}), 0.0), std::invalid_argument);
  EXPECT_THROW(boundary_concentration(report_of({1, 2}), 0.6), std::invalid_argument);
}

TEST(BoundaryConcentration, SineRoundTrip) {
  SignalSpec s;
  s.kind = SignalKind::kSine;
  const Signal f = generate(s);
  const ErrorReport r = error_report(f, round_trip(f));
  EXPECT_TRUE(boundary_concentration(r, 0.1));
  EXPECT_EQ(r.argmax_index, 255u);
}

TEST(MagnitudeSpectrum, Examples) {
  const auto dc = magnitude_spectrum(std::vector<double>{1, 1, 1, 1});
  EXPECT_NEAR(dc[0], 4.0, 1e-14);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(dc[k], 0.0, 1e-14);
  const auto flat = magnitude_spectrum(std::vector<double>{1, 0, 0, 0});
  for (double v : flat) EXPECT_NEAR(v, 1.0, 1e-15);
}

TEST(MagnitudeSpectrum, MatchesReferenceAndParseval) {
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 128; n += 7) {
    const auto f = testing::random_samples(n, rng);
    const auto mag = magnitude_spectrum(f);
    EXPECT_LE(testing::max_abs_diff(mag, testing::reference_dft_magnitude(f)), 1e-10);
    double lhs = 0.0;
    double rhs = 0.0;
    for (double v : mag) lhs += v * v;
    for (double v : f) rhs += v * v;
    rhs *= static_cast<double>(n);
    EXPECT_NEAR(lhs, rhs, 1e-9 * rhs);
  }
}

TEST(MagnitudeSpectrum, SineFrameVersusItsDht) {
  SignalSpec s;
  s.kind = SignalKind::kSine;
  s.n = 64;
  const Signal f = generate(s);
  const auto cover = magnitude_spectrum(f.samples());
  const auto dht = magnitude_spectrum(forward_dht(f.samples()));
  const double peak = cover[4];
  double worst = 0.0;
  for (std::size_t k = 1; k < 32; ++k) worst = std::max(worst, std::abs(dht[k] - cover[k]) / peak);
  EXPECT_NEAR(std::abs(dht[4] - cover[4]) / peak, testing::kSineFramePeakDeviation, 1e-12);
  EXPECT_NEAR(worst, testing::kSineFrameInteriorDeviation, 1e-12);
}

TEST(ErrorCsv, Format) {
  std::ostringstream os;
  write_error_csv(os, error_report(std::vector<double>{1.0, 0.0}, std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(os.str(),
            "index,squared_error\n0,1\n1,0\naverage_sq_error,0.5\nrms,0.70710678118654757\n");
}

}  // namespace
}  // namespace bdht
