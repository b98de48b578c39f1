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

#include "bdht/signals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace bdht {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPoleDistance = 1e-6;

struct KindName {
  SignalKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 13> kKindNames{{
    {SignalKind::kSine, "sine"},
    {SignalKind::kCosine, "cosine"},
    {SignalKind::kTangent, "tangent"},
    {SignalKind::kOnOff, "on_off"},
    {SignalKind::kTriangular, "triangular"},
    {SignalKind::kSawtooth, "sawtooth"},
    {SignalKind::kGaussSinusoid, "gauss_sinusoid"},
    {SignalKind::kDirichlet, "dirichlet"},
    {SignalKind::kPulseTrain, "pulse_train"},
    {SignalKind::kChirp, "chirp"},
    {SignalKind::kConstant, "constant"},
    {SignalKind::kDelta, "delta"},
    {SignalKind::kUniformRandom, "uniform_random"},
}};

constexpr std::array<SignalKind, 13> kAllKinds = [] {
  std::array<SignalKind, 13> out{};
  for (std::size_t i = 0; i < kKindNames.size(); ++i) out[i] = kKindNames[i].kind;
  return out;
}();

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument("signal spec: " + msg);
}

// Position of sample k on a closed interval [lo, hi] spanned by n samples.
double linspace(double lo, double hi, std::size_t k, std::size_t n) {
  if (n == 1) return lo;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}

double dirichlet_kernel(double x, int order) {
  const double half = 0.5 * x;
  const double s = std::sin(half);
  if (std::abs(s) < 1e-12) {
    // Limit at x = 2 pi m.
    return std::cos(order * half) / std::cos(half);
  }
  return std::sin(order * half) / (order * s);
}

double tangent_sample(double x, const SignalParams& p) {
  // Distance from the nearest pole pi/2 + m pi.
  const double pole_gap = std::abs(std::remainder(x - 0.5 * std::numbers::pi, std::numbers::pi));
  if (p.clip > 0.0) {
    if (pole_gap < kPoleDistance) return std::copysign(p.clip, std::tan(x));
    return std::clamp(std::tan(x), -p.clip, p.clip);
  }
  if (pole_gap < kPoleDistance) {
    throw std::invalid_argument("signal spec: tangent sample at x=" + std::to_string(x) +
                                " lies within 1e-6 of a pole; set a clip bound");
  }
  return std::tan(x);
}

double sample_at(const SignalSpec& spec, std::size_t k, std::mt19937_64& rng) {
  const SignalParams& p = spec.params;
  const double n = static_cast<double>(spec.n);
  const double t = static_cast<double>(k);
  switch (spec.kind) {
    case SignalKind::kSine:
      return p.amplitude * std::sin(kTwoPi * p.cycles * t / n);
    case SignalKind::kCosine:
      return p.amplitude * std::cos(kTwoPi * p.cycles * t / n);
    case SignalKind::kTangent:
      return p.amplitude * tangent_sample(linspace(p.tan_start, p.tan_end, k, spec.n), p);
    case SignalKind::kOnOff:
      return std::fmod(t, p.period) < p.duty * p.period ? p.amplitude : 0.0;
    case SignalKind::kTriangular: {
      if (spec.n == 1) return 0.0;
      const double u = 2.0 * t / (n - 1.0) - 1.0;
      return p.amplitude * (1.0 - std::abs(u));
    }
    case SignalKind::kSawtooth:
      return p.amplitude * (2.0 * std::fmod(t, p.period) / p.period - 1.0);
    case SignalKind::kGaussSinusoid: {
      const double sigma = p.sigma > 0.0 ? p.sigma : n / 8.0;
      const double d = t - 0.5 * (n - 1.0);
      return p.amplitude * std::sin(kTwoPi * p.cycles * t / n) *
             std::exp(-d * d / (2.0 * sigma * sigma));
    }
    case SignalKind::kDirichlet:
      return p.amplitude *
             dirichlet_kernel(linspace(-kTwoPi, kTwoPi, k, spec.n), p.dirichlet_order);
    case SignalKind::kPulseTrain:
      return std::fmod(t, p.period) < p.pulse_width ? p.amplitude : 0.0;
    case SignalKind::kChirp: {
      // Linear sweep f0 -> f1 over the record, cosine phase at t = 0.
      const double u = t / n;
      return p.amplitude * std::cos(kTwoPi * (p.f0 * u + 0.5 * (p.f1 - p.f0) * u * u));
    }
    case SignalKind::kConstant:
      return p.value;
    case SignalKind::kDelta:
      return k == p.delta_index ? p.amplitude : 0.0;
    case SignalKind::kUniformRandom: {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      return p.amplitude * (2.0 * u - 1.0);
    }
  }
  throw std::invalid_argument("signal spec: unknown kind");
}

SignalSpec catalog_entry(std::string label, SignalKind kind, bool guarded) {
  SignalSpec spec;
  spec.kind = kind;
  spec.n = 256;
  spec.label = std::move(label);
  if (guarded) spec.guard = GuardBand{spec.n / 16, spec.n / 16};
  return spec;
}

}  // namespace

std::string_view to_string(SignalKind kind) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "unknown";
}

std::optional<SignalKind> parse_signal_kind(std::string_view name) {
  for (const auto& kn : kKindNames) {
    if (kn.name == name) return kn.kind;
  }
  return std::nullopt;
}

std::span<const SignalKind> all_signal_kinds() { return kAllKinds; }

void validate(const SignalSpec& spec) {
  const SignalParams& p = spec.params;
  require(spec.n >= 1, "n must be >= 1");
  for (double v : {p.amplitude, p.cycles, p.f0, p.f1, p.period, p.duty, p.pulse_width, p.sigma,
                   p.tan_start, p.tan_end, p.clip, p.value}) {
    require(std::isfinite(v), "parameters must be finite");
  }
  require(spec.guard.front + spec.guard.back < spec.n,
          "guard.front + guard.back must be < n (" + std::to_string(spec.guard.front) + " + " +
              std::to_string(spec.guard.back) + " vs n=" + std::to_string(spec.n) + ")");
  switch (spec.kind) {
    case SignalKind::kOnOff:
      require(p.period > 0.0, "period must be > 0");
      require(p.duty >= 0.0 && p.duty <= 1.0, "duty must lie in [0, 1]");
      break;
    case SignalKind::kSawtooth:
      require(p.period > 0.0, "period must be > 0");
      break;
    case SignalKind::kPulseTrain:
      require(p.period > 0.0, "period must be > 0");
      require(p.pulse_width >= 0.0, "pulse_width must be >= 0");
      break;
    case SignalKind::kGaussSinusoid:
      require(p.sigma >= 0.0, "sigma must be >= 0");
      break;
    case SignalKind::kDirichlet:
      require(p.dirichlet_order >= 1, "dirichlet_order must be >= 1");
      break;
    case SignalKind::kTangent:
      require(p.clip >= 0.0, "clip must be >= 0");
      break;
    case SignalKind::kDelta:
      require(p.delta_index < spec.n, "delta_index must be < n");
      break;
    default:
      break;
  }
}

Signal generate(const SignalSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.params.seed);
  std::vector<double> samples(spec.n);
  for (std::size_t k = 0; k < spec.n; ++k) samples[k] = sample_at(spec, k, rng);
  apply_guard(samples, spec.guard);
  std::string label = spec.label.empty() ? std::string(to_string(spec.kind)) : spec.label;
  return Signal(std::move(samples), std::move(label));
}

void apply_guard(std::span<double> samples, const GuardBand& guard) {
  if (guard.front + guard.back > samples.size()) {
    throw std::invalid_argument("apply_guard: guard band wider than the signal");
  }
  std::fill_n(samples.begin(), guard.front, 0.0);
  std::fill_n(samples.end() - static_cast<std::ptrdiff_t>(guard.back), guard.back, 0.0);
}

std::vector<SignalSpec> catalog_default_specs() {
  using K = SignalKind;
  return {
      catalog_entry("Sine", K::kSine, false),
      catalog_entry("Sine with guard band", K::kSine, true),
      catalog_entry("Cosine", K::kCosine, false),
      catalog_entry("Cosine with guard band", K::kCosine, true),
      catalog_entry("Tangent with guard band", K::kTangent, true),
      catalog_entry("On and Off", K::kOnOff, false),
      catalog_entry("Triangular", K::kTriangular, false),
      catalog_entry("Sawtooth", K::kSawtooth, false),
      catalog_entry("Gauss Sinusoidal", K::kGaussSinusoid, false),
      catalog_entry("Sawtooth with guard band", K::kSawtooth, true),
      catalog_entry("Dirichlet", K::kDirichlet, false),
      catalog_entry("Pulse Train", K::kPulseTrain, false),
      catalog_entry("Pulse Train with guard band", K::kPulseTrain, true),
      catalog_entry("Chirp", K::kChirp, false),
  };
}

}  // namespace bdht
