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

// Test-signal generators for the round-trip error study.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bdht/signal.hpp"

namespace bdht {

enum class SignalKind {
  kSine,
  kCosine,
  kTangent,
  kOnOff,
  kTriangular,
  kSawtooth,
  kGaussSinusoid,
  kDirichlet,
  kPulseTrain,
  kChirp,
  kConstant,
  kDelta,
  kUniformRandom,
};

/// Lower-case snake_case name ("gauss_sinusoid", ...).
std::string_view to_string(SignalKind kind);
std::optional<SignalKind> parse_signal_kind(std::string_view name);
std::span<const SignalKind> all_signal_kinds();

/// Generator parameters. Each kind reads only the fields listed next to it.
/// Frequencies are in cycles per record, periods and widths in samples.
struct SignalParams {
  double amplitude = 1.0;  // every kind except constant
  double cycles = 4.0;     // sine, cosine, gauss_sinusoid
  double f0 = 0.5;         // chirp start frequency
  double f1 = 8.0;         // chirp end frequency
  double period = 32.0;    // on_off, sawtooth, pulse_train
  double duty = 0.5;       // on_off, fraction of the period that is on
  double pulse_width = 4.0;  // pulse_train
  double sigma = 0.0;      // gauss_sinusoid; 0 means n / 8
  int dirichlet_order = 7;   // dirichlet
  double tan_start = -1.4;   // tangent sample range, radians
  double tan_end = 1.4;
  double clip = 0.0;       // tangent; > 0 clamps to [-clip, clip] and allows poles
  double value = 1.0;      // constant
  std::size_t delta_index = 0;  // delta
  std::uint64_t seed = 0;  // uniform_random
};

/// Samples forced to zero at the start and end of the record.
struct GuardBand {
  std::size_t front = 0;
  std::size_t back = 0;

  bool empty() const noexcept { return front == 0 && back == 0; }
  friend bool operator==(const GuardBand&, const GuardBand&) = default;
};

struct SignalSpec {
  SignalKind kind = SignalKind::kSine;
  std::size_t n = 256;
  SignalParams params;
  GuardBand guard;
  std::string label;  // empty: derived from the kind
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const SignalSpec& spec);

/// Deterministic: identical specs give bit-identical samples.
Signal generate(const SignalSpec& spec);

/// Zeros the first `guard.front` and last `guard.back` samples in place.
void apply_guard(std::span<double> samples, const GuardBand& guard);

/// The 14-entry error-table catalog, in table order.
std::vector<SignalSpec> catalog_default_specs();

}  // namespace bdht
