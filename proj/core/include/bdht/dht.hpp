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

// Direct-summation basic discrete Hilbert transform on finite records.
//
//   forward:  g(k) =  (2/pi) * sum_{n : k-n odd} f(n) / (k - n)
//   inverse:  f(n) = -(2/pi) * sum_{k : n-k odd} g(k) / (n - k)
//
// Both sums run over the indices 0..N-1 present in the input only. Terms
// are accumulated in ascending summation index with plain addition.

#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "bdht/signal.hpp"

namespace bdht {

/// Kernel weight 2 / (pi * d) for odd offsets d = k - n, zero for even d.
/// The same expression builds the explicit matrices, so the direct and
/// matrix routes multiply by bit-identical coefficients.
constexpr double dht_kernel(std::ptrdiff_t d) noexcept {
  if (d % 2 == 0) return 0.0;
  return 2.0 / (std::numbers::pi * static_cast<double>(d));
}

std::vector<double> forward_dht(std::span<const double> f);
std::vector<double> inverse_dht(std::span<const double> g);

/// Writes into `out` (same size as the input). `out` must not alias the input.
void forward_dht(std::span<const double> f, std::span<double> out);
void inverse_dht(std::span<const double> g, std::span<double> out);

Signal forward_dht(const Signal& f);
Signal inverse_dht(const Signal& g);

/// inverse_dht(forward_dht(f)).
Signal round_trip(const Signal& f);

}  // namespace bdht
