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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "bdht/signal.hpp"

namespace bdht {

/// Reconstruction error of one record.
///
/// `average_sq_error` is sum((f - F)^2) / N, the figure reported in error
/// tables. `rms` is its square root.
struct ErrorReport {
  std::vector<double> per_sample;  // (f(n) - F(n))^2
  double average_sq_error = 0.0;
  double rms = 0.0;
  std::size_t argmax_index = 0;  // lowest index among the maxima
};

/// Throws std::invalid_argument on length mismatch or invalid samples.
ErrorReport error_report(std::span<const double> original, std::span<const double> reconstructed);
ErrorReport error_report(const Signal& original, const Signal& reconstructed);

constexpr double kDefaultBoundaryFraction = 0.1;

/// True iff the worst sample sits within the first or last
/// ceil(fraction * N) indices. `fraction` must lie in (0, 0.5].
bool boundary_concentration(const ErrorReport& report,
                            double fraction = kDefaultBoundaryFraction);

/// |X_k| = |sum_n f(n) exp(-2 pi i k n / N)|, k = 0..N-1, by direct O(N^2)
/// summation. Phases use (k n mod N) so large N keeps full accuracy.
std::vector<double> magnitude_spectrum(std::span<const double> f);

/// CSV with header `index,squared_error`, one row per sample, then the
/// footer rows `average_sq_error,<v>` and `rms,<v>`.
void write_error_csv(std::ostream& os, const ErrorReport& report);

}  // namespace bdht
