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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bdht/csv.hpp"

namespace bdht {

ErrorReport error_report(std::span<const double> original, std::span<const double> reconstructed) {
  require_valid_samples(original, "error_report");
  require_valid_samples(reconstructed, "error_report");
  if (original.size() != reconstructed.size()) {
    throw std::invalid_argument("error_report: length mismatch (" +
                                std::to_string(original.size()) + " vs " +
                                std::to_string(reconstructed.size()) + ")");
  }
  ErrorReport r;
  r.per_sample.resize(original.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < original.size(); ++i) {
    const double d = original[i] - reconstructed[i];
    r.per_sample[i] = d * d;
    sum += r.per_sample[i];
    if (r.per_sample[i] > r.per_sample[r.argmax_index]) r.argmax_index = i;
  }
  r.average_sq_error = sum / static_cast<double>(original.size());
  r.rms = std::sqrt(r.average_sq_error);
  return r;
}

ErrorReport error_report(const Signal& original, const Signal& reconstructed) {
  return error_report(original.samples(), reconstructed.samples());
}

bool boundary_concentration(const ErrorReport& report, double fraction) {
  if (!(fraction > 0.0 && fraction <= 0.5)) {
    throw std::invalid_argument("boundary_concentration: fraction must lie in (0, 0.5]");
  }
  const std::size_t n = report.per_sample.size();
  if (n == 0) return false;
  const auto edge = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n)));
  return report.argmax_index < edge || report.argmax_index >= n - std::min(edge, n);
}

std::vector<double> magnitude_spectrum(std::span<const double> f) {
  require_valid_samples(f, "magnitude_spectrum");
  const std::size_t n = f.size();
  std::vector<double> cos_table(n), sin_table(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double phase = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    cos_table[m] = std::cos(phase);
    sin_table[m] = std::sin(phase);
  }
  std::vector<double> mag(n);
  for (std::size_t k = 0; k < n; ++k) {
    double re = 0.0;
    double im = 0.0;
    std::size_t idx = 0;  // (k * j) mod n
    for (std::size_t j = 0; j < n; ++j) {
      re += f[j] * cos_table[idx];
      im -= f[j] * sin_table[idx];
      idx += k;
      if (idx >= n) idx -= n;
    }
    mag[k] = std::hypot(re, im);
  }
  return mag;
}

void write_error_csv(std::ostream& os, const ErrorReport& report) {
  os << "index,squared_error\n";
  for (std::size_t i = 0; i < report.per_sample.size(); ++i) {
    os << i << ',' << format_number(report.per_sample[i]) << '\n';
  }
  os << "average_sq_error," << format_number(report.average_sq_error) << '\n';
  os << "rms," << format_number(report.rms) << '\n';
}

}  // namespace bdht
