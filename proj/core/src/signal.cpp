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

#include "bdht/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace bdht {

void require_valid_samples(std::span<const double> samples, const char* what) {
  if (samples.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty signal");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i])) {
      throw std::invalid_argument(std::string(what) + ": non-finite sample at index " +
                                  std::to_string(i));
    }
  }
}

Signal::Signal(std::vector<double> samples, std::string label)
    : samples_(std::move(samples)), label_(std::move(label)) {
  require_valid_samples(samples_, "Signal");
}

Signal Signal::zeros(std::size_t n, std::string label) {
  return Signal(std::vector<double>(n, 0.0), std::move(label));
}

}  // namespace bdht
