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

#include "bdht/dht.hpp"

#include <stdexcept>
#include <string>

namespace bdht {
namespace {

void check_out(std::span<const double> in, std::span<double> out, const char* what) {
  require_valid_samples(in, what);
  if (out.size() != in.size()) {
    throw std::invalid_argument(std::string(what) + ": output size " +
                                std::to_string(out.size()) + " != input size " +
                                std::to_string(in.size()));
  }
}

}  // namespace

void forward_dht(std::span<const double> f, std::span<double> out) {
  check_out(f, out, "forward_dht");
  const auto n_total = static_cast<std::ptrdiff_t>(f.size());
  for (std::ptrdiff_t k = 0; k < n_total; ++k) {
    double acc = 0.0;
    // Only n of opposite parity to k contribute.
    for (std::ptrdiff_t n = (k + 1) % 2; n < n_total; n += 2) {
      acc += f[static_cast<std::size_t>(n)] * dht_kernel(k - n);
    }
    out[static_cast<std::size_t>(k)] = acc;
  }
}

void inverse_dht(std::span<const double> g, std::span<double> out) {
  check_out(g, out, "inverse_dht");
  const auto k_total = static_cast<std::ptrdiff_t>(g.size());
  for (std::ptrdiff_t n = 0; n < k_total; ++n) {
    double acc = 0.0;
    for (std::ptrdiff_t k = (n + 1) % 2; k < k_total; k += 2) {
      acc += g[static_cast<std::size_t>(k)] * -dht_kernel(n - k);
    }
    out[static_cast<std::size_t>(n)] = acc;
  }
}

std::vector<double> forward_dht(std::span<const double> f) {
  std::vector<double> out(f.size());
  forward_dht(f, out);
  return out;
}

std::vector<double> inverse_dht(std::span<const double> g) {
  std::vector<double> out(g.size());
  inverse_dht(g, out);
  return out;
}

Signal forward_dht(const Signal& f) {
  return Signal(forward_dht(f.samples()), "dht(" + f.label() + ")");
}

Signal inverse_dht(const Signal& g) {
  return Signal(inverse_dht(g.samples()), "idht(" + g.label() + ")");
}

Signal round_trip(const Signal& f) {
  return Signal(inverse_dht(forward_dht(f.samples())), f.label());
}

}  // namespace bdht
