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
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bdht {

/// Throws std::invalid_argument if `samples` is empty or holds NaN/Inf.
/// `what` names the caller in the message.
void require_valid_samples(std::span<const double> samples, const char* what);

/// A finite, non-empty sequence of real samples. Positions are the
/// transform indices n (input) or k (output); the first sample sits at
/// index 0.
class Signal {
 public:
  explicit Signal(std::vector<double> samples, std::string label = {});

  static Signal zeros(std::size_t n, std::string label = {});

  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double operator[](std::size_t i) const { return samples_[i]; }

  /// Index of the first sample. Always 0.
  std::ptrdiff_t origin_index() const noexcept { return 0; }

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Moves the samples out; the signal is left empty and must not be used.
  std::vector<double> release() && { return std::move(samples_); }

  friend bool operator==(const Signal& a, const Signal& b) {
    return a.samples_ == b.samples_;
  }

 private:
  std::vector<double> samples_;
  std::string label_;
};

}  // namespace bdht
