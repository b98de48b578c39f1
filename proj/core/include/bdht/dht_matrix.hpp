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

// Explicit N x N forms of the truncated transform pair. Dense row-major
// storage; these double as the brute-force reference for dht.hpp.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "bdht/signal.hpp"

namespace bdht {

/// Dense square matrix, row-major.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n);

  static SquareMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }
  double& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }

  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_).subspan(r * n_, n_);
  }

  SquareMatrix transpose() const;

  /// Matrix-vector product; each row dot product accumulates in ascending
  /// column order. Throws std::invalid_argument on size mismatch.
  std::vector<double> apply(std::span<const double> x) const;

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) = default;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// The finite transform operator. Entries follow the kernel of
/// dht_kernel(): forward(k, n) = 2 / (pi (k - n)) for odd k - n, the
/// inverse uses -2 / (pi (n - k)). Immutable once built.
class DhtMatrix {
 public:
  enum class Direction { kForward, kInverse };

  std::size_t size() const noexcept { return m_.size(); }
  Direction direction() const noexcept { return direction_; }
  double operator()(std::size_t row, std::size_t col) const { return m_(row, col); }
  const SquareMatrix& matrix() const noexcept { return m_; }

 private:
  friend DhtMatrix build_forward_matrix(std::size_t n);
  friend DhtMatrix build_inverse_matrix(std::size_t n);

  DhtMatrix(SquareMatrix m, Direction d) : m_(std::move(m)), direction_(d) {}

  SquareMatrix m_;
  Direction direction_;
};

/// Throws std::invalid_argument for n == 0.
DhtMatrix build_forward_matrix(std::size_t n);
DhtMatrix build_inverse_matrix(std::size_t n);

std::vector<double> apply(const DhtMatrix& m, std::span<const double> f);
Signal apply(const DhtMatrix& m, const Signal& f);

/// build_inverse_matrix(n) * build_forward_matrix(n).
SquareMatrix round_trip_operator(std::size_t n);

/// Row-major CSV, one matrix row per line, 17 significant digits.
void write_matrix_csv(std::ostream& os, const SquareMatrix& m);

}  // namespace bdht
