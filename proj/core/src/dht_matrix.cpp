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

#include "bdht/dht_matrix.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "bdht/csv.hpp"
#include "bdht/dht.hpp"

namespace bdht {
namespace {

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": size must be >= 1");
}

}  // namespace

SquareMatrix::SquareMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<double> SquareMatrix::apply(std::span<const double> x) const {
  if (x.size() != n_) {
    throw std::invalid_argument("matrix apply: vector length " + std::to_string(x.size()) +
                                " != matrix size " + std::to_string(n_));
  }
  std::vector<double> y(n_, 0.0);
  for (std::size_t r = 0; r < n_; ++r) {
    const double* row_ptr = &data_[r * n_];
    double acc = 0.0;
    for (std::size_t c = 0; c < n_; ++c) acc += row_ptr[c] * x[c];
    y[r] = acc;
  }
  return y;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix product: size mismatch");
  const std::size_t n = a.n_;
  SquareMatrix out(n);
  // i-k-j order keeps the inner loop contiguous; each out(i, j) still sums
  // over k in ascending order.
  for (std::size_t i = 0; i < n; ++i) {
    double* out_row = &out.data_[i * n];
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a.data_[i * n + k];
      if (aik == 0.0) continue;
      const double* b_row = &b.data_[k * n];
      for (std::size_t j = 0; j < n; ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

DhtMatrix build_forward_matrix(std::size_t n) {
  require_positive(n, "build_forward_matrix");
  SquareMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) = dht_kernel(static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(j));
    }
  }
  return DhtMatrix(std::move(m), DhtMatrix::Direction::kForward);
}

DhtMatrix build_inverse_matrix(std::size_t n) {
  require_positive(n, "build_inverse_matrix");
  SquareMatrix m(n);
  // Row index is the reconstructed position n, column the transform index k.
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = 0; k < n; ++k) {
      m(row, k) =
          -dht_kernel(static_cast<std::ptrdiff_t>(row) - static_cast<std::ptrdiff_t>(k));
    }
  }
  return DhtMatrix(std::move(m), DhtMatrix::Direction::kInverse);
}

std::vector<double> apply(const DhtMatrix& m, std::span<const double> f) {
  require_valid_samples(f, "apply");
  return m.matrix().apply(f);
}

Signal apply(const DhtMatrix& m, const Signal& f) {
  return Signal(apply(m, f.samples()), f.label());
}

SquareMatrix round_trip_operator(std::size_t n) {
  require_positive(n, "round_trip_operator");
  return build_inverse_matrix(n).matrix() * build_forward_matrix(n).matrix();
}

void write_matrix_csv(std::ostream& os, const SquareMatrix& m) {
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (c != 0) os << ',';
      os << format_number(m(r, c));
    }
    os << '\n';
  }
}

}  // namespace bdht
