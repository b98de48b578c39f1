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

// Round-trip error table over the signal catalog, and the chirp parameter
// sweep.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bdht/metrics.hpp"
#include "bdht/signals.hpp"

namespace bdht::cli {

struct BenchRow {
  std::size_t index = 0;  // 1-based table position
  std::string label;
  double average_sq_error = 0.0;
  double rms = 0.0;
  bool boundary_flag = false;
};

inline constexpr std::string_view kBenchHeader = "sno,label,avg_sq_error,rms,boundary_max";

/// Generates each spec, round-trips it and records its error. Rows are
/// computed independently, so `threads` only affects wall time.
std::vector<BenchRow> run_bench(const std::vector<SignalSpec>& specs, unsigned threads = 1,
                                double boundary_fraction = kDefaultBoundaryFraction);

/// The catalog with every record resized to `n` samples and guard bands of
/// n / 16 on the guarded rows.
std::vector<SignalSpec> catalog_at_size(std::size_t n);

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows);

struct ChirpSweepGrid {
  std::vector<std::size_t> sizes{64, 128, 256, 512, 1024};
  std::vector<double> start_freqs{0.0, 0.25, 0.5, 1.0, 2.0, 4.0};
  std::vector<double> end_freqs{1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0};
  std::vector<double> guard_fractions{0.0, 1.0 / 16.0};  // per side, fraction of n
};

struct ChirpSweepPoint {
  std::size_t n = 0;
  double f0 = 0.0;
  double f1 = 0.0;
  std::size_t guard = 0;
  double average_sq_error = 0.0;
};

/// Headline figure for the chirp: an average squared error of the order of
/// 1e-17.
inline constexpr double kChirpClaim = 1e-17;

enum class ClaimVerdict { kReproduced, kPartiallyReproduced, kNotReproduced };

/// reproduced: best <= 10 * claim (same order of magnitude or below);
/// partially: best <= 1e-8, far below the non-chirp catalog rows but not at
/// the claimed order; otherwise not reproduced.
ClaimVerdict classify_chirp_claim(double best_average_sq_error);
std::string_view to_string(ClaimVerdict v);

struct ChirpSweepResult {
  std::vector<ChirpSweepPoint> points;  // grid order
  ChirpSweepPoint best;
  ClaimVerdict verdict = ClaimVerdict::kNotReproduced;
};

/// Skips combinations with f1 >= n / 2 (aliased sweeps) and guards wider
/// than n / 4 per side.
ChirpSweepResult run_chirp_sweep(const ChirpSweepGrid& grid, unsigned threads = 1);

/// Header `n,f0,f1,guard,avg_sq_error`.
void write_chirp_sweep_csv(std::ostream& os, const ChirpSweepResult& result);

}  // namespace bdht::cli
