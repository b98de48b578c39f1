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

#include "bench.hpp"

#include <ostream>

#include "bdht/csv.hpp"
#include "bdht/dht.hpp"
#include "bdht/parallel.hpp"

namespace bdht::cli {

std::vector<BenchRow> run_bench(const std::vector<SignalSpec>& specs, unsigned threads,
                                double boundary_fraction) {
  std::vector<BenchRow> rows(specs.size());
  parallel_for(specs.size(), threads, [&](std::size_t i) {
    const Signal f = generate(specs[i]);
    const ErrorReport r = error_report(f, round_trip(f));
    rows[i] = BenchRow{i + 1, f.label(), r.average_sq_error, r.rms,
                       boundary_concentration(r, boundary_fraction)};
  });
  return rows;
}

std::vector<SignalSpec> catalog_at_size(std::size_t n) {
  auto specs = catalog_default_specs();
  for (auto& s : specs) {
    const bool guarded = !s.guard.empty();
    s.n = n;
    s.guard = guarded ? GuardBand{n / 16, n / 16} : GuardBand{};
  }
  return specs;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << kBenchHeader << '\n';
  for (const auto& r : rows) {
    os << r.index << ',' << r.label << ',' << format_number(r.average_sq_error) << ','
       << format_number(r.rms) << ',' << (r.boundary_flag ? "true" : "false") << '\n';
  }
}

ClaimVerdict classify_chirp_claim(double best) {
  if (best <= 10.0 * kChirpClaim) return ClaimVerdict::kReproduced;
  if (best <= 1e-8) return ClaimVerdict::kPartiallyReproduced;
  return ClaimVerdict::kNotReproduced;
}

std::string_view to_string(ClaimVerdict v) {
  switch (v) {
    case ClaimVerdict::kReproduced:
      return "reproduced";
    case ClaimVerdict::kPartiallyReproduced:
      return "partially reproduced";
    case ClaimVerdict::kNotReproduced:
      return "not reproduced";
  }
  return "not reproduced";
}

ChirpSweepResult run_chirp_sweep(const ChirpSweepGrid& grid, unsigned threads) {
  ChirpSweepResult result;
  for (std::size_t n : grid.sizes) {
    for (double fraction : grid.guard_fractions) {
      const auto guard = static_cast<std::size_t>(fraction * static_cast<double>(n));
      if (n < 2 || 4 * guard > n) continue;
      for (double f0 : grid.start_freqs) {
        for (double f1 : grid.end_freqs) {
          if (2.0 * f1 >= static_cast<double>(n)) continue;
          result.points.push_back(ChirpSweepPoint{n, f0, f1, guard, 0.0});
        }
      }
    }
  }
  parallel_for(result.points.size(), threads, [&](std::size_t i) {
    auto& p = result.points[i];
    SignalSpec spec;
    spec.kind = SignalKind::kChirp;
    spec.n = p.n;
    spec.params.f0 = p.f0;
    spec.params.f1 = p.f1;
    spec.guard = GuardBand{p.guard, p.guard};
    const Signal f = generate(spec);
    p.average_sq_error = error_report(f, round_trip(f)).average_sq_error;
  });
  if (!result.points.empty()) {
    result.best = result.points.front();
    for (const auto& p : result.points) {
      if (p.average_sq_error < result.best.average_sq_error) result.best = p;
    }
    result.verdict = classify_chirp_claim(result.best.average_sq_error);
  }
  return result;
}

void write_chirp_sweep_csv(std::ostream& os, const ChirpSweepResult& result) {
  os << "n,f0,f1,guard,avg_sq_error\n";
  for (const auto& p : result.points) {
    os << p.n << ',' << format_number(p.f0) << ',' << format_number(p.f1) << ',' << p.guard << ','
       << format_number(p.average_sq_error) << '\n';
  }
}

}  // namespace bdht::cli
