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

// Subcommands of the `bdht` workbench. Each command reads its inputs from
// files (or stdin for "-"), writes data to files (or `out` for "-") and
// diagnostics to `err`. Commands throw on failure; run() turns exceptions
// into exit code 1.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bdht/signals.hpp"
#include "bdht/stego.hpp"

namespace bdht::cli {

inline constexpr const char* kStdio = "-";

struct GenOptions {
  SignalSpec spec;
  std::string output = kStdio;
  bool wav = false;  // write mono PCM16 instead of CSV
  std::uint32_t sample_rate = 8000;
};

struct TransformOptions {
  std::string input = kStdio;
  std::string output = kStdio;
  bool inverse = false;
};

struct RoundTripOptions {
  std::string input = kStdio;
  std::string output = kStdio;  // error report CSV
  std::string reconstructed;   // optional signal CSV
};

struct BenchOptions {
  std::string output = kStdio;
  std::size_t n = 256;
  unsigned threads = 1;
  double boundary_fraction = 0.1;
};

struct ChirpSweepOptions {
  std::string output = kStdio;
  unsigned threads = 1;
};

enum class MatrixKind { kForward, kInverse, kRoundTrip };

struct MatrixOptions {
  std::size_t n = 8;
  MatrixKind kind = MatrixKind::kForward;
  std::string output = kStdio;
};

struct ImageOptions {
  std::string input;
  std::string output;
  std::string dump_real;  // optional CSV of the real-valued transform
  bool ascii = false;     // P2 instead of P5
  unsigned threads = 1;
};

enum class BitsFormat { kAscii, kBytes };

struct EmbedOptions {
  std::string cover;
  std::string bits;
  std::string output;
  BitsFormat bits_format = BitsFormat::kAscii;
  FrameClock clock;
  std::optional<double> threshold;
};

struct ExtractOptions {
  std::string stego;
  std::string cover;
  std::string output = kStdio;
  BitsFormat bits_format = BitsFormat::kAscii;
  FrameClock clock;
  std::optional<double> threshold;
  std::optional<std::size_t> expect_bits;
};

struct ReportOptions {
  std::string cover;
  std::string stego;
  std::string output = kStdio;
  FrameClock clock;
};

void cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);
void cmd_transform(const TransformOptions& opt, std::ostream& out, std::ostream& err);
void cmd_roundtrip(const RoundTripOptions& opt, std::ostream& out, std::ostream& err);
void cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);
void cmd_chirp_sweep(const ChirpSweepOptions& opt, std::ostream& out, std::ostream& err);
void cmd_matrix(const MatrixOptions& opt, std::ostream& out, std::ostream& err);
void cmd_image_dht(const ImageOptions& opt, std::ostream& out, std::ostream& err);
void cmd_stego_embed(const EmbedOptions& opt, std::ostream& out, std::ostream& err);
void cmd_stego_extract(const ExtractOptions& opt, std::ostream& out, std::ostream& err);
void cmd_stego_report(const ReportOptions& opt, std::ostream& out, std::ostream& err);

/// Parses `args` (args[0] is the program name) and dispatches. Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// File helpers shared by commands and tests. "-" means stdin/stdout.
std::vector<std::uint8_t> read_bytes(const std::string& path);
void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes,
                 std::ostream& out);

}  // namespace bdht::cli
