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

#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "bdht/csv.hpp"
#include "bdht/dht.hpp"
#include "bdht/dht_matrix.hpp"
#include "bdht/image.hpp"
#include "bdht/metrics.hpp"
#include "bdht/wav.hpp"
#include "bench.hpp"

namespace bdht::cli {
namespace {

std::string read_text(const std::string& path) {
  const auto bytes = read_bytes(path);
  return std::string(bytes.begin(), bytes.end());
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  write_bytes(path, std::vector<std::uint8_t>(text.begin(), text.end()), out);
}

Signal read_wav_signal(const std::string& path, std::uint32_t* rate = nullptr) {
  const WavAudio audio = read_wav(read_bytes(path));
  if (rate != nullptr) *rate = audio.sample_rate;
  Signal s = to_signal(audio);
  s.set_label(path);
  return s;
}

BitStream read_bits(const std::string& path, BitsFormat format) {
  const auto bytes = read_bytes(path);
  if (format == BitsFormat::kBytes) return bits_from_bytes(bytes);
  return parse_bits_ascii(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

double threshold_or_default(const std::optional<double>& t, const FrameClock& clock) {
  return t.value_or(default_energy_threshold(clock.frame_len));
}

}  // namespace

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  if (path == kStdio) {
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(std::cin),
                                     std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes,
                 std::ostream& out) {
  if (path == kStdio) {
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

void cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  const Signal s = generate(opt.spec);
  if (!opt.wav) {
    write_text(opt.output, write_csv_signal(s), out);
    return;
  }
  const WavConversion conv = from_signal(s.samples(), opt.sample_rate);
  if (conv.clamped != 0) err << "warning: " << conv.clamped << " samples clamped to the PCM16 range\n";
  write_bytes(opt.output, write_wav(conv.audio), out);
}

void cmd_transform(const TransformOptions& opt, std::ostream& out, std::ostream&) {
  const Signal in = read_csv_signal(read_text(opt.input));
  const Signal result = opt.inverse ? inverse_dht(in) : forward_dht(in);
  write_text(opt.output, write_csv_signal(result), out);
}

void cmd_roundtrip(const RoundTripOptions& opt, std::ostream& out, std::ostream& err) {
  const Signal in = read_csv_signal(read_text(opt.input));
  const Signal rec = round_trip(in);
  const ErrorReport report = error_report(in, rec);
  std::ostringstream csv;
  write_error_csv(csv, report);
  write_text(opt.output, csv.str(), out);
  if (!opt.reconstructed.empty()) write_text(opt.reconstructed, write_csv_signal(rec), out);
  err << "average_sq_error " << format_number(report.average_sq_error) << ", max at index "
      << report.argmax_index << '\n';
}

void cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream&) {
  const auto rows = run_bench(catalog_at_size(opt.n), opt.threads, opt.boundary_fraction);
  std::ostringstream csv;
  write_bench_csv(csv, rows);
  write_text(opt.output, csv.str(), out);
}

void cmd_chirp_sweep(const ChirpSweepOptions& opt, std::ostream& out, std::ostream& err) {
  const auto result = run_chirp_sweep(ChirpSweepGrid{}, opt.threads);
  std::ostringstream csv;
  write_chirp_sweep_csv(csv, result);
  write_text(opt.output, csv.str(), out);
  const auto& b = result.best;
  err << "best: n=" << b.n << " f0=" << format_number(b.f0) << " f1=" << format_number(b.f1)
      << " guard=" << b.guard << " avg_sq_error=" << format_number(b.average_sq_error) << '\n'
      << "claim (~" << format_number(kChirpClaim) << "): " << to_string(result.verdict) << '\n';
}

void cmd_matrix(const MatrixOptions& opt, std::ostream& out, std::ostream&) {
  std::ostringstream csv;
  switch (opt.kind) {
    case MatrixKind::kForward:
      write_matrix_csv(csv, build_forward_matrix(opt.n).matrix());
      break;
    case MatrixKind::kInverse:
      write_matrix_csv(csv, build_inverse_matrix(opt.n).matrix());
      break;
    case MatrixKind::kRoundTrip:
      write_matrix_csv(csv, round_trip_operator(opt.n));
      break;
  }
  write_text(opt.output, csv.str(), out);
}

void cmd_image_dht(const ImageOptions& opt, std::ostream& out, std::ostream& err) {
  const GrayImage img = read_pgm(read_bytes(opt.input));
  const GrayImage transformed = image_forward_dht(img, opt.threads);
  if (!opt.dump_real.empty()) {
    std::ostringstream csv;
    write_image_csv(csv, transformed);
    write_text(opt.dump_real, csv.str(), out);
  }
  const DisplayImage shown = normalize_for_display(transformed);
  write_bytes(opt.output,
              write_pgm(shown.image, opt.ascii ? PgmEncoding::kAscii : PgmEncoding::kBinary), out);
  err << "mapped [" << format_number(shown.lo) << ", " << format_number(shown.hi)
      << "] onto [0, 255]\n";
}

void cmd_stego_embed(const EmbedOptions& opt, std::ostream& out, std::ostream& err) {
  std::uint32_t rate = 0;
  const Signal cover = read_wav_signal(opt.cover, &rate);
  const BitStream bits = read_bits(opt.bits, opt.bits_format);
  const EmbedResult result =
      embed(cover, bits, opt.clock, threshold_or_default(opt.threshold, opt.clock));
  const WavConversion conv = from_signal(result.stego.samples(), rate);
  write_bytes(opt.output, write_wav(conv.audio), out);
  err << "embedded " << result.frames_used << " bits; " << result.skipped_frames.size()
      << " frames skipped\n";
  if (conv.clamped != 0) err << "warning: " << conv.clamped << " samples clamped to the PCM16 range\n";
}

void cmd_stego_extract(const ExtractOptions& opt, std::ostream& out, std::ostream& err) {
  std::uint32_t stego_rate = 0;
  std::uint32_t cover_rate = 0;
  const Signal stego = read_wav_signal(opt.stego, &stego_rate);
  const Signal cover = read_wav_signal(opt.cover, &cover_rate);
  if (stego_rate != cover_rate) {
    err << "warning: sample rates differ (" << stego_rate << " vs " << cover_rate << ")\n";
  }
  BitStream bits = extract(stego, cover, opt.clock, threshold_or_default(opt.threshold, opt.clock));
  if (opt.expect_bits) {
    if (bits.size() < *opt.expect_bits) {
      err << "warning: expected " << *opt.expect_bits << " bits but the cover has only "
          << bits.size() << " eligible frames for this clock\n";
    }
    bits = bits.prefix(*opt.expect_bits);
  }
  if (opt.bits_format == BitsFormat::kBytes) {
    write_bytes(opt.output, bits_to_bytes(bits), out);
  } else {
    write_text(opt.output, format_bits_ascii(bits), out);
  }
}

void cmd_stego_report(const ReportOptions& opt, std::ostream& out, std::ostream& err) {
  const Signal cover = read_wav_signal(opt.cover);
  const Signal stego = read_wav_signal(opt.stego);
  const auto report = imperceptibility_report(cover, stego, opt.clock);
  std::ostringstream csv;
  csv << "frame,peak_bin,peak_deviation,max_interior_deviation\n";
  for (const auto& f : report.frames) {
    csv << f.frame << ',' << f.peak_bin << ',' << format_number(f.peak_deviation) << ','
        << format_number(f.max_interior_deviation) << '\n';
  }
  write_text(opt.output, csv.str(), out);
  err << "max peak deviation " << format_number(report.max_peak_deviation)
      << ", max interior deviation " << format_number(report.max_interior_deviation) << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Basic discrete Hilbert transform workbench"};
  app.require_subcommand(1);
  std::function<void()> action;

  const std::map<std::string, BitsFormat> bits_formats{{"ascii", BitsFormat::kAscii},
                                                       {"bytes", BitsFormat::kBytes}};

  // gen
  GenOptions gen;
  std::string kind_name = "sine";
  std::optional<std::size_t> guard, guard_front, guard_back;
  std::vector<std::string> kind_names;
  for (SignalKind k : all_signal_kinds()) kind_names.emplace_back(to_string(k));
  {
    auto* c = app.add_subcommand("gen", "Generate a test signal (CSV, or WAV with --wav)");
    auto& p = gen.spec.params;
    c->add_option("--kind", kind_name, "Signal kind")->check(CLI::IsMember(kind_names));
    c->add_option("--n", gen.spec.n, "Sample count")->check(CLI::PositiveNumber);
    c->add_option("--amplitude", p.amplitude);
    c->add_option("--cycles", p.cycles, "Cycles per record (sine, cosine, gauss_sinusoid)");
    c->add_option("--f0", p.f0, "Chirp start frequency, cycles per record");
    c->add_option("--f1", p.f1, "Chirp end frequency, cycles per record");
    c->add_option("--period", p.period, "Period in samples (on_off, sawtooth, pulse_train)");
    c->add_option("--duty", p.duty, "On fraction (on_off)");
    c->add_option("--pulse-width", p.pulse_width, "Pulse width in samples (pulse_train)");
    c->add_option("--sigma", p.sigma, "Gaussian width (gauss_sinusoid), 0 = n/8");
    c->add_option("--order", p.dirichlet_order, "Dirichlet order");
    c->add_option("--tan-start", p.tan_start);
    c->add_option("--tan-end", p.tan_end);
    c->add_option("--clip", p.clip, "Tangent clip bound, 0 = none");
    c->add_option("--value", p.value, "Constant value");
    c->add_option("--index", p.delta_index, "Delta position");
    c->add_option("--seed", p.seed, "uniform_random seed");
    c->add_option("--guard", guard, "Guard band width at both ends");
    c->add_option("--guard-front", guard_front);
    c->add_option("--guard-back", guard_back);
    c->add_option("--label", gen.spec.label);
    c->add_option("-o,--out", gen.output, "Output file, - for stdout");
    c->add_flag("--wav", gen.wav, "Write mono PCM16 WAV");
    c->add_option("--rate", gen.sample_rate, "WAV sample rate");
    c->callback([&] {
      action = [&] {
        gen.spec.kind = *parse_signal_kind(kind_name);
        if (guard) gen.spec.guard = GuardBand{*guard, *guard};
        if (guard_front) gen.spec.guard.front = *guard_front;
        if (guard_back) gen.spec.guard.back = *guard_back;
        cmd_gen(gen, out, err);
      };
    });
  }

  TransformOptions transform;
  {
    auto* c = app.add_subcommand("transform", "Forward (or --inverse) DHT of a signal CSV");
    c->add_option("input", transform.input, "Signal CSV, - for stdin");
    c->add_option("-o,--out", transform.output);
    c->add_flag("--inverse", transform.inverse);
    c->callback([&] { action = [&] { cmd_transform(transform, out, err); }; });
  }

  RoundTripOptions roundtrip;
  {
    auto* c = app.add_subcommand("roundtrip", "Inverse(forward(f)) error report for a signal CSV");
    c->add_option("input", roundtrip.input);
    c->add_option("-o,--out", roundtrip.output, "Error report CSV");
    c->add_option("--reconstructed", roundtrip.reconstructed, "Also write the reconstruction");
    c->callback([&] { action = [&] { cmd_roundtrip(roundtrip, out, err); }; });
  }

  BenchOptions bench;
  {
    auto* c = app.add_subcommand("bench", "Round-trip error table over the signal catalog");
    c->add_option("-o,--out", bench.output);
    c->add_option("--n", bench.n, "Record length for every entry")->check(CLI::Range(2, 1 << 16));
    c->add_option("--parallel", bench.threads, "Worker threads")->check(CLI::PositiveNumber);
    c->add_option("--fraction", bench.boundary_fraction, "Edge fraction for boundary_max")
        ->check(CLI::Range(1e-9, 0.5));
    c->callback([&] { action = [&] { cmd_bench(bench, out, err); }; });
  }

  ChirpSweepOptions sweep;
  {
    auto* c = app.add_subcommand("chirp-sweep", "Sweep chirp parameters and record length");
    c->add_option("-o,--out", sweep.output);
    c->add_option("--parallel", sweep.threads)->check(CLI::PositiveNumber);
    c->callback([&] { action = [&] { cmd_chirp_sweep(sweep, out, err); }; });
  }

  MatrixOptions matrix;
  {
    auto* c = app.add_subcommand("matrix", "Dump a transform matrix as CSV");
    c->add_option("--n", matrix.n)->check(CLI::Range(1, 4096));
    c->add_option("--kind", matrix.kind, "forward, inverse or roundtrip")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, MatrixKind>{{"forward", MatrixKind::kForward},
                                              {"inverse", MatrixKind::kInverse},
                                              {"roundtrip", MatrixKind::kRoundTrip}}));
    c->add_option("-o,--out", matrix.output);
    c->callback([&] { action = [&] { cmd_matrix(matrix, out, err); }; });
  }

  ImageOptions image;
  {
    auto* c = app.add_subcommand("image-dht", "Row-by-row DHT of a PGM image");
    c->add_option("input", image.input)->required();
    c->add_option("output", image.output)->required();
    c->add_option("--dump-real", image.dump_real, "CSV of the unnormalized transform");
    c->add_flag("--ascii", image.ascii, "Write P2 instead of P5");
    c->add_option("--parallel", image.threads)->check(CLI::PositiveNumber);
    c->callback([&] { action = [&] { cmd_image_dht(image, out, err); }; });
  }

  auto add_clock = [](CLI::App* c, FrameClock& clock) {
    c->add_option("--frame-len", clock.frame_len, "Samples per frame")
        ->check(CLI::Range(kMinFrameLen, std::size_t{1} << 20));
    c->add_option("--offset", clock.offset, "Samples before the first frame");
  };

  EmbedOptions emb;
  {
    auto* c = app.add_subcommand("stego-embed", "Hide a bitstream in a WAV cover");
    c->add_option("--cover", emb.cover)->required();
    c->add_option("--bits", emb.bits, "Message file")->required();
    c->add_option("-o,--out", emb.output)->required();
    c->add_option("--bits-format", emb.bits_format)
        ->transform(CLI::CheckedTransformer(bits_formats));
    c->add_option("--threshold", emb.threshold, "Frame energy threshold, default 1e-6 * frame-len");
    add_clock(c, emb.clock);
    c->callback([&] { action = [&] { cmd_stego_embed(emb, out, err); }; });
  }

  ExtractOptions ext;
  {
    auto* c = app.add_subcommand("stego-extract", "Recover a bitstream using the cover");
    c->add_option("stego", ext.stego)->required();
    c->add_option("--cover", ext.cover)->required();
    c->add_option("-o,--out", ext.output);
    c->add_option("--bits-format", ext.bits_format)
        ->transform(CLI::CheckedTransformer(bits_formats));
    c->add_option("--threshold", ext.threshold);
    c->add_option("--expect", ext.expect_bits, "Message length in bits");
    add_clock(c, ext.clock);
    c->callback([&] { action = [&] { cmd_stego_extract(ext, out, err); }; });
  }

  ReportOptions rep;
  {
    auto* c = app.add_subcommand("stego-report", "Per-frame magnitude-spectrum deviation");
    c->add_option("--cover", rep.cover)->required();
    c->add_option("--stego", rep.stego)->required();
    c->add_option("-o,--out", rep.output);
    add_clock(c, rep.clock);
    c->callback([&] { action = [&] { cmd_stego_report(rep, out, err); }; });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (action) action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace bdht::cli
