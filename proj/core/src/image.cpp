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

#include "bdht/image.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bdht/csv.hpp"
#include "bdht/dht.hpp"
#include "bdht/error.hpp"
#include "bdht/parallel.hpp"

namespace bdht {
namespace {

double to_display_level(double v, double lo, double hi) {
  if (hi <= lo) return 128.0;
  const double t = (std::clamp(v, lo, hi) - lo) / (hi - lo);
  return std::round(t * 255.0);
}

void require_8bit(const GrayImage& img) {
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    const double v = img.pixels[i];
    if (!(v >= 0.0 && v <= 255.0) || v != std::floor(v)) {
      throw std::invalid_argument("write_pgm: pixel " + std::to_string(i) +
                                  " is not an integer in [0, 255]");
    }
  }
}

// Netpbm header tokenizer: whitespace separated, '#' starts a comment
// running to end of line.
class PgmCursor {
 public:
  explicit PgmCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const noexcept { return pos_; }
  bool at_end() const noexcept { return pos_ >= bytes_.size(); }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (is_space(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  unsigned long read_uint(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > 0xffffffffUL) throw FormatError(std::string(what) + " is too large", start);
      ++pos_;
    }
    if (pos_ == start) {
      if (at_end()) throw FormatError(std::string("unexpected end of data reading ") + what, pos_);
      throw FormatError(std::string("expected an integer for ") + what, pos_);
    }
    if (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#') {
      throw FormatError(std::string("malformed integer for ") + what, pos_);
    }
    return v;
  }

  // Exactly one whitespace byte separates the header from P5 raster data.
  void consume_single_space() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw FormatError("expected whitespace after maxval", pos_);
    }
    ++pos_;
  }

  void advance(std::size_t n) { pos_ += n; }

 private:
  static bool is_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

void validate(const GrayImage& img) {
  if (img.width == 0 || img.height == 0) throw std::invalid_argument("image: empty image");
  if (img.pixels.size() != img.width * img.height) {
    throw std::invalid_argument("image: pixel count " + std::to_string(img.pixels.size()) +
                                " != width*height " + std::to_string(img.width * img.height));
  }
  for (double v : img.pixels) {
    if (!std::isfinite(v)) throw std::invalid_argument("image: non-finite pixel");
  }
}

GrayImage image_forward_dht(const GrayImage& img, unsigned threads) {
  validate(img);
  GrayImage out(img.width, img.height);
  parallel_for(img.height, threads, [&](std::size_t r) { forward_dht(img.row(r), out.row(r)); });
  return out;
}

DisplayImage normalize_for_display(const GrayImage& img) {
  validate(img);
  const auto [lo_it, hi_it] = std::minmax_element(img.pixels.begin(), img.pixels.end());
  DisplayImage d{normalize_to_range(img, *lo_it, *hi_it), *lo_it, *hi_it};
  return d;
}

GrayImage normalize_to_range(const GrayImage& img, double lo, double hi) {
  validate(img);
  GrayImage out(img.width, img.height);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    out.pixels[i] = to_display_level(img.pixels[i], lo, hi);
  }
  return out;
}

GrayImage denormalize(const GrayImage& img8, double lo, double hi) {
  validate(img8);
  GrayImage out(img8.width, img8.height);
  for (std::size_t i = 0; i < img8.pixels.size(); ++i) {
    out.pixels[i] = lo + (hi - lo) * (img8.pixels[i] / 255.0);
  }
  return out;
}

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw FormatError("not a PGM file (expected magic P2 or P5)", 0);
  }
  const bool binary = bytes[1] == '5';
  PgmCursor cur(bytes);
  cur.advance(2);
  if (bytes.size() > 2 && bytes[2] != '#' && !std::isspace(bytes[2])) {
    throw FormatError("magic number must be followed by whitespace", 2);
  }
  cur.skip_space_and_comments();
  const std::size_t width_at = cur.pos();
  const unsigned long width = cur.read_uint("width");
  const unsigned long height = cur.read_uint("height");
  if (width == 0 || height == 0) throw FormatError("zero image dimension", width_at);
  cur.skip_space_and_comments();
  const std::size_t maxval_at = cur.pos();
  const unsigned long maxval = cur.read_uint("maxval");
  if (maxval == 0 || maxval > 255) {
    throw FormatError("maxval " + std::to_string(maxval) + " outside 1..255", maxval_at);
  }

  // Every sample needs at least one byte; check before allocating.
  const std::size_t count = static_cast<std::size_t>(width) * height;
  if (count / width != height || count > bytes.size()) {
    throw FormatError("short pixel data for " + std::to_string(width) + "x" +
                          std::to_string(height) + " image",
                      bytes.size());
  }
  GrayImage img(width, height);
  if (binary) {
    cur.consume_single_space();
    const std::size_t start = cur.pos();
    if (bytes.size() - start < count) {
      throw FormatError("short pixel data: need " + std::to_string(count) + " bytes, have " +
                            std::to_string(bytes.size() - start),
                        bytes.size());
    }
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint8_t v = bytes[start + i];
      if (v > maxval) throw FormatError("sample exceeds maxval", start + i);
      img.pixels[i] = v;
    }
    if (bytes.size() - start > count) {
      throw FormatError("trailing bytes after pixel data", start + count);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      cur.skip_space_and_comments();
      const std::size_t at = cur.pos();
      if (cur.at_end()) {
        throw FormatError("short pixel data: " + std::to_string(i) + " of " +
                              std::to_string(count) + " samples",
                          at);
      }
      const unsigned long v = cur.read_uint("pixel");
      if (v > maxval) throw FormatError("sample exceeds maxval", at);
      img.pixels[i] = static_cast<double>(v);
    }
    cur.skip_space_and_comments();
    if (!cur.at_end()) throw FormatError("trailing data after pixel values", cur.pos());
  }
  return img;
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img, PgmEncoding encoding) {
  validate(img);
  require_8bit(img);
  const bool binary = encoding == PgmEncoding::kBinary;
  std::string header = std::string(binary ? "P5" : "P2") + "\n" + std::to_string(img.width) +
                       " " + std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  if (binary) {
    for (double v : img.pixels) out.push_back(static_cast<std::uint8_t>(v));
    return out;
  }
  for (std::size_t r = 0; r < img.height; ++r) {
    std::string line;
    for (std::size_t c = 0; c < img.width; ++c) {
      if (c != 0) line += ' ';
      line += std::to_string(static_cast<int>(img(r, c)));
    }
    line += '\n';
    out.insert(out.end(), line.begin(), line.end());
  }
  return out;
}

void write_image_csv(std::ostream& os, const GrayImage& img) {
  for (std::size_t r = 0; r < img.height; ++r) {
    for (std::size_t c = 0; c < img.width; ++c) {
      if (c != 0) os << ',';
      os << format_number(img(r, c));
    }
    os << '\n';
  }
}

}  // namespace bdht
