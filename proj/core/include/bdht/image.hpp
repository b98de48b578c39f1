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

// Grayscale images, scan-line transforms and PGM (P2/P5, maxval <= 255).

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace bdht {

/// Row-major gray levels. Real-valued while processing; images read from
/// or written to PGM hold integers in [0, 255].
struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> pixels;

  GrayImage() = default;
  GrayImage(std::size_t w, std::size_t h, double fill = 0.0)
      : width(w), height(h), pixels(w * h, fill) {}

  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(pixels).subspan(r * width, width);
  }
  std::span<double> row(std::size_t r) { return std::span<double>(pixels).subspan(r * width, width); }

  double operator()(std::size_t r, std::size_t c) const { return pixels[r * width + c]; }
  double& operator()(std::size_t r, std::size_t c) { return pixels[r * width + c]; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// Throws std::invalid_argument for zero dimensions, a pixel count that
/// does not match, or non-finite pixels.
void validate(const GrayImage& img);

/// Forward transform of every row independently; columns are untouched.
/// `threads` > 1 splits rows across workers with identical results.
GrayImage image_forward_dht(const GrayImage& img, unsigned threads = 1);

/// An 8-bit rendering together with the real range it was mapped from.
struct DisplayImage {
  GrayImage image;
  double lo = 0.0;
  double hi = 0.0;
};

/// Maps [min, max] of the data affinely onto [0, 255] with round half away
/// from zero. A constant image maps to 128.
DisplayImage normalize_for_display(const GrayImage& img);

/// Same mapping with an explicit source range; values outside are clamped.
GrayImage normalize_to_range(const GrayImage& img, double lo, double hi);

/// Inverse affine map of an 8-bit image back to [lo, hi].
GrayImage denormalize(const GrayImage& img8, double lo, double hi);

enum class PgmEncoding { kAscii, kBinary };  // P2, P5

/// Throws FormatError (with byte offset) on a bad magic, header, maxval
/// outside 1..255, out-of-range samples or short pixel data. Pixel values
/// are kept as stored; they are not rescaled by maxval.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// Always writes maxval 255. Throws std::invalid_argument unless every
/// pixel is an integer in [0, 255].
std::vector<std::uint8_t> write_pgm(const GrayImage& img, PgmEncoding encoding);

/// Real-valued pixels as CSV, one image row per line.
void write_image_csv(std::ostream& os, const GrayImage& img);

}  // namespace bdht
