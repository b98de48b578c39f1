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

// Text formats. Numbers are always written with 17 significant digits
// (printf "%.17g"), which round-trips every finite double exactly.
//
// Signal CSV: the first line is the label, then one sample per line.
//   sine
//   0
//   0.70710678118654757
//   ...

#pragma once

#include <string>
#include <string_view>

#include "bdht/signal.hpp"

namespace bdht {

std::string format_number(double v);

/// Parses a complete decimal/scientific literal. Throws FormatError with
/// `offset` on failure.
double parse_number(std::string_view text, std::size_t offset = 0);

/// Line breaks inside the label are replaced with spaces.
std::string write_csv_signal(const Signal& s);

/// Accepts LF or CRLF line ends and one optional trailing newline.
/// Throws FormatError on a missing header, an empty body, blank lines or
/// unparsable values.
Signal read_csv_signal(std::string_view text);

}  // namespace bdht
