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

#include "bdht/csv.hpp"

#include <charconv>
#include <cmath>
#include <system_error>
#include <vector>

#include "bdht/error.hpp"

namespace bdht {

std::string format_number(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (ec != std::errc()) return "nan";  // unreachable for a 32-byte buffer
  return std::string(buf, end);
}

double parse_number(std::string_view text, std::size_t offset) {
  // from_chars rejects a leading '+', which some tools emit.
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') {
    body.remove_prefix(1);
    if (!body.empty() && body.front() == '-') body = {};
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc() || ptr != body.data() + body.size() || body.empty()) {
    throw FormatError("invalid number '" + std::string(text) + "'", offset);
  }
  if (!std::isfinite(v)) throw FormatError("non-finite number '" + std::string(text) + "'", offset);
  return v;
}

std::string write_csv_signal(const Signal& s) {
  std::string label = s.label();
  for (char& c : label) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  std::string out = label + '\n';
  for (double v : s.samples()) {
    out += format_number(v);
    out += '\n';
  }
  return out;
}

Signal read_csv_signal(std::string_view text) {
  if (text.empty()) throw FormatError("empty signal file", 0);

  std::vector<double> samples;
  std::string label;
  bool have_label = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    const bool last = eol == std::string_view::npos;
    if (last) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!have_label) {
      label = std::string(line);
      have_label = true;
    } else {
      if (line.empty()) throw FormatError("blank line in signal body", pos);
      samples.push_back(parse_number(line, pos));
    }
    pos = last ? text.size() : eol + 1;
  }
  if (samples.empty()) throw FormatError("signal file has a header but no samples", text.size());
  return Signal(std::move(samples), std::move(label));
}

}  // namespace bdht
