// Copyright 2026 The dagcount Authors
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

#include <algorithm>
#include <charconv>
#include <vector>

#include "dagcount/matrix_text.hpp"

namespace dagcount {

MatrixParseError::MatrixParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

ParsedMatrix parse_matrix_text(std::string_view text, bool sign) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) throw MatrixParseError(1, 1, "empty input; expected the dimension n");

  const std::string_view header = lines[0];
  int n = 0;
  const auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), n);
  if (ec != std::errc() || header.empty() || header[0] == '-' || header[0] == '+') {
    throw MatrixParseError(1, 1, "expected a positive integer dimension");
  }
  if (ptr != header.data() + header.size()) {
    throw MatrixParseError(1, static_cast<int>(ptr - header.data()) + 1, "unexpected character after dimension");
  }
  if (n < 1 || n > kMaxBitMatrixSize) throw MatrixParseError(1, 1, "dimension must be in 1..64");

  const int data_lines = static_cast<int>(lines.size()) - 1;
  if (data_lines < n) {
    throw MatrixParseError(data_lines + 2, 1,
                           "expected " + std::to_string(n) + " rows, found " + std::to_string(data_lines));
  }
  if (data_lines > n) {
    throw MatrixParseError(n + 2, 1, "unexpected content after the last row");
  }

  const char one = sign ? '-' : '1';
  const char zero = sign ? '+' : '0';
  ParsedMatrix parsed;
  parsed.sign = sign;
  parsed.values = IntMatrix(n);
  for (int i = 0; i < n; ++i) {
    const std::string_view row = lines[static_cast<std::size_t>(i) + 1];
    const int line_no = i + 2;
    for (int j = 0; j < static_cast<int>(row.size()) && j < n; ++j) {
      const char c = row[static_cast<std::size_t>(j)];
      if (c == one) {
        parsed.values(i, j) = sign ? -1 : 1;
      } else if (c == zero) {
        parsed.values(i, j) = sign ? 1 : 0;
      } else {
        throw MatrixParseError(line_no, j + 1,
                               std::string("expected '") + zero + "' or '" + one + "', found '" + c + "'");
      }
    }
    if (static_cast<int>(row.size()) != n) {
      throw MatrixParseError(line_no, static_cast<int>(std::min<std::size_t>(row.size(), static_cast<std::size_t>(n))) + 1,
                             "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    }
  }
  return parsed;
}

std::string format_matrix_text(const BitMatrix01& m) {
  return std::to_string(m.size()) + "\n" + m.to_string();
}

std::string format_matrix_text(const SignMatrix& m) {
  return std::to_string(m.size()) + "\n" + m.to_string();
}

}  // namespace dagcount
