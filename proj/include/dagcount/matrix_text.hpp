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

#ifndef DAGCOUNT_MATRIX_TEXT_HPP_
#define DAGCOUNT_MATRIX_TEXT_HPP_

// Plain-text matrix files:
//
//   3
//   110
//   011
//   001
//
// The first line is n, followed by exactly n lines of n characters from
// {0,1}, or from {+,-} for sign matrices. A single trailing newline is
// allowed; nothing else is.

#include <stdexcept>
#include <string>
#include <string_view>

#include "dagcount/digraphs.hpp"
#include "dagcount/exactalg.hpp"
#include "dagcount/search.hpp"

namespace dagcount {

class MatrixParseError : public std::runtime_error {
 public:
  MatrixParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParsedMatrix {
  bool sign = false;
  IntMatrix values{1};
};

// Line and column numbers in errors are 1-based.
ParsedMatrix parse_matrix_text(std::string_view text, bool sign);

std::string format_matrix_text(const BitMatrix01& m);
std::string format_matrix_text(const SignMatrix& m);

}  // namespace dagcount

#endif  // DAGCOUNT_MATRIX_TEXT_HPP_
