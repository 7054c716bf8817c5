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

#ifndef DAGCOUNT_SRC_MATRIX_SPACE_HPP_
#define DAGCOUNT_SRC_MATRIX_SPACE_HPP_

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dagcount/digraphs.hpp"
#include "dagcount/exactalg.hpp"

namespace dagcount::detail {

using Rows = std::array<std::uint64_t, kMaxPackedSize>;  // bit j of rows[i] = entry (i, j)

// The space of n x n (0,1)-matrices, optionally with the diagonal fixed
// to 1, split into jobs by the values of the first `prefix_rows` rows.
struct RowSpace {
  int n = 0;
  bool unit_diagonal = false;
  std::vector<std::vector<std::uint64_t>> patterns;  // per row
  int prefix_rows = 0;
  std::size_t job_count = 1;
  int free_bits = 0;  // total free entries
};

RowSpace make_row_space(int n, bool unit_diagonal);

std::uint64_t rows_to_packed(const Rows& rows, int n);

// Fixes the prefix rows for `job`, then calls visit(rows) for every
// assignment of rows [prefix_rows, end_row). Rows at or past end_row are
// left for the caller.
template <class Visit>
void for_each_assignment(const RowSpace& space, std::size_t job, int end_row, Visit&& visit) {
  Rows rows{};
  std::size_t rest = job;
  for (int r = space.prefix_rows - 1; r >= 0; --r) {
    const auto& p = space.patterns[static_cast<std::size_t>(r)];
    rows[static_cast<std::size_t>(r)] = p[rest % p.size()];
    rest /= p.size();
  }
  std::array<std::size_t, kMaxPackedSize> index{};
  for (int r = space.prefix_rows; r < end_row; ++r) {
    rows[static_cast<std::size_t>(r)] = space.patterns[static_cast<std::size_t>(r)][0];
  }
  while (true) {
    visit(rows);
    int r = end_row - 1;
    for (; r >= space.prefix_rows; --r) {
      const auto& p = space.patterns[static_cast<std::size_t>(r)];
      auto& i = index[static_cast<std::size_t>(r)];
      if (++i < p.size()) {
        rows[static_cast<std::size_t>(r)] = p[i];
        break;
      }
      i = 0;
      rows[static_cast<std::size_t>(r)] = p[0];
    }
    if (r < space.prefix_rows) return;
  }
}

struct SmallCharPolyHash {
  std::size_t operator()(const SmallCharPoly& c) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : c) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Memoizes the Sturm-based profile per distinct characteristic polynomial.
class SpectrumCache {
 public:
  const SpectrumProfile& profile(const SmallCharPoly& coeffs, int n);

 private:
  std::unordered_map<SmallCharPoly, SpectrumProfile, SmallCharPolyHash> cache_;
};

// One cache per worker thread, shared by every job that thread runs. The
// profile is a pure function of the polynomial, so sharing cannot change
// any result.
SpectrumCache& thread_spectrum_cache();

// Entries of a (0,1)-matrix from rows, or of a sign matrix when `sign` is
// set (a set bit means -1).
void rows_to_entries(const Rows& rows, int n, bool sign, std::int8_t* out);

}  // namespace dagcount::detail

#endif  // DAGCOUNT_SRC_MATRIX_SPACE_HPP_
