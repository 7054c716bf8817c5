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
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dagcount/digraphs.hpp"

namespace dagcount {

namespace {

std::uint64_t low_mask(int n) {
  return n >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << n) - 1;
}

int packed_shift(int n, int i, int j) { return n * n - 1 - (i * n + j); }

void check_packable(int n) {
  if (n < 1 || n > kMaxPackedSize) {
    throw std::invalid_argument("packed matrices require 1 <= n <= 8");
  }
}

}  // namespace

BitMatrix01::BitMatrix01(int n) : n_(n) {
  if (n < 1 || n > kMaxBitMatrixSize) {
    throw std::invalid_argument("BitMatrix01: dimension must be in 1..64");
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
}

BitMatrix01 BitMatrix01::identity(int n) {
  BitMatrix01 m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix01 BitMatrix01::from_int(const IntMatrix& m) {
  BitMatrix01 out(m.size());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      const BigInt& v = m(i, j);
      if (v == 1) {
        out.set(i, j, true);
      } else if (v != 0) {
        throw std::invalid_argument("BitMatrix01: entry outside {0,1}");
      }
    }
  }
  return out;
}

BitMatrix01 BitMatrix01::unpack(int n, std::uint64_t code) {
  check_packable(n);
  BitMatrix01 m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((code >> packed_shift(n, i, j)) & 1U) m.set(i, j, true);
    }
  }
  return m;
}

std::uint64_t BitMatrix01::pack() const {
  check_packable(n_);
  std::uint64_t code = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (get(i, j)) code |= std::uint64_t{1} << packed_shift(n_, i, j);
    }
  }
  return code;
}

void BitMatrix01::set(int i, int j, bool value) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("BitMatrix01: index");
  auto& r = rows_[static_cast<std::size_t>(i)];
  const std::uint64_t bit = std::uint64_t{1} << j;
  r = value ? (r | bit) : (r & ~bit);
}

int BitMatrix01::popcount() const {
  int total = 0;
  for (auto r : rows_) total += std::popcount(r);
  return total;
}

IntMatrix BitMatrix01::to_int() const {
  IntMatrix m(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (get(i, j)) m(i, j) = 1;
    }
  }
  return m;
}

std::string BitMatrix01::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out += get(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

int Digraph::loop_count() const {
  int loops = 0;
  for (int v = 0; v < size(); ++v) loops += has_edge(v, v) ? 1 : 0;
  return loops;
}

std::string CanonicalKey::to_string() const {
  std::string out;
  for (int s = n * n - 1; s >= 0; --s) out += ((bits >> s) & 1U) ? '1' : '0';
  return out;
}

std::optional<std::vector<int>> topological_order(const Digraph& g) {
  const int n = g.size();
  // in_from[v]: vertices with an edge into v.
  std::vector<std::uint64_t> in_from(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (std::uint64_t row = g.out_neighbors(u); row != 0; row &= row - 1) {
      in_from[static_cast<std::size_t>(std::countr_zero(row))] |= std::uint64_t{1} << u;
    }
  }
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::uint64_t remaining = low_mask(n);
  while (remaining != 0) {
    std::uint64_t sources = 0;
    for (std::uint64_t rest = remaining; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((in_from[static_cast<std::size_t>(v)] & remaining) == 0) {
        sources |= std::uint64_t{1} << v;
      }
    }
    if (sources == 0) return std::nullopt;
    for (std::uint64_t s = sources; s != 0; s &= s - 1) order.push_back(std::countr_zero(s));
    remaining &= ~sources;
  }
  return order;
}

bool is_acyclic(const Digraph& g) { return topological_order(g).has_value(); }

std::optional<int> girth(const Digraph& g) {
  const int n = g.size();
  std::optional<int> best;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t self = std::uint64_t{1} << v;
    std::uint64_t seen = 0;
    std::uint64_t frontier = g.out_neighbors(v);
    for (int length = 1; frontier != 0 && (!best || length < *best); ++length) {
      if (frontier & self) {
        best = length;
        break;
      }
      seen |= frontier;
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.out_neighbors(std::countr_zero(f));
      frontier = next & ~seen;
    }
  }
  return best;
}

std::optional<int> acyclic_apart_from_loops(const Digraph& g) {
  Digraph stripped(g);
  for (int v = 0; v < g.size(); ++v) stripped.remove_edge(v, v);
  if (!is_acyclic(stripped)) return std::nullopt;
  return g.loop_count();
}

BitMatrix01 dag_to_matrix(const Digraph& g) {
  if (!is_acyclic(g)) throw std::invalid_argument("dag_to_matrix: digraph has a cycle");
  BitMatrix01 b(g.adjacency());
  for (int v = 0; v < g.size(); ++v) b.set(v, v, true);
  return b;
}

Digraph matrix_to_dag(const BitMatrix01& b) {
  if (!is_unit_spectrum(b.to_int())) {
    throw std::invalid_argument("matrix_to_dag: characteristic polynomial is not (x-1)^n");
  }
  BitMatrix01 a(b);
  for (int v = 0; v < b.size(); ++v) a.set(v, v, false);
  return Digraph(std::move(a));
}

namespace {

void check_permutation(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("relabel: permutation has the wrong length");
  }
  std::uint64_t hit = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((hit >> p) & 1U)) {
      throw std::invalid_argument("relabel: not a bijection on vertex indices");
    }
    hit |= std::uint64_t{1} << p;
  }
}

}  // namespace

Digraph relabel(const Digraph& g, std::span<const int> perm) {
  const int n = g.size();
  check_permutation(perm, n);
  Digraph out(n);
  for (int i = 0; i < n; ++i) {
    for (std::uint64_t row = g.out_neighbors(i); row != 0; row &= row - 1) {
      const int j = std::countr_zero(row);
      out.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

std::uint64_t relabel_packed(std::uint64_t code, int n, std::span<const int> perm) {
  const int cells = n * n;
  std::uint64_t out = 0;
  while (code != 0) {
    const int shift = std::countr_zero(code);
    code &= code - 1;
    const int flat = cells - 1 - shift;
    const int i = perm[static_cast<std::size_t>(flat / n)];
    const int j = perm[static_cast<std::size_t>(flat % n)];
    out |= std::uint64_t{1} << packed_shift(n, i, j);
  }
  return out;
}

bool is_acyclic_packed(std::uint64_t code, int n) {
  // Sink elimination on row masks.
  std::uint64_t rows[kMaxPackedSize];
  for (int i = 0; i < n; ++i) {
    const int shift = n * n - (i + 1) * n;
    // Row i occupies n bits with column 0 most significant; reverse so that
    // bit j is column j.
    const std::uint64_t raw = (code >> shift) & low_mask(n);
    std::uint64_t r = 0;
    for (int j = 0; j < n; ++j) {
      if ((raw >> (n - 1 - j)) & 1U) r |= std::uint64_t{1} << j;
    }
    rows[i] = r;
  }
  std::uint64_t remaining = low_mask(n);
  while (remaining != 0) {
    std::uint64_t sinks = 0;
    for (std::uint64_t rest = remaining; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((rows[v] & remaining) == 0) sinks |= std::uint64_t{1} << v;
    }
    if (sinks == 0) return false;
    remaining &= ~sinks;
  }
  return true;
}

CanonicalKey canonical_key(const Digraph& g) {
  const int n = g.size();
  if (n > kMaxPackedSize) {
    throw std::invalid_argument("canonical_key: exhaustive relabeling limited to n <= 8");
  }
  const std::uint64_t code = g.adjacency().pack();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = code;
  do {
    best = std::min(best, relabel_packed(code, n, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {n, best};
}

}  // namespace dagcount
