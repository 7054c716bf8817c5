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

#ifndef DAGCOUNT_DIGRAPHS_HPP_
#define DAGCOUNT_DIGRAPHS_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dagcount/exactalg.hpp"

namespace dagcount {

inline constexpr int kMaxBitMatrixSize = 64;
// Largest n whose n*n entries fit one packed 64-bit word.
inline constexpr int kMaxPackedSize = 8;

// Square (0,1)-matrix with one 64-bit word per row; bit j of row i is entry
// (i, j). Bits at or beyond column n are always clear.
class BitMatrix01 {
 public:
  explicit BitMatrix01(int n);

  static BitMatrix01 identity(int n);
  // Throws std::invalid_argument if any entry is outside {0, 1}.
  static BitMatrix01 from_int(const IntMatrix& m);

  // Row-major packing for n <= kMaxPackedSize: entry (0,0) is the most
  // significant of the n*n used bits, so numeric order is lexicographic
  // order of the row-major bit string.
  static BitMatrix01 unpack(int n, std::uint64_t code);
  std::uint64_t pack() const;

  int size() const { return n_; }
  bool get(int i, int j) const { return (rows_[static_cast<std::size_t>(i)] >> j) & 1U; }
  void set(int i, int j, bool value);
  std::uint64_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  int popcount() const;

  IntMatrix to_int() const;
  std::string to_string() const;  // n lines of '0'/'1'

  auto operator<=>(const BitMatrix01&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> rows_;
};

// Labeled digraph on vertices 0..n-1; at most one edge per ordered pair,
// loops and 2-cycles allowed.
class Digraph {
 public:
  explicit Digraph(int n) : adjacency_(n) {}
  explicit Digraph(BitMatrix01 adjacency) : adjacency_(std::move(adjacency)) {}

  int size() const { return adjacency_.size(); }
  const BitMatrix01& adjacency() const { return adjacency_; }

  bool has_edge(int from, int to) const { return adjacency_.get(from, to); }
  void add_edge(int from, int to) { adjacency_.set(from, to, true); }
  void remove_edge(int from, int to) { adjacency_.set(from, to, false); }
  std::uint64_t out_neighbors(int v) const { return adjacency_.row(v); }

  int edge_count() const { return adjacency_.popcount(); }
  int loop_count() const;

  bool operator==(const Digraph&) const = default;

 private:
  BitMatrix01 adjacency_;
};

struct CanonicalKey {
  int n = 0;
  std::uint64_t bits = 0;  // packed as BitMatrix01::pack

  std::string to_string() const;
  auto operator<=>(const CanonicalKey&) const = default;
};

// Vertices in an order where every edge goes forward, or nullopt when the
// digraph has a cycle (a loop counts). Repeated source elimination.
std::optional<std::vector<int>> topological_order(const Digraph& g);
bool is_acyclic(const Digraph& g);

// Shortest directed cycle length; loops have length 1. Absent when acyclic.
std::optional<int> girth(const Digraph& g);

// Number of loops if removing them leaves an acyclic digraph.
std::optional<int> acyclic_apart_from_loops(const Digraph& g);

// B = I + A(g). Throws std::invalid_argument unless g is acyclic.
BitMatrix01 dag_to_matrix(const Digraph& g);

// Digraph with adjacency B - I. Throws std::invalid_argument unless
// char_poly(b) == (x-1)^n.
Digraph matrix_to_dag(const BitMatrix01& b);

// Vertex i of g becomes vertex perm[i]; the adjacency of the result is
// P' A P. Throws std::invalid_argument if perm is not a bijection.
Digraph relabel(const Digraph& g, std::span<const int> perm);

// Minimum packed adjacency over all n! relabelings. Requires n <= 8.
CanonicalKey canonical_key(const Digraph& g);

// Packed-word helpers shared with the enumeration engines (n <= 8).
std::uint64_t relabel_packed(std::uint64_t code, int n, std::span<const int> perm);
bool is_acyclic_packed(std::uint64_t code, int n);

}  // namespace dagcount

#endif  // DAGCOUNT_DIGRAPHS_HPP_
