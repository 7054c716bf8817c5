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

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "dagcount/digraphs.hpp"
#include "oracles.hpp"

namespace dagcount {
namespace {

Digraph from_code(int n, std::uint64_t code) { return Digraph(BitMatrix01::unpack(n, code)); }

Digraph with_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Digraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(BitMatrixTest, PackingIsRowMajorMostSignificantFirst) {
  BitMatrix01 m(2);
  m.set(0, 0, true);
  EXPECT_EQ(m.pack(), 0b1000U);
  m.set(1, 1, true);
  EXPECT_EQ(m.pack(), 0b1001U);
  EXPECT_EQ(BitMatrix01::unpack(2, 0b0110U).to_string(), "01\n10\n");
}

TEST(BitMatrixTest, IntRoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 8;
    const std::uint64_t code = rng() & ((n * n == 64) ? ~0ULL : ((1ULL << (n * n)) - 1));
    const BitMatrix01 m = BitMatrix01::unpack(n, code);
    EXPECT_EQ(BitMatrix01::from_int(m.to_int()), m);
    EXPECT_EQ(m.pack(), code);
  }
  IntMatrix two(2);
  two(0, 1) = 2;
  EXPECT_THROW(BitMatrix01::from_int(two), std::invalid_argument);
  EXPECT_THROW(BitMatrix01(0), std::invalid_argument);
  EXPECT_THROW(BitMatrix01(65), std::invalid_argument);
}

TEST(AcyclicTest, Examples) {
  EXPECT_TRUE(is_acyclic(Digraph(1)));
  EXPECT_FALSE(is_acyclic(with_edges(1, {{0, 0}})));
  EXPECT_FALSE(is_acyclic(with_edges(2, {{0, 1}, {1, 0}})));
  EXPECT_TRUE(is_acyclic(with_edges(3, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST(AcyclicTest, AgreesWithNilpotencyAndDfsOnAllDigraphsUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const Digraph g = from_code(n, code);
      const bool acyclic = is_acyclic(g);
      ASSERT_EQ(acyclic, is_nilpotent(g.adjacency().to_int()));
      ASSERT_EQ(acyclic, oracle::dfs_acyclic(g));
      ASSERT_EQ(acyclic, is_acyclic_packed(code, n));
    }
  }
}

TEST(GirthTest, Examples) {
  EXPECT_EQ(girth(with_edges(3, {{0, 1}, {1, 2}, {2, 0}})), 3);
  EXPECT_EQ(girth(with_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {3, 4}})), std::nullopt);
  EXPECT_EQ(girth(with_edges(4, {{0, 1}, {1, 2}, {2, 0}, {3, 3}})), 1);
  EXPECT_EQ(girth(with_edges(2, {{0, 1}, {1, 0}})), 2);
}

TEST(GirthTest, FirstPositivePowerTrace) {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const Digraph g = from_code(n, code);
      const IntMatrix a = g.adjacency().to_int();
      std::optional<int> expected;
      IntMatrix power = a;
      for (int k = 1; k <= n; ++k) {
        if (sgn(power.trace()) > 0) {
          expected = k;
          break;
        }
        power = power * a;
      }
      ASSERT_EQ(girth(g), expected) << "n=" << n << " code=" << code;
    }
  }
}

TEST(LoopsTest, AcyclicApartFromLoops) {
  EXPECT_EQ(acyclic_apart_from_loops(with_edges(3, {{0, 1}, {1, 2}})), 0);
  EXPECT_EQ(acyclic_apart_from_loops(with_edges(3, {{0, 0}, {1, 1}, {2, 2}})), 3);
  EXPECT_EQ(acyclic_apart_from_loops(with_edges(2, {{0, 1}, {1, 0}, {0, 0}})), std::nullopt);
}

TEST(BijectionTest, Examples) {
  EXPECT_EQ(dag_to_matrix(Digraph(2)), BitMatrix01::identity(2));
  EXPECT_EQ(dag_to_matrix(with_edges(2, {{0, 1}})).to_string(), "11\n01\n");
  EXPECT_THROW(dag_to_matrix(with_edges(1, {{0, 0}})), std::invalid_argument);
  EXPECT_THROW(dag_to_matrix(with_edges(2, {{0, 1}, {1, 0}})), std::invalid_argument);

  EXPECT_EQ(matrix_to_dag(BitMatrix01::identity(3)), Digraph(3));
  EXPECT_EQ(matrix_to_dag(BitMatrix01::unpack(2, 0b1101)), with_edges(2, {{0, 1}}));
  EXPECT_THROW(matrix_to_dag(BitMatrix01::unpack(2, 0b1111)), std::invalid_argument);
  EXPECT_THROW(matrix_to_dag(BitMatrix01(2)), std::invalid_argument);
}

TEST(BijectionTest, ExhaustiveUpToFour) {
  const std::size_t expected[] = {0, 1, 3, 25, 543};
  for (int n = 1; n <= 4; ++n) {
    std::set<std::uint64_t> images;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const Digraph g = from_code(n, code);
      if (!is_acyclic(g)) continue;
      const BitMatrix01 b = dag_to_matrix(g);
      ASSERT_TRUE(is_unit_spectrum(b.to_int()));
      ASSERT_EQ(matrix_to_dag(b), g);
      images.insert(b.pack());
      // closed walks: trace(B^k) = n for k = 1..2n
      for (unsigned k = 1; k <= static_cast<unsigned>(2 * n); ++k) ASSERT_EQ(power_trace(b.to_int(), k), n);
    }
    EXPECT_EQ(images.size(), expected[n]);
    // Every unit-spectrum matrix is hit.
    std::size_t unit = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const BitMatrix01 b = BitMatrix01::unpack(n, code);
      if (!is_unit_spectrum(b.to_int())) continue;
      ++unit;
      ASSERT_TRUE(images.count(code));
      ASSERT_EQ(dag_to_matrix(matrix_to_dag(b)), b);
    }
    EXPECT_EQ(unit, expected[n]);
  }
}

TEST(RelabelTest, Examples) {
  const Digraph g = with_edges(2, {{0, 1}});
  const std::vector<int> id{0, 1};
  const std::vector<int> swap{1, 0};
  EXPECT_EQ(relabel(g, id), g);
  EXPECT_EQ(relabel(g, swap), with_edges(2, {{1, 0}}));
  const std::vector<int> bad{0, 0};
  EXPECT_THROW(relabel(g, bad), std::invalid_argument);
  const std::vector<int> short_perm{0};
  EXPECT_THROW(relabel(g, short_perm), std::invalid_argument);
}

TEST(RelabelTest, MatchesPermutationMatrixConjugation) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const Digraph g = from_code(n, rng() & ((1ULL << (n * n)) - 1));
    const auto perm = random_perm(rng, n);
    // P[i][perm[i]] = 1
    IntMatrix p(n);
    for (int i = 0; i < n; ++i) p(i, perm[static_cast<std::size_t>(i)]) = 1;
    IntMatrix pt(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) pt(i, j) = p(j, i);
    }
    const Digraph h = relabel(g, perm);
    EXPECT_EQ(h.adjacency().to_int(), pt * g.adjacency().to_int() * p);
    EXPECT_EQ(is_acyclic(h), is_acyclic(g));
    EXPECT_EQ(girth(h), girth(g));
    EXPECT_EQ(h.loop_count(), g.loop_count());
    EXPECT_EQ(relabel_packed(g.adjacency().pack(), n, perm), h.adjacency().pack());
  }
}

TEST(RelabelTest, TopologicalOrderGivesUpperTriangular) {
  for (const auto& adj : oracle::brute_force_dags(4)) {
    Digraph g(4);
    for (int k = 0; k < 16; ++k) {
      if (adj[static_cast<std::size_t>(k)]) g.add_edge(k / 4, k % 4);
    }
    const auto order = topological_order(g);
    ASSERT_TRUE(order.has_value());
    std::vector<int> position(4);
    for (int i = 0; i < 4; ++i) position[static_cast<std::size_t>((*order)[static_cast<std::size_t>(i)])] = i;
    const Digraph h = relabel(g, position);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j <= i; ++j) ASSERT_FALSE(h.has_edge(i, j));
    }
  }
}

TEST(CanonicalKeyTest, Examples) {
  EXPECT_EQ(canonical_key(with_edges(2, {{0, 1}})), canonical_key(with_edges(2, {{1, 0}})));
  EXPECT_NE(canonical_key(Digraph(1)), canonical_key(with_edges(1, {{0, 0}})));
  EXPECT_THROW(canonical_key(Digraph(9)), std::invalid_argument);
}

TEST(CanonicalKeyTest, SixClassesOfThreeVertexDags) {
  const auto dags = oracle::brute_force_dags(3);
  ASSERT_EQ(dags.size(), 25U);
  std::map<CanonicalKey, int> orbit_sizes;
  for (const auto& adj : dags) {
    Digraph g(3);
    for (int k = 0; k < 9; ++k) {
      if (adj[static_cast<std::size_t>(k)]) g.add_edge(k / 3, k % 3);
    }
    ++orbit_sizes[canonical_key(g)];
  }
  EXPECT_EQ(orbit_sizes.size(), 6U);
  int total = 0;
  for (const auto& [key, size] : orbit_sizes) total += size;
  EXPECT_EQ(total, 25);
}

TEST(CanonicalKeyTest, RelabelingInvariant) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const Digraph g = from_code(n, rng() & ((1ULL << (n * n)) - 1));
      const auto perm = random_perm(rng, n);
      ASSERT_EQ(canonical_key(relabel(g, perm)), canonical_key(g));
    }
  }
}

TEST(CanonicalKeyTest, EqualKeysMeanIsomorphic) {
  // n = 3: compare key equality with a direct search for an isomorphism.
  std::vector<int> perm(3);
  for (std::uint64_t a = 0; a < 512; a += 7) {
    for (std::uint64_t b = 0; b < 512; b += 5) {
      const Digraph g = from_code(3, a);
      const Digraph h = from_code(3, b);
      std::iota(perm.begin(), perm.end(), 0);
      bool iso = false;
      do {
        iso = iso || relabel(g, perm) == h;
      } while (std::next_permutation(perm.begin(), perm.end()));
      ASSERT_EQ(canonical_key(g) == canonical_key(h), iso);
    }
  }
}

}  // namespace
}  // namespace dagcount
