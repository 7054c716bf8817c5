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
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dagcount/search.hpp"
#include "matrix_space.hpp"
#include "parallel.hpp"

namespace dagcount {

namespace detail {

RowSpace make_row_space(int n, bool unit_diagonal) {
  RowSpace space;
  space.n = n;
  space.unit_diagonal = unit_diagonal;
  const int free_per_row = unit_diagonal ? n - 1 : n;
  space.free_bits = free_per_row * n;
  space.patterns.resize(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    auto& p = space.patterns[static_cast<std::size_t>(r)];
    p.reserve(std::size_t{1} << free_per_row);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free_per_row); ++bits) {
      if (!unit_diagonal) {
        p.push_back(bits);
        continue;
      }
      // Spread the n-1 free bits around column r, then set the diagonal.
      const std::uint64_t low = bits & ((std::uint64_t{1} << r) - 1);
      const std::uint64_t high = (bits >> r) << (r + 1);
      p.push_back(low | high | (std::uint64_t{1} << r));
    }
  }
  const std::size_t per_row = std::size_t{1} << free_per_row;
  space.prefix_rows = 0;
  space.job_count = 1;
  while (space.prefix_rows < n - 1 && space.job_count < 256) {
    ++space.prefix_rows;
    space.job_count *= per_row;
  }
  return space;
}

std::uint64_t rows_to_packed(const Rows& rows, int n) {
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      code = (code << 1) | ((rows[static_cast<std::size_t>(i)] >> j) & 1U);
    }
  }
  return code;
}

void rows_to_entries(const Rows& rows, int n, bool sign, std::int8_t* out) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool bit = (rows[static_cast<std::size_t>(i)] >> j) & 1U;
      out[i * n + j] = sign ? (bit ? -1 : 1) : (bit ? 1 : 0);
    }
  }
}

const SpectrumProfile& SpectrumCache::profile(const SmallCharPoly& coeffs, int n) {
  auto it = cache_.find(coeffs);
  if (it == cache_.end()) {
    it = cache_.emplace(coeffs, polynomial_spectrum_profile(to_int_polynomial(coeffs, n))).first;
  }
  return it->second;
}

SpectrumCache& thread_spectrum_cache() {
  thread_local SpectrumCache cache;
  return cache;
}

}  // namespace detail

namespace {

using detail::Rows;

struct MatrixTally {
  std::uint64_t examined = 0;
  std::uint64_t matched = 0;
  std::uint64_t counterexamples = 0;
  std::vector<std::uint64_t> counterexample_codes;
  std::vector<std::uint64_t> matches;

  void counterexample(std::uint64_t code) {
    ++counterexamples;
    if (counterexample_codes.size() < kMaxRecordedCounterexamples) counterexample_codes.push_back(code);
  }
};

std::uint64_t low_mask(int n) { return (std::uint64_t{1} << n) - 1; }

// Rows [0, count) must form an acyclic digraph on those vertices, ignoring
// edges leaving the range.
bool prefix_acyclic(const Rows& adj, int count) {
  std::uint64_t remaining = low_mask(count);
  while (remaining != 0) {
    std::uint64_t sinks = 0;
    for (std::uint64_t rest = remaining; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((adj[static_cast<std::size_t>(v)] & remaining) == 0) sinks |= std::uint64_t{1} << v;
    }
    if (sinks == 0) return false;
    remaining &= ~sinks;
  }
  return true;
}

MatrixTally pruned_job(const detail::RowSpace& space, std::size_t job, bool collect) {
  const int n = space.n;
  const int last = n - 1;
  const std::uint64_t last_bit = std::uint64_t{1} << last;
  const auto& last_patterns = space.patterns[static_cast<std::size_t>(last)];
  MatrixTally tally;
  detail::for_each_assignment(space, job, last, [&](const Rows& b) {
    // A = B - I on the first n-1 vertices.
    Rows a{};
    for (int i = 0; i < last; ++i) {
      a[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] & ~(std::uint64_t{1} << i);
    }
    tally.examined += last_patterns.size();
    if (!prefix_acyclic(a, last)) return;
    // Vertices among the first n-1 with a path to the last vertex; an edge
    // from the last vertex into this set closes a cycle.
    std::uint64_t reaches_last = 0;
    for (int i = 0; i < last; ++i) {
      if (a[static_cast<std::size_t>(i)] & last_bit) reaches_last |= std::uint64_t{1} << i;
    }
    for (bool grew = true; grew;) {
      grew = false;
      for (int i = 0; i < last; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if (!(reaches_last & bit) && (a[static_cast<std::size_t>(i)] & reaches_last)) {
          reaches_last |= bit;
          grew = true;
        }
      }
    }
    for (const std::uint64_t row : last_patterns) {
      if ((row & ~last_bit) & reaches_last) continue;
      ++tally.matched;
      if (collect) {
        Rows full = b;
        full[static_cast<std::size_t>(last)] = row;
        tally.matches.push_back(detail::rows_to_packed(full, n));
      }
    }
  });
  return tally;
}

MatrixTally full_job(const detail::RowSpace& space, std::size_t job, bool collect) {
  const int n = space.n;
  MatrixTally tally;
  detail::SpectrumCache& cache = detail::thread_spectrum_cache();
  std::int8_t entries[kMaxPackedSize * kMaxPackedSize];
  const std::size_t cells = static_cast<std::size_t>(n * n);
  const std::int64_t unit_det_constant = (n % 2 == 0) ? 1 : -1;  // (-1)^n det B with det B = 1
  detail::for_each_assignment(space, job, n, [&](const Rows& b) {
    ++tally.examined;
    detail::rows_to_entries(b, n, false, entries);
    const SmallCharPoly c = char_poly_small(std::span<const std::int8_t>(entries, cells), n);
    if (!cache.profile(c, n).all_positive()) return;
    ++tally.matched;
    const std::uint64_t code = detail::rows_to_packed(b, n);
    if (collect) tally.matches.push_back(code);
    bool unit_diagonal = true;
    for (int i = 0; i < n; ++i) unit_diagonal = unit_diagonal && ((b[static_cast<std::size_t>(i)] >> i) & 1U);
    if (!unit_diagonal || c[0] != unit_det_constant) tally.counterexample(code);
  });
  return tally;
}

}  // namespace

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::kFull ? "full" : "diagonal-pruned";
}

std::string packed_to_line(std::uint64_t code, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i > 0) out += '/';
    for (int j = 0; j < n; ++j) out += ((code >> (n * n - 1 - (i * n + j))) & 1U) ? '1' : '0';
  }
  return out;
}

std::string EnumerationReport::to_text() const {
  std::ostringstream out;
  out << "n: " << n << '\n'
      << "mode: " << to_string(mode) << '\n'
      << "examined: " << total_examined.get_str() << '\n'
      << "matched: " << matched.get_str() << '\n'
      << "counterexamples: " << counterexample_count.get_str() << '\n';
  for (const auto& c : counterexamples) out << "counterexample: " << c << '\n';
  return out.str();
}

EnumerationReport count_positive_spectrum_matrices(int n, SearchMode mode, const SearchOptions& options) {
  const int limit = mode == SearchMode::kFull ? kMaxFullSearchSize : kMaxPrunedSearchSize;
  if (n < 1 || n > limit) {
    throw std::out_of_range("count_positive_spectrum_matrices: n must be in 1.." + std::to_string(limit) +
                            " for " + std::string(to_string(mode)) + " mode");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto space = detail::make_row_space(n, mode == SearchMode::kPruned);
  const bool collect = options.collect_matches;
  auto tallies = detail::run_jobs<MatrixTally>(space.job_count, options.threads, [&](std::size_t job) {
    return mode == SearchMode::kFull ? full_job(space, job, collect) : pruned_job(space, job, collect);
  });

  EnumerationReport report;
  report.n = n;
  report.mode = mode;
  for (auto& t : tallies) {
    report.total_examined += BigCount(static_cast<unsigned long>(t.examined));
    report.matched += BigCount(static_cast<unsigned long>(t.matched));
    report.counterexample_count += BigCount(static_cast<unsigned long>(t.counterexamples));
    for (auto code : t.counterexample_codes) {
      if (report.counterexamples.size() < kMaxRecordedCounterexamples) {
        report.counterexamples.push_back(packed_to_line(code, n));
      }
    }
    if (collect) report.matches.insert(report.matches.end(), t.matches.begin(), t.matches.end());
  }
  std::sort(report.matches.begin(), report.matches.end());
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

namespace {

void check_dag_range(int n, const char* what) {
  if (n < 1 || n > kMaxDagEnumerationSize) {
    throw std::out_of_range(std::string(what) + ": n must be in 1..6");
  }
}

struct DagExtender {
  int n;
  std::vector<std::pair<int, int>> pairs;
  const std::function<void(std::uint64_t, int)>* visit;

  // reach[v]: vertices reachable from v by a nonempty path.
  void extend(std::size_t next, std::array<std::uint8_t, kMaxPackedSize> reach, std::uint64_t code,
              int edges) const {
    if (next == pairs.size()) {
      (*visit)(code, edges);
      return;
    }
    extend(next + 1, reach, code, edges);
    const auto [from, to] = pairs[next];
    // from -> to closes a cycle exactly when `to` already reaches `from`.
    if ((reach[static_cast<std::size_t>(to)] >> from) & 1U) return;
    const auto gained = static_cast<std::uint8_t>(reach[static_cast<std::size_t>(to)] | (1U << to));
    for (int u = 0; u < n; ++u) {
      if (u == from || ((reach[static_cast<std::size_t>(u)] >> from) & 1U)) {
        reach[static_cast<std::size_t>(u)] |= gained;
      }
    }
    extend(next + 1, reach, code | (std::uint64_t{1} << (n * n - 1 - (from * n + to))), edges + 1);
  }
};

}  // namespace

void for_each_labeled_dag(int n, const std::function<void(std::uint64_t, int)>& visit) {
  check_dag_range(n, "for_each_labeled_dag");
  DagExtender extender{n, {}, &visit};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) extender.pairs.emplace_back(i, j);
    }
  }
  extender.extend(0, {}, 0, 0);
}

std::vector<std::uint64_t> labeled_dags(int n) {
  std::vector<std::uint64_t> out;
  for_each_labeled_dag(n, [&](std::uint64_t code, int) { out.push_back(code); });
  std::sort(out.begin(), out.end());
  return out;
}

BigCount count_labeled_dags(int n) {
  std::uint64_t count = 0;
  for_each_labeled_dag(n, [&](std::uint64_t, int) { ++count; });
  return BigCount(static_cast<unsigned long>(count));
}

std::vector<UnlabeledClass> unlabeled_dag_classes(int n) {
  check_dag_range(n, "unlabeled_dag_classes");
  const auto dags = labeled_dags(n);
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<bool> visited(dags.size(), false);
  std::vector<UnlabeledClass> classes;
  std::vector<std::size_t> orbit;
  for (std::size_t idx = 0; idx < dags.size(); ++idx) {
    if (visited[idx]) continue;
    orbit.clear();
    std::uint64_t key = dags[idx];
    for (const auto& p : perms) {
      const std::uint64_t image = relabel_packed(dags[idx], n, p);
      const auto pos = static_cast<std::size_t>(
          std::lower_bound(dags.begin(), dags.end(), image) - dags.begin());
      if (!visited[pos]) {
        visited[pos] = true;
        orbit.push_back(pos);
      }
      key = std::min(key, image);
    }
    classes.push_back({CanonicalKey{n, key}, BigCount(static_cast<unsigned long>(orbit.size()))});
  }
  std::sort(classes.begin(), classes.end(),
            [](const UnlabeledClass& a, const UnlabeledClass& b) { return a.key < b.key; });
  return classes;
}

BigCount count_unlabeled_dags(int n) {
  return BigCount(static_cast<unsigned long>(unlabeled_dag_classes(n).size()));
}

EdgeDistribution edge_distribution(int n) {
  std::map<int, std::uint64_t> raw;
  for_each_labeled_dag(n, [&](std::uint64_t, int edges) { ++raw[edges]; });
  EdgeDistribution out;
  for (const auto& [q, count] : raw) out[q] = BigCount(static_cast<unsigned long>(count));
  return out;
}

SignMatrix SignMatrix::from_packed(int n, std::uint64_t code) {
  if (n < 1 || n > kMaxPackedSize) throw std::invalid_argument("SignMatrix: n must be in 1..8");
  std::vector<int> entries(static_cast<std::size_t>(n * n));
  for (int k = 0; k < n * n; ++k) {
    entries[static_cast<std::size_t>(k)] = ((code >> (n * n - 1 - k)) & 1U) ? -1 : 1;
  }
  return SignMatrix(n, std::move(entries));
}

IntMatrix SignMatrix::to_int() const {
  IntMatrix m(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  }
  return m;
}

std::string SignMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out += (*this)(i, j) > 0 ? '+' : '-';
    out += '\n';
  }
  return out;
}

std::vector<SignMatrix> find_positive_spectrum_sign_matrices(int n, const SearchOptions& options) {
  if (n < 1 || n > 4) throw std::out_of_range("find_positive_spectrum_sign_matrices: n must be in 1..4");
  const auto space = detail::make_row_space(n, false);
  const std::size_t cells = static_cast<std::size_t>(n * n);
  auto found = detail::run_jobs<std::vector<std::uint64_t>>(space.job_count, options.threads, [&](std::size_t job) {
    std::vector<std::uint64_t> hits;
    detail::SpectrumCache& cache = detail::thread_spectrum_cache();
    std::int8_t entries[kMaxPackedSize * kMaxPackedSize];
    detail::for_each_assignment(space, job, n, [&](const Rows& rows) {
      detail::rows_to_entries(rows, n, true, entries);
      const auto c = char_poly_small(std::span<const std::int8_t>(entries, cells), n);
      if (cache.profile(c, n).all_positive()) hits.push_back(detail::rows_to_packed(rows, n));
    });
    return hits;
  });
  std::vector<std::uint64_t> codes;
  for (const auto& f : found) codes.insert(codes.end(), f.begin(), f.end());
  std::sort(codes.begin(), codes.end());
  std::vector<SignMatrix> out;
  out.reserve(codes.size());
  for (auto code : codes) out.push_back(SignMatrix::from_packed(n, code));
  return out;
}

}  // namespace dagcount
