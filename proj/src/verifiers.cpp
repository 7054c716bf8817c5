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
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dagcount/counting.hpp"
#include "dagcount/search.hpp"
#include "matrix_space.hpp"
#include "parallel.hpp"

namespace dagcount {

namespace {

using detail::Rows;

void check_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw std::out_of_range(std::string(what) + ": n must be in " + std::to_string(lo) + ".." +
                            std::to_string(hi));
  }
}

std::string count_str(std::uint64_t v) { return std::to_string(v); }

// Per-job bookkeeping for the exhaustive verifiers.
struct Tally {
  std::uint64_t examined = 0;
  std::uint64_t hits = 0;
  std::uint64_t secondary = 0;
  std::uint64_t counterexamples = 0;
  std::vector<std::string> recorded;
  std::vector<std::uint64_t> survivors;

  void counterexample(std::string description) {
    ++counterexamples;
    if (recorded.size() < kMaxRecordedCounterexamples) recorded.push_back(std::move(description));
  }
};

Tally merge(std::vector<Tally>& parts) {
  Tally total;
  for (auto& t : parts) {
    total.examined += t.examined;
    total.hits += t.hits;
    total.secondary += t.secondary;
    total.counterexamples += t.counterexamples;
    for (auto& r : t.recorded) {
      if (total.recorded.size() < kMaxRecordedCounterexamples) total.recorded.push_back(std::move(r));
    }
    total.survivors.insert(total.survivors.end(), t.survivors.begin(), t.survivors.end());
  }
  std::sort(total.survivors.begin(), total.survivors.end());
  return total;
}

// Visits every n x n (0,1)-matrix in parallel; visit(tally, rows, entries).
template <class Visit>
Tally for_all_matrices(int n, unsigned threads, Visit visit) {
  const auto space = detail::make_row_space(n, false);
  auto parts = detail::run_jobs<Tally>(space.job_count, threads, [&](std::size_t job) {
    Tally tally;
    detail::SpectrumCache& cache = detail::thread_spectrum_cache();
    std::int8_t entries[kMaxPackedSize * kMaxPackedSize];
    detail::for_each_assignment(space, job, n, [&](const Rows& rows) {
      ++tally.examined;
      detail::rows_to_entries(rows, n, false, entries);
      visit(tally, cache, rows, std::span<const std::int8_t>(entries, static_cast<std::size_t>(n * n)));
    });
    return tally;
  });
  return merge(parts);
}

void finish(VerificationReport& report, const Tally& tally) {
  report.counterexample_count = BigCount(static_cast<unsigned long>(tally.counterexamples));
  for (const auto& r : tally.recorded) report.add_counterexample(r);
}

bool is_unit_char_poly(const SmallCharPoly& c, int n) {
  // (x-1)^n: coefficient of x^k is C(n,k) (-1)^(n-k).
  std::int64_t binom = 1;
  for (int k = 0; k <= n; ++k) {
    const std::int64_t expected = ((n - k) % 2 == 0) ? binom : -binom;
    if (c[static_cast<std::size_t>(k)] != expected) return false;
    binom = binom * (n - k) / (k + 1);
  }
  return true;
}

Digraph digraph_from_rows(const Rows& rows, int n) {
  return Digraph(BitMatrix01::unpack(n, detail::rows_to_packed(rows, n)));
}

std::string line(const Rows& rows, int n) { return packed_to_line(detail::rows_to_packed(rows, n), n); }

}  // namespace

void VerificationReport::add_fact(std::string key, std::string value) {
  facts.emplace_back(std::move(key), std::move(value));
}

void VerificationReport::add_counterexample(std::string description) {
  if (counterexamples.size() < kMaxRecordedCounterexamples) counterexamples.push_back(std::move(description));
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "target: " << target << '\n' << "n: " << n << '\n';
  for (const auto& [key, value] : facts) out << key << ": " << value << '\n';
  out << "counterexamples: " << counterexample_count.get_str() << '\n';
  for (const auto& c : counterexamples) out << "counterexample: " << c << '\n';
  out << "status: " << (passed ? "pass" : "fail") << '\n';
  return out.str();
}

VerificationReport verify_theorem(int n, const SearchOptions& options) {
  return verify_theorem(n, n <= 4 ? SearchMode::kFull : SearchMode::kPruned, options);
}

VerificationReport verify_theorem(int n, SearchMode mode, const SearchOptions& options) {
  check_range(n, 1, 5, "verify_theorem");
  VerificationReport report;
  report.target = "theorem";
  report.n = n;

  const BigCount recurrence = robinson_sequence(n)[static_cast<std::size_t>(n)];
  const auto dags = labeled_dags(n);
  SearchOptions collect = options;
  collect.collect_matches = true;
  const auto matrices = count_positive_spectrum_matrices(n, mode, collect);

  report.add_fact("mode", std::string(to_string(mode)));
  report.add_fact("recurrence", recurrence.get_str());
  report.add_fact("labeled-dags", std::to_string(dags.size()));
  report.add_fact("positive-spectrum-matrices", matrices.matched.get_str());
  report.add_fact("matrices-examined", matrices.total_examined.get_str());

  std::uint64_t failures = 0;
  const BigCount dag_count(static_cast<unsigned long>(dags.size()));
  if (recurrence != dag_count || dag_count != matrices.matched) {
    ++failures;
    report.add_counterexample("count mismatch: recurrence " + recurrence.get_str() + ", dags " +
                              dag_count.get_str() + ", matrices " + matrices.matched.get_str());
  }
  failures += matrices.counterexample_count.get_ui();
  for (const auto& c : matrices.counterexamples) report.add_counterexample("matched matrix breaks trace/det: " + c);

  // I + A(g) for every DAG, compared as sorted streams with the matches.
  std::vector<std::uint64_t> images;
  images.reserve(dags.size());
  for (auto code : dags) images.push_back(dag_to_matrix(Digraph(BitMatrix01::unpack(n, code))).pack());
  std::sort(images.begin(), images.end());
  const bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
  const bool same_set = images == matrices.matches;
  if (!distinct || !same_set) {
    ++failures;
    report.add_counterexample("matrix set differs from {I + A(g)}");
  }
  std::uint64_t round_trip_failures = 0;
  for (auto code : matrices.matches) {
    const Digraph g = matrix_to_dag(BitMatrix01::unpack(n, code));
    if (!is_acyclic(g) || dag_to_matrix(g).pack() != code) {
      ++round_trip_failures;
      report.add_counterexample("round trip failed: " + packed_to_line(code, n));
    }
  }
  failures += round_trip_failures;
  report.add_fact("bijection", distinct && same_set && round_trip_failures == 0 ? "confirmed" : "broken");
  report.counterexample_count = BigCount(static_cast<unsigned long>(failures));
  report.passed = failures == 0;
  return report;
}

VerificationReport verify_corollary_i(int n, const SearchOptions& options) {
  check_range(n, 1, 4, "verify_corollary_i");
  VerificationReport report;
  report.target = "corollary-i";
  report.n = n;
  // hits: positive spectrum; survivors: symmetric positive-spectrum matrices.
  const Tally tally = for_all_matrices(n, options.threads, [n](Tally& t, detail::SpectrumCache& cache,
                                                               const Rows& rows, std::span<const std::int8_t> e) {
    const auto c = char_poly_small(e, n);
    if (!cache.profile(c, n).all_positive()) return;
    ++t.hits;
    if (!is_unit_char_poly(c, n)) t.counterexample("positive spectrum but char poly not (x-1)^n: " + line(rows, n));
    bool symmetric = true;
    for (int i = 0; i < n && symmetric; ++i) {
      for (int j = i + 1; j < n; ++j) symmetric = symmetric && e[static_cast<std::size_t>(i * n + j)] == e[static_cast<std::size_t>(j * n + i)];
    }
    if (symmetric) t.survivors.push_back(detail::rows_to_packed(rows, n));
  });
  const std::uint64_t identity = BitMatrix01::identity(n).pack();
  const bool only_identity = tally.survivors.size() == 1 && tally.survivors[0] == identity;
  report.add_fact("examined", count_str(tally.examined));
  report.add_fact("positive-spectrum", count_str(tally.hits));
  report.add_fact("symmetric-survivors", count_str(tally.survivors.size()));
  for (auto s : tally.survivors) report.add_fact("symmetric-survivor", packed_to_line(s, n));
  finish(report, tally);
  if (!only_identity) {
    report.counterexample_count += 1;
    report.add_counterexample("symmetric survivors are not exactly {I}");
  }
  report.passed = report.counterexample_count == 0;
  return report;
}

namespace {

// Unbiasedness does not matter here; a fixed formula keeps runs
// reproducible across standard libraries.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string matrix_line(const IntMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.size(); ++i) {
    if (i > 0) out += ';';
    for (int j = 0; j < m.size(); ++j) {
      if (j > 0) out += ',';
      out += m(i, j).get_str();
    }
  }
  return out + "]";
}

}  // namespace

VerificationReport verify_corollary_ii(int n, int trials, std::uint64_t seed) {
  check_range(n, 2, 6, "verify_corollary_ii");
  if (trials < 1) throw std::out_of_range("verify_corollary_ii: trials must be positive");
  VerificationReport report;
  report.target = "corollary-ii";
  report.n = n;
  std::mt19937_64 rng(seed);
  const IntMatrix identity = IntMatrix::identity(n);
  std::uint64_t mismatches = 0;

  // (a) random integer matrices with trace <= n.
  std::uint64_t drawn = 0;
  std::uint64_t positive = 0;
  std::uint64_t unipotent = 0;
  for (int t = 0; t < trials;) {
    IntMatrix b(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) b(i, j) = draw(rng, -3, 3);
    }
    ++drawn;
    if (b.trace() > n) continue;
    ++t;
    const bool all_positive = spectrum_profile(b).all_positive();
    const bool nilpotent_shift = is_nilpotent(b - identity);
    positive += all_positive ? 1 : 0;
    unipotent += nilpotent_shift ? 1 : 0;
    if (all_positive != nilpotent_shift) {
      ++mismatches;
      report.add_counterexample("random " + matrix_line(b));
    }
  }

  // (b) I + S U S^-1 with U strictly upper triangular and S unimodular.
  std::uint64_t constructed_positive = 0;
  for (int t = 0; t < trials; ++t) {
    IntMatrix u(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) u(i, j) = draw(rng, -3, 3);
    }
    IntMatrix s = identity;
    IntMatrix s_inv = identity;
    for (int step = 0; step < n; ++step) {
      const int i = static_cast<int>(draw(rng, 0, n - 1));
      int j = static_cast<int>(draw(rng, 0, n - 2));
      if (j >= i) ++j;
      const long c = draw(rng, 0, 1) == 0 ? -1 : 1;
      IntMatrix e = identity;
      IntMatrix e_inv = identity;
      e(i, j) = c;
      e_inv(i, j) = -c;
      s = s * e;
      s_inv = e_inv * s_inv;
    }
    const IntMatrix nil = s * u * s_inv;
    const IntMatrix b = identity + nil;
    const bool all_positive = spectrum_profile(b).all_positive();
    constructed_positive += all_positive ? 1 : 0;
    if (!all_positive || !is_nilpotent(nil)) {
      ++mismatches;
      report.add_counterexample("constructed " + matrix_line(b));
    }
  }

  report.add_fact("seed", std::to_string(seed));
  report.add_fact("random-trials", std::to_string(trials));
  report.add_fact("random-drawn", count_str(drawn));
  report.add_fact("random-positive-spectrum", count_str(positive));
  report.add_fact("random-nilpotent-shift", count_str(unipotent));
  report.add_fact("constructed-trials", std::to_string(trials));
  report.add_fact("constructed-positive-spectrum", count_str(constructed_positive));
  report.counterexample_count = BigCount(static_cast<unsigned long>(mismatches));
  report.passed = mismatches == 0;
  return report;
}

VerificationReport verify_corollary_iii(int n, const SearchOptions& options, int trials, std::uint64_t seed) {
  check_range(n, 2, 5, "verify_corollary_iii");
  VerificationReport report;
  report.target = "corollary-iii";
  report.n = n;
  const bool strong_exhaustive = n <= 4;

  // hits: digraphs with a cycle of length >= 2; survivors: loop-only cyclic
  // digraphs with all-positive spectrum; secondary: girth >= 3.
  std::uint64_t diagonal = 0;
  for (int v = 0; v < n; ++v) diagonal |= std::uint64_t{1} << (n * n - 1 - (v * n + v));
  Tally tally = for_all_matrices(n, options.threads, [n, strong_exhaustive, diagonal](
                                                         Tally& t, detail::SpectrumCache& cache, const Rows& rows,
                                                         std::span<const std::int8_t> e) {
    const std::uint64_t code = detail::rows_to_packed(rows, n);
    if (is_acyclic_packed(code, n)) return;
    const SpectrumProfile& profile = cache.profile(char_poly_small(e, n), n);
    if (is_acyclic_packed(code & ~diagonal, n)) {
      // Only loops close cycles: positive exactly when every vertex has one.
      const bool all_loops = (code & diagonal) == diagonal;
      if (profile.all_positive() != all_loops) {
        t.counterexample("loop-only digraph with unexpected spectrum: " + line(rows, n));
      }
      if (profile.all_positive()) t.survivors.push_back(code);
      return;
    }
    ++t.hits;
    if (profile.positive_count >= n) t.counterexample("cycle of length >= 2 with all-positive spectrum: " + line(rows, n));
    if (!strong_exhaustive) return;
    const auto g = girth(digraph_from_rows(rows, n));
    if (g && *g >= 3) {
      ++t.secondary;
      if (profile.real_count >= n) t.counterexample("girth >= 3 with all-real spectrum: " + line(rows, n));
    }
  });

  std::uint64_t sampled = 0;
  if (!strong_exhaustive) {
    std::mt19937_64 rng(seed);
    detail::SpectrumCache cache;
    std::int8_t entries[kMaxPackedSize * kMaxPackedSize];
    for (int t = 0; t < trials; ++t) {
      // Oriented graphs: no loops, no 2-cycles, so any cycle has length >= 3.
      std::uint64_t code = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const auto choice = rng() % 3;
          if (choice == 1) code |= std::uint64_t{1} << (n * n - 1 - (i * n + j));
          if (choice == 2) code |= std::uint64_t{1} << (n * n - 1 - (j * n + i));
        }
      }
      const Digraph g(BitMatrix01::unpack(n, code));
      const auto gg = girth(g);
      if (!gg || *gg < 3) continue;
      ++sampled;
      for (int k = 0; k < n * n; ++k) entries[k] = static_cast<std::int8_t>((code >> (n * n - 1 - k)) & 1U);
      const auto& profile =
          cache.profile(char_poly_small(std::span<const std::int8_t>(entries, static_cast<std::size_t>(n * n)), n), n);
      if (profile.real_count >= n) tally.counterexample("girth >= 3 with all-real spectrum: " + packed_to_line(code, n));
    }
  }

  report.add_fact("examined", count_str(tally.examined));
  report.add_fact("digraphs-with-long-cycle", count_str(tally.hits));
  report.add_fact("loop-only-positive-exceptions", count_str(tally.survivors.size()));
  if (strong_exhaustive) {
    report.add_fact("girth-at-least-3", count_str(tally.secondary));
    report.add_fact("strong-form", "exhaustive");
  } else {
    report.add_fact("seed", std::to_string(seed));
    report.add_fact("strong-form-samples", std::to_string(trials));
    report.add_fact("girth-at-least-3-sampled", count_str(sampled));
    report.add_fact("strong-form", "sampled");
  }
  finish(report, tally);
  report.passed = tally.counterexamples == 0;
  return report;
}

VerificationReport verify_corollary_iv(int n, const SearchOptions& options) {
  check_range(n, 1, 4, "verify_corollary_iv");
  VerificationReport report;
  report.target = "corollary-iv";
  report.n = n;
  std::vector<IntPolynomial> expected;  // index k: x^(n-k) (x-1)^k
  for (int k = 0; k <= n; ++k) {
    expected.push_back(IntPolynomial::monomial(1, n - k) * IntPolynomial::linear_power(1, k));
  }
  // hits: digraphs with a zeros-and-ones spectrum.
  const Tally tally = for_all_matrices(n, options.threads, [&](Tally& t, detail::SpectrumCache&, const Rows& rows,
                                                               std::span<const std::int8_t> e) {
    const IntPolynomial p = to_int_polynomial(char_poly_small(e, n), n);
    std::optional<int> spectral;
    for (int k = 0; k <= n; ++k) {
      if (p == expected[static_cast<std::size_t>(k)]) spectral = k;
    }
    const auto structural = acyclic_apart_from_loops(digraph_from_rows(rows, n));
    if (spectral) ++t.hits;
    if (spectral != structural) t.counterexample("spectrum and loop structure disagree: " + line(rows, n));
  });
  report.add_fact("examined", count_str(tally.examined));
  report.add_fact("zeros-and-ones-spectra", count_str(tally.hits));
  finish(report, tally);
  report.passed = tally.counterexamples == 0;
  return report;
}

VerificationReport verify_corollary_v(int n, const SearchOptions& options) {
  check_range(n, 1, 5, "verify_corollary_v");
  VerificationReport report;
  report.target = "corollary-v";
  report.n = n;
  SearchOptions collect = options;
  collect.collect_matches = true;
  const auto matrices =
      count_positive_spectrum_matrices(n, n <= 4 ? SearchMode::kFull : SearchMode::kPruned, collect);
  const auto& codes = matrices.matches;

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Orbits of P' B P over the matched matrices.
  std::vector<bool> seen(codes.size(), false);
  std::uint64_t classes = 0;
  std::uint64_t escaped = 0;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (seen[i]) continue;
    ++classes;
    for (const auto& p : perms) {
      const std::uint64_t image = relabel_packed(codes[i], n, p);
      const auto it = std::lower_bound(codes.begin(), codes.end(), image);
      if (it == codes.end() || *it != image) {
        ++escaped;
        continue;
      }
      seen[static_cast<std::size_t>(it - codes.begin())] = true;
    }
  }
  const BigCount unlabeled = count_unlabeled_dags(n);
  report.add_fact("positive-spectrum-matrices", matrices.matched.get_str());
  report.add_fact("matrix-classes", count_str(classes));
  report.add_fact("unlabeled-dags", unlabeled.get_str());
  std::uint64_t failures = escaped;
  if (escaped != 0) report.add_counterexample("positive-spectrum set not closed under relabeling");
  if (unlabeled != BigCount(static_cast<unsigned long>(classes))) {
    ++failures;
    report.add_counterexample("class count " + count_str(classes) + " != unlabeled " + unlabeled.get_str());
  }
  report.counterexample_count = BigCount(static_cast<unsigned long>(failures));
  report.passed = failures == 0;
  return report;
}

VerificationReport verify_corollary_vi(int n, const SearchOptions& options) {
  check_range(n, 1, 4, "verify_corollary_vi");
  VerificationReport report;
  report.target = "corollary-vi";
  report.n = n;
  const auto found = find_positive_spectrum_sign_matrices(n, options);
  report.add_fact("examined", std::to_string(std::uint64_t{1} << (n * n)));
  report.add_fact("summary", std::to_string(found.size()) + " sign matrices found");
  std::uint64_t failures = 0;
  const bool expected_one = n == 1;
  if (expected_one) {
    if (found.size() != 1 || found[0](0, 0) != 1) {
      ++failures;
      report.add_counterexample("n = 1 should yield exactly [1]");
    }
  } else {
    for (const auto& s : found) {
      ++failures;
      std::string text = s.to_string();
      std::replace(text.begin(), text.end(), '\n', '/');
      text.pop_back();
      report.add_counterexample(text);
    }
  }
  for (const auto& s : found) {
    if (expected_one) report.add_fact("found", s(0, 0) > 0 ? "[1]" : "[-1]");
  }
  report.counterexample_count = BigCount(static_cast<unsigned long>(failures));
  report.passed = failures == 0;
  return report;
}

}  // namespace dagcount
