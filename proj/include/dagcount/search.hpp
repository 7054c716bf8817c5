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

#ifndef DAGCOUNT_SEARCH_HPP_
#define DAGCOUNT_SEARCH_HPP_

// Exhaustive enumeration engines and the verifiers built on them.
//
// Every engine splits its search space into jobs by fixing a prefix of
// matrix rows; workers claim jobs from a shared counter and each job keeps
// its own tally. Tallies are merged in job order, so results do not depend
// on the worker count.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dagcount/bigint.hpp"
#include "dagcount/digraphs.hpp"
#include "dagcount/exactalg.hpp"

namespace dagcount {

enum class SearchMode {
  kFull,    // all 2^(n^2) matrices, Sturm-based "all eigenvalues real and positive"
  kPruned,  // unit diagonal only, 2^(n^2-n) matrices, acyclicity of B - I
};

std::string_view to_string(SearchMode mode);

inline constexpr int kMaxFullSearchSize = 5;
inline constexpr int kMaxPrunedSearchSize = 6;
inline constexpr int kMaxDagEnumerationSize = 6;
inline constexpr std::size_t kMaxRecordedCounterexamples = 16;
inline constexpr std::uint64_t kDefaultSeed = 20031024;

struct SearchOptions {
  unsigned threads = 0;  // 0: std::thread::hardware_concurrency()
  bool collect_matches = false;
};

struct EnumerationReport {
  int n = 0;
  SearchMode mode = SearchMode::kFull;
  BigCount total_examined = 0;
  BigCount matched = 0;
  std::chrono::nanoseconds elapsed{0};
  BigCount counterexample_count = 0;
  std::vector<std::string> counterexamples;  // at most kMaxRecordedCounterexamples
  std::vector<std::uint64_t> matches;        // packed, ascending; only with collect_matches

  // key: value lines; elapsed time is left out so the text is reproducible.
  std::string to_text() const;
};

// (-1,+1)-matrix; entries are stored as -1 / +1.
class SignMatrix {
 public:
  // Bit (n*n - 1 - (i*n + j)) of code set means entry (i, j) is -1.
  static SignMatrix from_packed(int n, std::uint64_t code);

  int size() const { return n_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  IntMatrix to_int() const;
  std::string to_string() const;  // n lines of '+'/'-'

  bool operator==(const SignMatrix&) const = default;

 private:
  SignMatrix(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {}

  int n_;
  std::vector<int> entries_;
};

using EdgeDistribution = std::map<int, BigCount>;

struct UnlabeledClass {
  CanonicalKey key;
  BigCount orbit_size;
};

// Throws std::out_of_range when n is outside the engine's range.
EnumerationReport count_positive_spectrum_matrices(int n, SearchMode mode,
                                                   const SearchOptions& options = {});

// Recursive edge-set extension over ordered vertex pairs, refusing any edge
// that closes a cycle. Visits every labeled DAG once with its packed
// adjacency and edge count.
void for_each_labeled_dag(int n, const std::function<void(std::uint64_t, int)>& visit);
std::vector<std::uint64_t> labeled_dags(int n);  // packed, ascending
BigCount count_labeled_dags(int n);

std::vector<UnlabeledClass> unlabeled_dag_classes(int n);  // ascending by key
BigCount count_unlabeled_dags(int n);

EdgeDistribution edge_distribution(int n);

std::vector<SignMatrix> find_positive_spectrum_sign_matrices(int n,
                                                             const SearchOptions& options = {});

struct VerificationReport {
  std::string target;
  int n = 0;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> facts;
  BigCount counterexample_count = 0;
  std::vector<std::string> counterexamples;

  void add_fact(std::string key, std::string value);
  void add_counterexample(std::string description);
  std::string to_text() const;
};

// Recurrence = DAG enumeration = matrix enumeration, plus set equality of
// {I + A(g)} and the matched matrices. Full-mode matrix search for n <= 4,
// pruned for n = 5 unless a mode is given.
VerificationReport verify_theorem(int n, const SearchOptions& options = {});
VerificationReport verify_theorem(int n, SearchMode mode, const SearchOptions& options = {});

VerificationReport verify_corollary_i(int n, const SearchOptions& options = {});
VerificationReport verify_corollary_ii(int n, int trials, std::uint64_t seed = kDefaultSeed);
// Strong form is sampled with `trials` random digraphs at n = 5.
VerificationReport verify_corollary_iii(int n, const SearchOptions& options = {}, int trials = 1000,
                                        std::uint64_t seed = kDefaultSeed);
VerificationReport verify_corollary_iv(int n, const SearchOptions& options = {});
VerificationReport verify_corollary_v(int n, const SearchOptions& options = {});
VerificationReport verify_corollary_vi(int n, const SearchOptions& options = {});

// "0110/1011/..." style one-line rendering of a packed matrix.
std::string packed_to_line(std::uint64_t code, int n);

}  // namespace dagcount

#endif  // DAGCOUNT_SEARCH_HPP_
