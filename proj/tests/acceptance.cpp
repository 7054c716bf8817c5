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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "dagcount/cli.hpp"
#include "dagcount/counting.hpp"
#include "dagcount/exactalg.hpp"
#include "dagcount/search.hpp"
#include "oracles.hpp"

namespace {

using namespace dagcount;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Outcome sequence_fixture() {
  Outcome o;
  const std::vector<std::string> expected{"1", "3", "25", "543", "29281"};
  const auto start = Clock::now();
  for (int k = 1; k <= 5; ++k) {
    const auto r = cli({"count", "labeled", "--n", std::to_string(k), "--method", "recurrence"});
    o.require(r.code == kExitOk && r.out == expected[static_cast<std::size_t>(k - 1)] + "\n",
              "n=" + std::to_string(k) + " gave '" + r.out + "'");
  }
  const auto ms = elapsed_ms(start);
  o.require(ms < 1000, "took " + std::to_string(ms) + " ms");
  o.detail = o.pass ? "1,3,25,543,29281 in " + std::to_string(ms) + " ms" : o.detail;
  return o;
}

Outcome theorem_triple_check() {
  Outcome o;
  std::string timings;
  for (int k = 1; k <= 5; ++k) {
    const auto start = Clock::now();
    const auto r = cli({"verify", "theorem", "--n", std::to_string(k)});
    const auto ms = elapsed_ms(start);
    o.require(r.code == kExitOk, "n=" + std::to_string(k) + " failed");
    const long long limit = k <= 4 ? 10000 : 120000;
    o.require(ms < limit, "n=" + std::to_string(k) + " took " + std::to_string(ms) + " ms");
    timings += (timings.empty() ? "" : ", ") + ("n=" + std::to_string(k) + " " + std::to_string(ms) + " ms");
  }
  if (o.pass) o.detail = timings;
  return o;
}

Outcome independence_check() {
  Outcome o;
  const auto report = count_positive_spectrum_matrices(4, SearchMode::kFull);
  o.require(report.total_examined == 65536, "examined " + report.total_examined.get_str());
  o.require(report.matched == 543, "matched " + report.matched.get_str());
  if (o.pass) o.detail = "543 of 65536 by Sturm sequences";
  return o;
}

Outcome corollary_suite() {
  Outcome o;
  for (const char* target : {"corollary-i", "corollary-iii", "corollary-iv", "corollary-vi"}) {
    o.require(cli({"verify", target, "--n", "4"}).code == kExitOk, std::string(target) + " failed");
  }
  const auto ii = cli({"verify", "corollary-ii", "--n", "4", "--trials", "1000"});
  o.require(ii.code == kExitOk, "corollary-ii failed");
  o.require(ii.out.find("random-trials: 1000\n") != std::string::npos, "corollary-ii did not run 1000 trials");
  o.require(ii.out.find("counterexamples: 0\n") != std::string::npos, "corollary-ii reported mismatches");
  if (o.pass) o.detail = "i, ii (1000 seeded trials), iii, iv, vi at n=4";
  return o;
}

Outcome unlabeled_counts() {
  Outcome o;
  const auto r = robinson_sequence(5);
  std::string values;
  for (int n = 1; n <= 5; ++n) {
    const auto classes = unlabeled_dag_classes(n);
    const BigCount count = count_unlabeled_dags(n);
    o.require(count == oracle::burnside_unlabeled_dags(n), "n=" + std::to_string(n) + " differs from Burnside");
    o.require(count == static_cast<unsigned long>(classes.size()), "class list size");
    BigCount orbit_sum = 0;
    for (const auto& c : classes) orbit_sum += c.orbit_size;
    o.require(orbit_sum == r[static_cast<std::size_t>(n)], "orbit sum at n=" + std::to_string(n));
    values += (values.empty() ? "" : ",") + count.get_str();
  }
  if (o.pass) o.detail = values + "; orbit sums equal R_n";
  return o;
}

Outcome gf_identity() {
  Outcome o;
  const auto start = Clock::now();
  o.require(gf_identity_check(12), "identity failed");
  auto perturbed = robinson_sequence(12);
  perturbed[7] += 1;
  o.require(!gf_identity_check(12, perturbed), "perturbed control passed");
  const auto ms = elapsed_ms(start);
  o.require(ms < 1000, "took " + std::to_string(ms) + " ms");
  if (o.pass) o.detail = "order 12 holds, perturbed control rejected, " + std::to_string(ms) + " ms";
  return o;
}

Outcome asymptotic_trend() {
  Outcome o;
  const auto r = robinson_sequence(14);
  Rational previous;
  std::string trace;
  for (int n = 6; n <= 14; ++n) {
    const Rational err = asymptotic_relative_error(n, r[static_cast<std::size_t>(n)]);
    // Six significant digits for the report line only; the comparison is exact.
    const BigInt scaled = err.get_num() * 1000000 / err.get_den();
    trace += (trace.empty() ? "" : " ") + std::to_string(n) + ":0." +
             std::string(6 - std::min<std::size_t>(6, scaled.get_str().size()), '0') + scaled.get_str();
    if (n > 6 && err > previous) o.require(false, "increases at n=" + std::to_string(n));
    previous = err;
  }
  o.detail = (o.pass ? "" : o.detail + "; ") + "relative errors " + trace;
  return o;
}

Outcome determinism_under_parallelism() {
  Outcome o;
  const auto one = cli({"--threads", "1", "count", "matrices", "--n", "5"});
  const auto four = cli({"--threads", "4", "count", "matrices", "--n", "5"});
  const auto sixteen = cli({"--threads", "16", "count", "matrices", "--n", "5"});
  o.require(one.code == kExitOk && one.out == "29281\n", "threads=1 gave '" + one.out + "'");
  o.require(four.out == one.out, "threads=4 differs");
  o.require(sixteen.out == one.out, "threads=16 differs");
  if (o.pass) o.detail = "identical stdout for 1, 4, 16 threads";
  return o;
}

oracle::Poly to_poly(const IntPolynomial& p) { return oracle::Poly(p.coeffs().begin(), p.coeffs().end()); }

Outcome exact_arithmetic() {
  Outcome o;
  long cases = 0;
  // (0,1)-matrices, n <= 3: Sturm "all real and positive" against the
  // polynomial identity char_poly == (x-1)^n, and the full Sturm profile
  // against discriminant/Descartes.
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t code = 0; code < total; ++code) {
      IntMatrix m(n);
      for (int i = 0; i < n * n; ++i) m(i / n, i % n) = static_cast<long>((code >> (n * n - 1 - i)) & 1U);
      const IntPolynomial p = char_poly(m);
      const SpectrumProfile sturm = spectrum_profile(m);
      const bool identity = p == IntPolynomial::linear_power(1, n);
      o.require(sturm.all_positive() == identity, "0/1 mismatch at n=" + std::to_string(n));
      const auto [real, positive] = oracle::low_degree_profile(to_poly(p));
      o.require(sturm.real_count == real && sturm.positive_count == positive, "0/1 profile mismatch");
      ++cases;
    }
  }
  // All 3x3 matrices with entries in {-1, 0, 1, 2}: 4^9 = 262144 cases.
  std::array<long, 9> digits{};
  for (long code = 0; code < 262144; ++code) {
    long rest = code;
    for (auto& d : digits) {
      d = rest % 4 - 1;
      rest /= 4;
    }
    const IntMatrix m(3, digits);
    const IntPolynomial p = char_poly(m);
    const SpectrumProfile sturm = polynomial_spectrum_profile(p);
    const auto [real, positive] = oracle::low_degree_profile(to_poly(p));
    if (sturm.real_count != real || sturm.positive_count != positive) {
      o.require(false, "integer profile mismatch");
      break;
    }
    ++cases;
  }
  // The spectral sources must not contain floating-point types at all.
  const std::regex floating(R"(\b(float|double|long double)\b)");
  for (const char* file : {"src/exactalg.cpp", "src/polynomial.cpp", "include/dagcount/exactalg.hpp"}) {
    std::ifstream in(std::string(DAGCOUNT_SOURCE_DIR) + "/" + file);
    o.require(static_cast<bool>(in), std::string("cannot read ") + file);
    std::stringstream text;
    text << in.rdbuf();
    o.require(!std::regex_search(text.str(), floating), std::string("floating-point type in ") + file);
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases agree; no floating-point types in spectral sources";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"sequence fixture", sequence_fixture},
      {"theorem triple-check", theorem_triple_check},
      {"independence check", independence_check},
      {"corollary suite", corollary_suite},
      {"unlabeled counts", unlabeled_counts},
      {"generating-function identity", gf_identity},
      {"asymptotics trend", asymptotic_trend},
      {"determinism under parallelism", determinism_under_parallelism},
      {"exact-arithmetic guarantee", exact_arithmetic},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    failures += outcome.pass ? 0 : 1;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first
              << "): " << outcome.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
