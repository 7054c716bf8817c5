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

#include "dagcount/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "dagcount/counting.hpp"
#include "dagcount/digraphs.hpp"
#include "dagcount/exactalg.hpp"
#include "dagcount/matrix_text.hpp"
#include "dagcount/search.hpp"

namespace dagcount {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CountArgs {
  std::string kind;
  int n = -1;
  std::string method;
  bool no_prune = false;
};

struct VerifyArgs {
  std::string target;
  int n = -1;
  std::uint64_t seed = kDefaultSeed;
  int trials = 1000;
};

struct ClassifyArgs {
  std::string path;
  bool sign = false;
};

struct BfileArgs {
  std::string kind;
  int max_n = -1;
};

int cmd_count(const CountArgs& args, const SearchOptions& options, std::ostream& out, std::ostream& err) {
  if (args.no_prune && args.kind != "matrices") throw UsageError("--no-prune applies to 'count matrices' only");
  if (args.kind == "labeled") {
    const std::string method = args.method.empty() ? "recurrence" : args.method;
    if (method == "recurrence") {
      if (args.n < 0) throw UsageError("--n must be >= 0");
      out << robinson_sequence(args.n).back().get_str() << '\n';
    } else {
      out << count_labeled_dags(args.n).get_str() << '\n';
    }
    return kExitOk;
  }
  if (!args.method.empty() && args.method != "enumeration") {
    throw UsageError("'count " + args.kind + "' supports --method enumeration only");
  }
  if (args.kind == "unlabeled") {
    out << count_unlabeled_dags(args.n).get_str() << '\n';
    return kExitOk;
  }
  const auto report = count_positive_spectrum_matrices(args.n, args.no_prune ? SearchMode::kFull : SearchMode::kPruned,
                                                       options);
  out << report.matched.get_str() << '\n';
  err << "examined " << report.total_examined.get_str() << " matrices (" << to_string(report.mode) << ") in "
      << std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count() << " ms\n";
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, const SearchOptions& options, std::ostream& out) {
  if (args.trials < 1) throw UsageError("--trials must be positive");
  VerificationReport report;
  const std::string& t = args.target;
  if (t == "theorem") {
    report = verify_theorem(args.n, options);
  } else if (t == "corollary-i") {
    report = verify_corollary_i(args.n, options);
  } else if (t == "corollary-ii") {
    report = verify_corollary_ii(args.n, args.trials, args.seed);
  } else if (t == "corollary-iii") {
    report = verify_corollary_iii(args.n, options, args.trials, args.seed);
  } else if (t == "corollary-iv") {
    report = verify_corollary_iv(args.n, options);
  } else if (t == "corollary-v") {
    report = verify_corollary_v(args.n, options);
  } else {
    report = verify_corollary_vi(args.n, options);
  }
  out << report.to_text();
  return report.passed ? kExitOk : kExitFailed;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

int cmd_classify(const ClassifyArgs& args, std::ostream& out) {
  std::ifstream file(args.path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + args.path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  ParsedMatrix parsed;
  try {
    parsed = parse_matrix_text(buffer.str(), args.sign);
  } catch (const MatrixParseError& e) {
    throw UsageError(args.path + ": " + e.what());
  }
  const IntMatrix& m = parsed.values;
  const int n = m.size();
  const IntPolynomial p = char_poly(m);
  const SpectrumProfile profile = polynomial_spectrum_profile(p);
  const bool unit = p == IntPolynomial::linear_power(1, n);
  const auto zeros_ones = zeros_and_ones_spectrum(m);

  out << "n: " << n << '\n';
  out << "charpoly: " << factored_char_poly(p) << '\n';
  out << "charpoly-expanded: " << p.to_string() << '\n';
  out << "unit-spectrum: " << yes_no(unit) << '\n';
  out << "zeros-and-ones: " << (zeros_ones ? "k=" + std::to_string(*zeros_ones) : std::string("none")) << '\n';
  out << "real-eigenvalues: " << profile.real_count << '\n';
  out << "positive-eigenvalues: " << profile.positive_count << '\n';
  out << "determinant: " << determinant(m).get_str() << '\n';
  if (parsed.sign) return kExitOk;

  const Digraph g(BitMatrix01::from_int(m));
  const auto cycle = girth(g);
  const auto apart = acyclic_apart_from_loops(g);
  out << "acyclic: " << yes_no(is_acyclic(g)) << '\n';
  out << "girth: " << (cycle ? std::to_string(*cycle) : std::string("none")) << '\n';
  out << "loops: " << g.loop_count() << '\n';
  out << "acyclic-apart-from-loops: " << (apart ? "k=" + std::to_string(*apart) : std::string("no")) << '\n';

  bool unit_diagonal = true;
  for (int v = 0; v < n; ++v) unit_diagonal = unit_diagonal && g.has_edge(v, v);
  if (!unit_diagonal) {
    out << "acyclic after I-subtraction: n/a\n";
    return kExitOk;
  }
  Digraph shifted(g);
  for (int v = 0; v < n; ++v) shifted.remove_edge(v, v);
  out << "acyclic after I-subtraction: " << yes_no(is_acyclic(shifted)) << '\n';
  if (unit) {
    const Digraph dag = matrix_to_dag(g.adjacency());
    std::string edges;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!dag.has_edge(i, j)) continue;
        if (!edges.empty()) edges += ' ';
        edges += std::to_string(i + 1) + "->" + std::to_string(j + 1);
      }
    }
    out << "dag-edges: " << (edges.empty() ? "none" : edges) << '\n';
  }
  return kExitOk;
}

int cmd_bfile(const BfileArgs& args, std::ostream& out) {
  if (args.kind == "labeled") {
    if (args.max_n < 0) throw UsageError("--max-n must be >= 0");
    const auto r = robinson_sequence(args.max_n);
    for (std::size_t i = 0; i < r.size(); ++i) out << i << ' ' << r[i].get_str() << '\n';
    return kExitOk;
  }
  if (args.max_n < 1 || args.max_n > kMaxDagEnumerationSize) throw UsageError("--max-n must be in 1..6 for unlabeled");
  for (int n = 1; n <= args.max_n; ++n) out << n << ' ' << count_unlabeled_dags(n).get_str() << '\n';
  return kExitOk;
}

}  // namespace

std::string factored_char_poly(const IntPolynomial& p) {
  const auto factors = squarefree_decompose(p);
  if (factors.empty()) return p.to_string();
  if (factors.size() == 1 && factors[0].multiplicity == 1) return factors[0].factor.to_string();
  std::string out;
  for (const auto& [factor, multiplicity] : factors) {
    if (!out.empty()) out += '*';
    const bool single_term =
        std::count_if(factor.coeffs().begin(), factor.coeffs().end(), [](const BigInt& c) { return sgn(c) != 0; }) == 1;
    out += single_term ? factor.to_string() : "(" + factor.to_string() + ")";
    if (multiplicity > 1) out += "^" + std::to_string(multiplicity);
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of acyclic digraphs and positive-spectrum (0,1)-matrices", "dagcount"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads for search commands (default: all cores)")
      ->check(CLI::Range(1U, 1024U));

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Print an exact count");
  count_cmd->add_option("kind", count.kind)->required()->check(CLI::IsMember({"labeled", "unlabeled", "matrices"}));
  count_cmd->add_option("--n", count.n, "Number of vertices / matrix size")->required();
  count_cmd->add_option("--method", count.method)->check(CLI::IsMember({"recurrence", "enumeration"}));
  count_cmd->add_flag("--no-prune", count.no_prune, "Search all 2^(n^2) matrices with the Sturm predicate");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive or randomized verifier");
  verify_cmd->add_option("target", verify.target)
      ->required()
      ->check(CLI::IsMember({"theorem", "corollary-i", "corollary-ii", "corollary-iii", "corollary-iv",
                             "corollary-v", "corollary-vi"}));
  verify_cmd->add_option("--n", verify.n)->required();
  verify_cmd->add_option("--seed", verify.seed, "Seed for randomized verifiers");
  verify_cmd->add_option("--trials", verify.trials, "Random trials for randomized verifiers");

  ClassifyArgs classify;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a matrix file by its spectrum");
  classify_cmd->add_option("file", classify.path)->required();
  classify_cmd->add_flag("--sign", classify.sign, "Entries are '+'/'-' instead of '0'/'1'");

  BfileArgs bfile;
  auto* bfile_cmd = app.add_subcommand("bfile", "Emit an OEIS b-file");
  bfile_cmd->add_option("kind", bfile.kind)->required()->check(CLI::IsMember({"labeled", "unlabeled"}));
  bfile_cmd->add_option("--max-n", bfile.max_n)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  SearchOptions options;
  options.threads = threads;
  try {
    if (count_cmd->parsed()) return cmd_count(count, options, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, options, out);
    if (classify_cmd->parsed()) return cmd_classify(classify, out);
    return cmd_bfile(bfile, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace dagcount
