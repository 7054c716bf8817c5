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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dagcount/counting.hpp"
#include "dagcount/digraphs.hpp"
#include "dagcount/exactalg.hpp"
#include "dagcount/search.hpp"

namespace py = pybind11;
using namespace dagcount;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10)));
}

BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

IntMatrix matrix_from_rows(const std::vector<std::vector<py::int_>>& rows) {
  const int n = static_cast<int>(rows.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw std::invalid_argument("matrix must be square");
    }
    for (int j = 0; j < n; ++j) m(i, j) = from_py(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

Digraph digraph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Digraph g(n);
  for (const auto& [from, to] : edges) g.add_edge(from, to);
  return g;
}

py::list poly_to_list(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

py::dict report_to_dict(const VerificationReport& r) {
  py::dict d;
  d["target"] = r.target;
  d["n"] = r.n;
  d["passed"] = r.passed;
  py::dict facts;
  for (const auto& [k, v] : r.facts) facts[py::str(k)] = v;
  d["facts"] = facts;
  d["counterexample_count"] = to_py(r.counterexample_count);
  d["counterexamples"] = r.counterexamples;
  d["text"] = r.to_text();
  return d;
}

SearchMode parse_mode(const std::string& mode) {
  if (mode == "full") return SearchMode::kFull;
  if (mode == "pruned") return SearchMode::kPruned;
  throw std::invalid_argument("mode must be 'full' or 'pruned'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counting of acyclic digraphs and positive-spectrum (0,1)-matrices";

  m.def("robinson_sequence", [](int n_max) {
    py::list out;
    for (const auto& v : robinson_sequence(n_max)) out.append(to_py(v));
    return out;
  }, py::arg("n_max"));
  m.def("gf_identity_check", [](int order) { return gf_identity_check(order); }, py::arg("order"));
  m.def("asymptotic_estimate", [](int n) {
    const Rational q = asymptotic_estimate(n);
    return py::make_tuple(to_py(q.get_num()), to_py(q.get_den()));
  }, py::arg("n"), "Exact estimate as a (numerator, denominator) pair.");

  m.def("char_poly", [](const std::vector<std::vector<py::int_>>& rows) {
    return poly_to_list(char_poly(matrix_from_rows(rows)));
  }, py::arg("matrix"), "Coefficients of det(xI - M), constant term first.");
  m.def("spectrum_profile", [](const std::vector<std::vector<py::int_>>& rows) {
    const auto p = spectrum_profile(matrix_from_rows(rows));
    return py::make_tuple(p.real_count, p.positive_count, p.degree);
  }, py::arg("matrix"));
  m.def("is_unit_spectrum", [](const std::vector<std::vector<py::int_>>& rows) {
    return is_unit_spectrum(matrix_from_rows(rows));
  }, py::arg("matrix"));
  m.def("is_nilpotent", [](const std::vector<std::vector<py::int_>>& rows) {
    return is_nilpotent(matrix_from_rows(rows));
  }, py::arg("matrix"));
  m.def("count_real_roots", [](const std::vector<py::int_>& coeffs) {
    std::vector<BigInt> c;
    for (const auto& v : coeffs) c.push_back(from_py(v));
    return count_real_roots(IntPolynomial(std::move(c)));
  }, py::arg("coeffs"));

  m.def("is_acyclic", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return is_acyclic(digraph_from_edges(n, edges));
  }, py::arg("n"), py::arg("edges"), "Vertices are 0-based.");
  m.def("girth", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return girth(digraph_from_edges(n, edges));
  }, py::arg("n"), py::arg("edges"));
  m.def("canonical_key", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return canonical_key(digraph_from_edges(n, edges)).to_string();
  }, py::arg("n"), py::arg("edges"));

  m.def("count_labeled_dags", [](int n) { return to_py(count_labeled_dags(n)); }, py::arg("n"));
  m.def("count_unlabeled_dags", [](int n) { return to_py(count_unlabeled_dags(n)); }, py::arg("n"));
  m.def("edge_distribution", [](int n) {
    py::dict out;
    for (const auto& [q, c] : edge_distribution(n)) out[py::int_(q)] = to_py(c);
    return out;
  }, py::arg("n"));
  m.def("count_positive_spectrum_matrices", [](int n, const std::string& mode, unsigned threads) {
    SearchOptions options;
    options.threads = threads;
    EnumerationReport r;
    {
      py::gil_scoped_release release;
      r = count_positive_spectrum_matrices(n, parse_mode(mode), options);
    }
    py::dict d;
    d["n"] = r.n;
    d["mode"] = std::string(to_string(r.mode));
    d["examined"] = to_py(r.total_examined);
    d["matched"] = to_py(r.matched);
    d["counterexample_count"] = to_py(r.counterexample_count);
    return d;
  }, py::arg("n"), py::arg("mode") = "pruned", py::arg("threads") = 0U);

  m.def("verify", [](const std::string& target, int n, int trials, std::uint64_t seed, unsigned threads) {
    SearchOptions options;
    options.threads = threads;
    VerificationReport r;
    {
      py::gil_scoped_release release;
      if (target == "theorem") r = verify_theorem(n, options);
      else if (target == "corollary-i") r = verify_corollary_i(n, options);
      else if (target == "corollary-ii") r = verify_corollary_ii(n, trials, seed);
      else if (target == "corollary-iii") r = verify_corollary_iii(n, options, trials, seed);
      else if (target == "corollary-iv") r = verify_corollary_iv(n, options);
      else if (target == "corollary-v") r = verify_corollary_v(n, options);
      else if (target == "corollary-vi") r = verify_corollary_vi(n, options);
      else throw std::invalid_argument("unknown target: " + target);
    }
    return report_to_dict(r);
  }, py::arg("target"), py::arg("n"), py::arg("trials") = 1000, py::arg("seed") = kDefaultSeed,
     py::arg("threads") = 0U);
}
