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

#include <stdexcept>
#include <utility>

#include "dagcount/counting.hpp"

namespace dagcount {

std::vector<BigCount> robinson_sequence(int n_max) {
  if (n_max < 0) throw std::invalid_argument("robinson_sequence: n_max must be >= 0");
  std::vector<BigCount> r(static_cast<std::size_t>(n_max) + 1);
  r[0] = 1;
  std::vector<BigInt> binom{1};  // row n of Pascal's triangle
  for (int n = 1; n <= n_max; ++n) {
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 1);
    next[0] = 1;
    next[static_cast<std::size_t>(n)] = 1;
    for (int k = 1; k < n; ++k) {
      next[static_cast<std::size_t>(k)] =
          binom[static_cast<std::size_t>(k - 1)] + binom[static_cast<std::size_t>(k)];
    }
    binom = std::move(next);

    BigInt sum = 0;
    BigInt term;
    for (int k = 1; k <= n; ++k) {
      term = binom[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(n - k)];
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(k) * (n - k));
      if (k % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    r[static_cast<std::size_t>(n)] = std::move(sum);
  }
  return r;
}

RationalSeries::RationalSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("RationalSeries: negative order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

RationalSeries::RationalSeries(int order, std::vector<Rational> coeffs) : RationalSeries(order) {
  if (coeffs.size() > coeffs_.size()) coeffs.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

RationalSeries RationalSeries::operator*(const RationalSeries& rhs) const {
  const int order = std::min(order_, rhs.order_);
  RationalSeries out(order);
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; i + j <= order; ++j) out[i + j] += (*this)[i] * rhs[j];
  }
  return out;
}

RationalSeries RationalSeries::inverse() const {
  if (sgn(coeffs_[0]) == 0) throw std::domain_error("RationalSeries: constant term is zero");
  RationalSeries out(order_);
  out[0] = 1 / coeffs_[0];
  for (int n = 1; n <= order_; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += (*this)[k] * out[n - k];
    out[n] = -acc / coeffs_[0];
  }
  return out;
}

BigInt labeled_weight(int n) {
  BigInt w;
  mpz_fac_ui(w.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_mul_2exp(w.get_mpz_t(), w.get_mpz_t(),
               static_cast<mp_bitcnt_t>(n) * static_cast<mp_bitcnt_t>(n > 0 ? n - 1 : 0) / 2);
  return w;
}

bool gf_identity_check(int order) {
  const auto r = robinson_sequence(order);
  return gf_identity_check(order, r);
}

bool gf_identity_check(int order, std::span<const BigCount> r_values) {
  if (order < 0) throw std::invalid_argument("gf_identity_check: negative order");
  if (r_values.size() < static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("gf_identity_check: not enough R values");
  }
  RationalSeries alternating(order);
  for (int n = 0; n <= order; ++n) {
    Rational c(n % 2 == 0 ? 1 : -1, labeled_weight(n));
    c.canonicalize();
    alternating[n] = c;
  }
  const RationalSeries inverse = alternating.inverse();
  for (int n = 0; n <= order; ++n) {
    Rational expected(r_values[static_cast<std::size_t>(n)], labeled_weight(n));
    expected.canonicalize();
    if (inverse[n] != expected) return false;
  }
  return true;
}

Rational asymptotic_estimate(int n, const AsymptoticParams& params) {
  if (n < 1) throw std::invalid_argument("asymptotic_estimate: n must be >= 1");
  Rational p_power = 1;
  for (int i = 0; i < n; ++i) p_power *= params.p;
  Rational estimate = Rational(labeled_weight(n)) / (params.m * p_power);
  estimate.canonicalize();
  return estimate;
}

Rational asymptotic_relative_error(int n, const BigCount& r_n, const AsymptoticParams& params) {
  Rational ratio = Rational(r_n) / asymptotic_estimate(n, params);
  ratio.canonicalize();
  return abs(ratio - 1);
}

}  // namespace dagcount
