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

#ifndef DAGCOUNT_COUNTING_HPP_
#define DAGCOUNT_COUNTING_HPP_

#include <span>
#include <vector>

#include "dagcount/bigint.hpp"

namespace dagcount {

// R_0..R_{n_max}: labeled acyclic digraphs, by the alternating recurrence
//   R_n = sum_{k=1..n} (-1)^(k+1) C(n,k) 2^(k(n-k)) R_{n-k},  R_0 = 1.
std::vector<BigCount> robinson_sequence(int n_max);

// Power series truncated after x^order, exact rational coefficients.
class RationalSeries {
 public:
  explicit RationalSeries(int order);
  RationalSeries(int order, std::vector<Rational> coeffs);

  int order() const { return order_; }
  const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

  RationalSeries operator*(const RationalSeries& rhs) const;
  // Throws std::domain_error when the constant term is zero.
  RationalSeries inverse() const;
  bool operator==(const RationalSeries&) const = default;

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

// 2^C(n,2) * n!
BigInt labeled_weight(int n);

// Inverts sum (-1)^n x^n / (2^C(n,2) n!) and compares coefficient n with
// R_n / (2^C(n,2) n!) for every n <= order. The overload takes R values
// explicitly (index = n), which must cover 0..order.
bool gf_identity_check(int order);
bool gf_identity_check(int order, std::span<const BigCount> r_values);

// Constants of R_n ~ n! 2^C(n,2) / (M p^n), kept exactly as the decimals
// 1.488 and 0.474.
struct AsymptoticParams {
  Rational p{186, 125};  // 1.488
  Rational m{237, 500};  // 0.474
};

// n! 2^C(n,2) / (M p^n). The constants are rational, so the value is exact.
Rational asymptotic_estimate(int n, const AsymptoticParams& params = {});

// |R_n / estimate - 1|, exact.
Rational asymptotic_relative_error(int n, const BigCount& r_n,
                                   const AsymptoticParams& params = {});

}  // namespace dagcount

#endif  // DAGCOUNT_COUNTING_HPP_
