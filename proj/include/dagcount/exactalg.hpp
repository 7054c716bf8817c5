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

#ifndef DAGCOUNT_EXACTALG_HPP_
#define DAGCOUNT_EXACTALG_HPP_

// Exact integer linear algebra and real-root counting.
//
// Nothing in here touches floating point. Spectral questions are answered
// through the characteristic polynomial: identities such as
// char_poly(b) == (x-1)^n, or Sturm sign-variation counts on a squarefree
// decomposition.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dagcount/bigint.hpp"

namespace dagcount {

class IntMatrix {
 public:
  explicit IntMatrix(int n);
  IntMatrix(int n, std::span<const long> row_major);

  static IntMatrix identity(int n);

  int size() const { return n_; }
  BigInt& operator()(int i, int j) { return entries_[index(i, j)]; }
  const BigInt& operator()(int i, int j) const { return entries_[index(i, j)]; }

  BigInt trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<BigInt> entries_;
};

// Dense polynomial over Z; coeffs()[i] multiplies x^i. Trailing zeros are
// always stripped, so the zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(const BigInt& c, int degree);
  // (x - root)^power
  static IntPolynomial linear_power(long root, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int i) const;
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt content() const;
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;

  // Sign of p(x) at an exact rational point.
  int sign_at(const Rational& x) const;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator-() const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const BigInt& c) const;
  bool operator==(const IntPolynomial& rhs) const = default;

  // "x^3-3x^2+3x-1"
  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

struct SpectrumProfile {
  int real_count = 0;      // real eigenvalues, with multiplicity
  int positive_count = 0;  // strictly positive real eigenvalues, with multiplicity
  int degree = 0;

  bool all_real() const { return real_count == degree; }
  bool all_positive() const { return positive_count == degree; }
  bool operator==(const SpectrumProfile&) const = default;
};

struct SquarefreeFactor {
  IntPolynomial factor;
  int multiplicity;
};

// det(xI - m), computed with Faddeev-LeVerrier; every division is exact.
IntPolynomial char_poly(const IntMatrix& m);

// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& m);

// trace(m^k), with m^0 = I.
BigInt power_trace(const IntMatrix& m, unsigned k);

// m^n == 0.
bool is_nilpotent(const IntMatrix& m);

// char_poly(b) == (x-1)^n.
bool is_unit_spectrum(const IntMatrix& b);

// k such that char_poly(b) == x^(n-k) (x-1)^k, if any.
std::optional<int> zeros_and_ones_spectrum(const IntMatrix& b);

// Yun's algorithm over Z[x]. Factors are primitive with positive leading
// coefficient; their product with multiplicity equals p up to a constant.
// Throws std::invalid_argument on the zero polynomial.
std::vector<SquarefreeFactor> squarefree_decompose(const IntPolynomial& p);

// Primitive gcd over Z[x] with positive leading coefficient.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Exact quotient a / b; throws std::domain_error if b does not divide a in Z[x].
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Sturm chain p, p', -rem, ... with positive content stripped from every
// member.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);

// Distinct real roots of a squarefree p in the open interval (lower, upper);
// a missing bound means the corresponding infinity. Throws
// std::invalid_argument if p is zero or not squarefree.
int count_real_roots(const IntPolynomial& p,
                     const std::optional<Rational>& lower = std::nullopt,
                     const std::optional<Rational>& upper = std::nullopt);

SpectrumProfile polynomial_spectrum_profile(const IntPolynomial& char_polynomial);
SpectrumProfile spectrum_profile(const IntMatrix& m);

// Fast path for the enumeration engines: Faddeev-LeVerrier in 64-bit
// arithmetic for n <= kSmallCharPolyMaxN. Exact for matrices with entries
// in [-3, 3]; coefficient i multiplies x^i.
inline constexpr int kSmallCharPolyMaxN = 8;
using SmallCharPoly = std::array<std::int64_t, kSmallCharPolyMaxN + 1>;
SmallCharPoly char_poly_small(std::span<const std::int8_t> row_major, int n);
IntPolynomial to_int_polynomial(const SmallCharPoly& coeffs, int n);

}  // namespace dagcount

#endif  // DAGCOUNT_EXACTALG_HPP_
