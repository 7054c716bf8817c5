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

#include "dagcount/exactalg.hpp"

namespace dagcount {

IntMatrix::IntMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("IntMatrix: dimension must be positive");
  entries_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

IntMatrix::IntMatrix(int n, std::span<const long> row_major) : IntMatrix(n) {
  if (row_major.size() != entries_.size()) {
    throw std::invalid_argument("IntMatrix: expected n*n entries");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = row_major[i];
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (sgn(e) != 0) return false;
  }
  return true;
}

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < n_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
  return out;
}

IntPolynomial char_poly(const IntMatrix& m) {
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const int n = m.size();
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix mk(n);
  for (int k = 1; k <= n; ++k) {
    IntMatrix next = m * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    mk = std::move(next);
    const BigInt t = (m * mk).trace();
    BigInt& ck = c[static_cast<std::size_t>(n - k)];
    mpz_divexact_ui(ck.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    ck = -ck;
  }
  return IntPolynomial(std::move(c));
}

BigInt determinant(const IntMatrix& m) {
  const int n = m.size();
  IntMatrix a(m);
  BigInt previous_pivot = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(a(k, k)) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (sgn(a(r, k)) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), previous_pivot.get_mpz_t());
      }
    }
    previous_pivot = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

BigInt power_trace(const IntMatrix& m, unsigned k) {
  IntMatrix result = IntMatrix::identity(m.size());
  IntMatrix base(m);
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result.trace();
}

bool is_nilpotent(const IntMatrix& m) {
  IntMatrix power(m);
  for (int k = 1; k < m.size(); ++k) {
    if (power.is_zero()) return true;
    power = power * m;
  }
  return power.is_zero();
}

bool is_unit_spectrum(const IntMatrix& b) {
  return char_poly(b) == IntPolynomial::linear_power(1, b.size());
}

std::optional<int> zeros_and_ones_spectrum(const IntMatrix& b) {
  const int n = b.size();
  const IntPolynomial p = char_poly(b);
  int zeros = 0;
  while (zeros <= n && sgn(p.coeff(zeros)) == 0) ++zeros;
  const int k = n - zeros;
  const IntPolynomial expected =
      IntPolynomial::monomial(1, zeros) * IntPolynomial::linear_power(1, k);
  if (p == expected) return k;
  return std::nullopt;
}

SpectrumProfile spectrum_profile(const IntMatrix& m) {
  return polynomial_spectrum_profile(char_poly(m));
}

SmallCharPoly char_poly_small(std::span<const std::int8_t> row_major, int n) {
  if (n < 1 || n > kSmallCharPolyMaxN ||
      row_major.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("char_poly_small: unsupported dimension");
  }
  using Square = std::array<std::int64_t, kSmallCharPolyMaxN * kSmallCharPolyMaxN>;
  SmallCharPoly c{};
  c[static_cast<std::size_t>(n)] = 1;
  Square mk{};
  Square product{};
  const auto at = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
  for (int k = 1; k <= n; ++k) {
    // product = A * M_{k-1} + c_{n-k+1} I, then trace of A * product.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int l = 0; l < n; ++l) s += row_major[at(i, l)] * mk[at(l, j)];
        product[at(i, j)] = s;
      }
      product[at(i, i)] += c[static_cast<std::size_t>(n - k + 1)];
    }
    mk = product;
    std::int64_t t = 0;
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) t += row_major[at(i, l)] * mk[at(l, i)];
    }
    c[static_cast<std::size_t>(n - k)] = -t / k;
  }
  return c;
}

IntPolynomial to_int_polynomial(const SmallCharPoly& coeffs, int n) {
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<long>(coeffs[static_cast<std::size_t>(i)]);
  }
  return IntPolynomial(std::move(out));
}

}  // namespace dagcount
