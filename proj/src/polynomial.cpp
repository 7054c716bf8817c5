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
#include <stdexcept>
#include <utility>

#include "dagcount/exactalg.hpp"

namespace dagcount {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::linear_power(long root, int power) {
  IntPolynomial result{1};
  const IntPolynomial linear{-root, 1};
  for (int i = 0; i < power; ++i) result = result * linear;
  return result;
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  }
  return IntPolynomial(std::move(out));
}

int IntPolynomial::sign_at(const Rational& x) const {
  // Horner on num/den, scaled by den^deg to stay in Z.
  if (is_zero()) return 0;
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = 0;
  BigInt den_power = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_power;
    den_power *= den;
  }
  return sgn(acc);
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const { return *this + (-rhs); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const BigInt& c) const {
  std::vector<BigInt> out(coeffs_);
  for (auto& v : out) v *= c;
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const BigInt magnitude = abs(c);
    if (magnitude != 1 || i == 0) out += magnitude.get_str();
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> rem = a.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  const auto& bc = b.coeffs();
  for (int top = a.degree(); top >= db; --top) {
    const BigInt lead = rem[static_cast<std::size_t>(top)];
    // rem = lb * rem - lead * x^(top-db) * b
    for (auto& c : rem) c *= lb;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(top - db + j)] -= lead * bc[static_cast<std::size_t>(j)];
    }
  }
  return IntPolynomial(std::move(rem));
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("exact_divide: divisor has larger degree");
  std::vector<BigInt> rem = a.coeffs();
  const int db = b.degree();
  const auto& bc = b.coeffs();
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int top = a.degree(); top >= db; --top) {
    BigInt& lead = rem[static_cast<std::size_t>(top)];
    if (sgn(lead) == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), b.leading().get_mpz_t())) {
      throw std::domain_error("exact_divide: inexact quotient");
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), lead.get_mpz_t(), b.leading().get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(top - db + j)] -= q * bc[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(top - db)] = std::move(q);
  }
  for (const auto& c : rem) {
    if (sgn(c) != 0) throw std::domain_error("exact_divide: nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

std::vector<SquarefreeFactor> squarefree_decompose(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
  std::vector<SquarefreeFactor> out;
  const IntPolynomial a = p.primitive_part();
  if (a.degree() == 0) return out;

  const IntPolynomial da = a.derivative();
  const IntPolynomial c = poly_gcd(a, da);
  IntPolynomial w = exact_divide(a, c);
  IntPolynomial y = exact_divide(da, c);
  IntPolynomial z = y - w.derivative();
  for (int multiplicity = 1; w.degree() > 0; ++multiplicity) {
    const IntPolynomial g = poly_gcd(w, z);
    if (g.degree() > 0) out.push_back({g, multiplicity});
    w = exact_divide(w, g);
    y = exact_divide(z, g);
    z = y - w.derivative();
  }
  return out;
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  std::vector<IntPolynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  IntPolynomial next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const IntPolynomial& a = chain[chain.size() - 2];
    const IntPolynomial& b = chain.back();
    IntPolynomial r = pseudo_remainder(a, b);
    // prem multiplies by lc(b)^(da-db+1); undo a negative factor so that
    // r stays a positive multiple of the true remainder.
    const int exponent = a.degree() - b.degree() + 1;
    if (sgn(b.leading()) < 0 && exponent % 2 == 1) r = -r;
    if (r.is_zero()) break;
    const BigInt g = r.content();
    std::vector<BigInt> scaled(r.coeffs().size());
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      mpz_divexact(scaled[i].get_mpz_t(), r.coeffs()[i].get_mpz_t(), g.get_mpz_t());
      scaled[i] = -scaled[i];
    }
    next = IntPolynomial(std::move(scaled));
  }
  return chain;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int variations_at(const std::vector<IntPolynomial>& chain, const std::optional<Rational>& x,
                  bool minus_infinity) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    if (x) {
      signs.push_back(q.sign_at(*x));
    } else {
      int s = sgn(q.leading());
      if (minus_infinity && q.degree() % 2 == 1) s = -s;
      signs.push_back(s);
    }
  }
  return sign_changes(signs);
}

}  // namespace

int count_real_roots(const IntPolynomial& p, const std::optional<Rational>& lower,
                     const std::optional<Rational>& upper) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  if (p.degree() == 0) return 0;
  if (poly_gcd(p, p.derivative()).degree() > 0) {
    throw std::invalid_argument("count_real_roots: polynomial is not squarefree");
  }
  if (lower && upper && *lower >= *upper) return 0;

  const auto chain = sturm_chain(p);
  // V(a) - V(b) counts roots in (a, b]; drop b itself to make it open.
  int count = variations_at(chain, lower, true) - variations_at(chain, upper, false);
  if (upper && p.sign_at(*upper) == 0) --count;
  return count;
}

SpectrumProfile polynomial_spectrum_profile(const IntPolynomial& char_polynomial) {
  SpectrumProfile profile;
  profile.degree = char_polynomial.degree();
  const Rational zero = 0;
  for (const auto& [factor, multiplicity] : squarefree_decompose(char_polynomial)) {
    profile.real_count += multiplicity * count_real_roots(factor);
    profile.positive_count += multiplicity * count_real_roots(factor, zero);
  }
  return profile;
}

}  // namespace dagcount
