// Copyright 2026 The Tutte Toolkit Authors.
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

#pragma once

#include <map>
#include <string>
#include <utility>

#include "tutte/bigint.hpp"

namespace tutte {

/// Sparse polynomial in x and y with exact integer coefficients. Zero
/// coefficients are never stored.
class BivariatePolynomial {
 public:
  using Exponent = std::pair<int, int>;  // (power of x, power of y)
  using Terms = std::map<Exponent, BigInt>;

  BivariatePolynomial() = default;

  static BivariatePolynomial constant(const BigInt& c);
  static BivariatePolynomial monomial(int i, int j, const BigInt& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// t_{i,j}; zero when absent.
  BigInt coeff(int i, int j) const;
  void add_term(int i, int j, const BigInt& c);

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    a += b;
    return a;
  }
  BivariatePolynomial& operator*=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b) {
    BivariatePolynomial out = a;
    out *= b;
    return out;
  }

  /// x^i y^j -> x^j y^i.
  BivariatePolynomial swapped() const;
  BigInt evaluate(const BigInt& x, const BigInt& y) const;
  bool has_nonnegative_coefficients() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  /// Human-readable, highest x degree first: "x^2 + x + y".
  std::string to_pretty() const;

 private:
  Terms terms_;
};

class UnivariatePolynomial {
 public:
  using Terms = std::map<int, BigInt>;

  UnivariatePolynomial() = default;

  const Terms& terms() const { return terms_; }
  BigInt coeff(int degree) const;
  void add_term(int degree, const BigInt& c);
  /// Highest degree with a nonzero coefficient, -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

 private:
  Terms terms_;
};

/// T(1, y): coefficient j is sum_i t_{i,j}.
UnivariatePolynomial specialize_x_at_1(const BivariatePolynomial& p);
/// T(x, 1): coefficient i is sum_j t_{i,j}.
UnivariatePolynomial specialize_y_at_1(const BivariatePolynomial& p);

}  // namespace tutte
