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

#include "tutte/polynomial.hpp"

#include <sstream>
#include <vector>

namespace tutte {

BivariatePolynomial BivariatePolynomial::constant(const BigInt& c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(int i, int j, const BigInt& c) {
  BivariatePolynomial p;
  p.add_term(i, j, c);
  return p;
}

BigInt BivariatePolynomial::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BivariatePolynomial::add_term(int i, int j, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& other) {
  BivariatePolynomial out;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : other.terms_) out.add_term(a.first + b.first, a.second + b.second, ca * cb);
  *this = std::move(out);
  return *this;
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(e.second, e.first, c);
  return out;
}

BigInt BivariatePolynomial::evaluate(const BigInt& x, const BigInt& y) const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) total += c * pow(x, e.first) * pow(y, e.second);
  return total;
}

bool BivariatePolynomial::has_nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

namespace {

void append_power(std::ostringstream& os, char var, int power) {
  if (power == 0) return;
  os << var;
  if (power > 1) os << '^' << power;
}

}  // namespace

std::string BivariatePolynomial::to_pretty() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = e.first == 0 && e.second == 0;
    if (mag != 1 || constant) os << mag;
    append_power(os, 'x', e.first);
    append_power(os, 'y', e.second);
  }
  return os.str();
}

BigInt UnivariatePolynomial::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void UnivariatePolynomial::add_term(int degree, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UnivariatePolynomial specialize_x_at_1(const BivariatePolynomial& p) {
  UnivariatePolynomial out;
  for (const auto& [e, c] : p.terms()) out.add_term(e.second, c);
  return out;
}

UnivariatePolynomial specialize_y_at_1(const BivariatePolynomial& p) {
  UnivariatePolynomial out;
  for (const auto& [e, c] : p.terms()) out.add_term(e.first, c);
  return out;
}

}  // namespace tutte
