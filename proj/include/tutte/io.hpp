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

#include <string>
#include <variant>

#include "tutte/graph.hpp"
#include "tutte/matroid.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

using Instance = std::variant<Multigraph, Matroid>;

/// Parses the `graph <n> <m>` or `matroid <n>` text formats. Blank lines and
/// `#` comments are ignored. Throws Error(kParse) with a line number, or
/// Error(kInvalidBases) when an explicit base list fails validation.
Instance parse_instance(const std::string& text);

Multigraph parse_graph(const std::string& text);
Matroid parse_matroid(const std::string& text);

std::string format_graph(const Multigraph& g);
/// Emits `uniform <r>` for uniform matroids and rank-0 matroids, otherwise
/// the explicit base list.
std::string format_matroid(const Matroid& m);

/// One line per nonzero term, "<i> <j> <coefficient>", sorted by (i, j).
std::string format_polynomial(const BivariatePolynomial& p);
/// One line per nonzero term, "<degree> <coefficient>", ascending.
std::string format_univariate(const UnivariatePolynomial& p);

std::string polynomial_json(const BivariatePolynomial& p);

}  // namespace tutte
