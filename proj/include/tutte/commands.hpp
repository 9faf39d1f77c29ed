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

#include "tutte/io.hpp"
#include "tutte/polynomial.hpp"
#include "tutte/theorems.hpp"

namespace tutte {

enum class EngineChoice { kSubset, kActivities, kDelCon, kAll };

EngineChoice parse_engine(const std::string& name);

/// T for a parsed instance. kDelCon needs a graph; kAll runs every
/// applicable engine and throws Error(kVerification) on disagreement.
BivariatePolynomial compute_tutte(const Instance& instance, EngineChoice engine);

/// Matroid behind an instance (the cycle matroid for graphs).
Matroid instance_matroid(const Instance& instance);

/// `axis` is 'x' or 'y'. y-methods: engine, sigma, hyperplane, cocircuit,
/// threshold. x-methods: engine, tau, circuit, threshold.
CoeffValue coefficient(const Instance& instance, char axis, int index, const std::string& method);
/// "<value> (<validity>)" or the JSON object {"index","method","validity","value"}.
std::string format_coefficient(const CoeffValue& value, char axis, int index, bool json);

/// Flats, hyperplanes, circuits and cocircuits by size; f_1, f_2, d_1, d_2;
/// and for graphs girth, h, edge connectivity and the EC_i table.
std::string structure_report(const Instance& instance, bool json);

}  // namespace tutte
