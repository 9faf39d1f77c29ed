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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tutte/bigint.hpp"
#include "tutte/graph.hpp"
#include "tutte/matroid.hpp"

namespace tutte {

/// Checks selectable by name. Graph-only checks are skipped for matroids.
inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "engines",     "duality",        "sigma",       "tau",
      "hyperplane",  "cocircuit",      "y-threshold", "circuit",
      "x-threshold", "edge-connectivity", "edge-cut", "cut-bound",
      "graph-circuit", "graph-girth"};
  return names;
}

/// "all" or a comma-separated subset of check_names().
std::set<std::string> parse_check_selection(const std::string& spec);

/// One compared value: `value` from a formula, `reference` from the engine
/// (or the bound it must respect).
struct ReportEntry {
  std::string method;
  int index = 0;
  BigInt value;
  BigInt reference;
  bool ok = true;
};

struct VerificationReport {
  std::string instance;
  std::vector<std::string> notes;
  std::vector<ReportEntry> entries;
  bool agreement = true;
  std::optional<ReportEntry> counterexample;

  std::size_t failure_count() const;
  /// Line-oriented form: "# " notes, "<method> <index> <value>" per entry,
  /// then "AGREEMENT: pass|fail" and on failure
  /// "COUNTEREXAMPLE: <index> <method> <value> <engine-value>".
  std::string to_text() const;
  std::string to_json() const;
};

VerificationReport verify_matroid(const Matroid& m, const std::set<std::string>& checks,
                                  const std::string& instance = "matroid");
VerificationReport verify_graph(const Multigraph& g, const std::set<std::string>& checks,
                                const std::string& instance = "graph");

}  // namespace tutte
