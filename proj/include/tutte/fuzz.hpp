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

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "tutte/io.hpp"
#include "tutte/verify.hpp"

namespace tutte {

enum class FuzzFamily { kGraphs, kUniform, kBases };

FuzzFamily parse_fuzz_family(const std::string& name);
const char* to_string(FuzzFamily family);

struct FuzzOptions {
  FuzzFamily family = FuzzFamily::kGraphs;
  int max_elements = 12;
  std::uint64_t seed = 1;
  int trials = 100;
  bool connected = false;  // graphs and bases families
  int workers = 1;
  std::set<std::string> checks = parse_check_selection("all");
};

/// Deterministic instance for (seed, trial); independent of worker count.
///
/// graphs: n uniform in [1, 8] (in [2, min(8, N+1)] when connected), m
/// uniform in [0, N] (at least n-1 when connected); a connected sample
/// starts from a random spanning tree; every other edge picks both
/// endpoints uniformly, so loops and parallel edges occur; edge order is
/// shuffled. uniform: n in [0, N], r in [0, n]. bases: a graphs sample's
/// cycle matroid, dualised with probability 1/2, randomly relabelled and
/// rebuilt from its explicit base list.
Instance sample_instance(FuzzFamily family, int max_elements, bool connected, std::uint64_t seed,
                         int trial);

struct FuzzTrial {
  int trial = 0;
  std::string instance_text;
  VerificationReport report;
  std::string error;  // non-empty when the trial threw
};

struct FuzzResult {
  FuzzOptions options;
  int failures = 0;
  std::optional<FuzzTrial> first_failure;  // lowest failing trial index

  std::string to_text() const;
  std::string to_json() const;
};

FuzzResult run_fuzz(const FuzzOptions& options);

}  // namespace tutte
