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
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/matroid.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

/// T_M(x,y) = sum over A of (x-1)^(r - rk A) (y-1)^(|A| - rk A).
BivariatePolynomial tutte_subset_expansion(const Matroid& m);

struct ActivityRecord {
  SubsetMask base;
  int internal_activity = 0;
  int external_activity = 0;
};

struct ActivityExpansion {
  BivariatePolynomial polynomial;
  std::vector<ActivityRecord> records;  // one per base, increasing mask order
};

/// Sums x^ia(B) y^ea(B) over all bases, using the ground-set index order.
ActivityExpansion tutte_by_activities(const Matroid& m);

// -- deletion-contraction ----------------------------------------------------

/// Memo table for deletion-contraction keyed by canonical multigraph form.
/// Thread-safe; purely a performance hint.
class DelConCache {
 public:
  std::optional<BivariatePolynomial> find(const std::string& key) const;
  void insert(const std::string& key, const BivariatePolynomial& value);

  std::size_t size() const;
  std::uint64_t hits() const;
  std::uint64_t misses() const;
  void clear();

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, BivariatePolynomial> table_;
  mutable std::uint64_t hits_ = 0;
  mutable std::uint64_t misses_ = 0;
};

enum class PivotRule { kHighestIndex, kRandom };

struct DelConOptions {
  PivotRule pivot = PivotRule::kHighestIndex;
  std::uint64_t seed = 0;  // kRandom only
  bool use_cache = true;
  /// Shared cache; a private one is used when null and use_cache is set.
  std::shared_ptr<DelConCache> cache;
};

BivariatePolynomial tutte_deletion_contraction(const Multigraph& g,
                                               const DelConOptions& options = {});

/// Canonical key of a loopless multigraph with isolated vertices ignored:
/// colour refinement, then the lexicographically least adjacency encoding
/// over orderings of the tied cells. std::nullopt when a tied cell has more
/// than 8 vertices or the cells allow more than 40320 orderings.
std::optional<std::string> canonical_key(int vertex_count, const std::vector<Edge>& edges);

// -- duality -----------------------------------------------------------------

struct DualityCheck {
  bool pass = false;
  BivariatePolynomial primal;  // T_M(x, y)
  BivariatePolynomial dual;    // T_{M*}(x, y)
  /// First exponent (i, j) where t_{i,j}(M) differs from t_{j,i}(M*).
  std::optional<BivariatePolynomial::Exponent> mismatch;
};

DualityCheck duality_check(const Matroid& m);

}  // namespace tutte
