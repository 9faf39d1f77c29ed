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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tutte/subset.hpp"

namespace tutte {

enum class MatroidKind { kUniform, kExplicitBases, kCycleOfGraph, kDualOf, kRelabeled };

const char* to_string(MatroidKind kind);

using RankFunction = std::function<int(SubsetMask)>;

namespace detail {
struct MatroidState;
struct MatroidFactory;
}

/// A matroid on the ordered ground set {0, ..., size-1} given by its rank
/// oracle. Copies share the oracle and its rank cache; a Matroid is safe to
/// use from several threads at once.
class Matroid {
 public:
  /// Empty matroid.
  Matroid();

  int size() const;
  /// rk(X).
  int rank() const;
  int rank(SubsetMask subset) const;
  MatroidKind kind() const;

  /// Dual matroid, rk*(A) = |A| + rk(X \ A) - r.
  Matroid dual() const;

  /// Rank of every subset, indexed by mask bits. Computed once and shared.
  /// Requires size() within the exhaustive limit.
  std::span<const std::uint8_t> rank_table() const;

  bool is_independent(SubsetMask a) const { return rank(a) == a.size(); }
  bool is_spanning(SubsetMask a) const { return rank(a) == rank(); }
  bool is_basis(SubsetMask a) const { return a.size() == rank() && rank(a) == rank(); }

  /// Identical oracle values on every subset.
  friend bool same_oracle(const Matroid& a, const Matroid& b);

 private:
  friend struct detail::MatroidFactory;
  explicit Matroid(std::shared_ptr<const detail::MatroidState> state);

  std::shared_ptr<const detail::MatroidState> state_;
};

/// Wraps a rank function as a matroid without validating it. Used by the
/// built-in constructions; callers outside the library go through the
/// constructors below.
Matroid make_matroid(int size, MatroidKind kind, RankFunction rank);

/// U_{r,n}: rk(A) = min(|A|, r).
Matroid make_uniform(int rank, int size);

/// Matroid whose bases are exactly `bases` (validated with the exchange axiom).
Matroid make_from_bases(int size, std::span<const SubsetMask> bases);

/// Same matroid with element `perm[i]` of the result playing the role of
/// element i of `m`. `perm` must be a permutation of 0..size-1.
Matroid relabel(const Matroid& m, std::span<const int> perm);

SubsetMask closure(const Matroid& m, SubsetMask a);

/// Loops of m (the closure of the empty set).
inline SubsetMask loops(const Matroid& m) { return closure(m, SubsetMask()); }

/// All bases in increasing mask order.
std::vector<SubsetMask> bases(const Matroid& m);

// -- structure reports -------------------------------------------------------

struct FlatReport {
  std::vector<SubsetMask> flats;       // sorted by mask
  std::vector<SubsetMask> hyperplanes; // rank r-1 flats, sorted
  std::map<int, int> f;                // k -> f_k(M), present only where defined

  std::optional<int> f_k(int k) const {
    auto it = f.find(k);
    if (it == f.end()) return std::nullopt;
    return it->second;
  }
};

struct CircuitReport {
  std::vector<SubsetMask> circuits;    // sorted by mask
  std::vector<SubsetMask> cocircuits;  // complements of hyperplanes, sorted
  std::map<int, int> d;                // k -> d_k(M), present only where defined

  std::optional<int> d_k(int k) const {
    auto it = d.find(k);
    if (it == d.end()) return std::nullopt;
    return it->second;
  }
};

FlatReport enumerate_flats(const Matroid& m);
CircuitReport enumerate_circuits(const Matroid& m);

/// A in D(M): removing any single element keeps the rank.
bool is_dependent_closed(const Matroid& m, SubsetMask a);

// -- profiles ----------------------------------------------------------------

/// counts[t] = number of spanning sets with t elements, t = 0..|X|.
struct SigmaProfile {
  std::vector<std::uint64_t> counts;
};

/// counts[t] = number of independent sets with t elements, t = 0..|X|.
struct TauProfile {
  std::vector<std::uint64_t> counts;
};

SigmaProfile sigma_profile(const Matroid& m);
TauProfile tau_profile(const Matroid& m);

// -- axiom check -------------------------------------------------------------

struct RankAxiomViolation {
  enum class Axiom { kBounds, kMonotone, kSubmodular } axiom;
  SubsetMask a;
  SubsetMask b;  // unused for kBounds
  std::string describe() const;
};

/// std::nullopt when all three axioms hold on every subset pair.
std::optional<RankAxiomViolation> check_rank_axioms(int size, const RankFunction& rank);
std::optional<RankAxiomViolation> check_rank_axioms(const Matroid& m);

}  // namespace tutte
