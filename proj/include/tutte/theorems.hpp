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
#include <string>
#include <vector>

#include "tutte/binomial.hpp"
#include "tutte/engines.hpp"
#include "tutte/graph.hpp"
#include "tutte/matroid.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

enum class CoeffMethod {
  kDirectEngine,
  kSigmaSum,
  kTauSum,
  kHyperplaneCorrection,
  kCocircuitCorrection,
  kCircuitCorrection,
  kThresholdClosedForm,
};

const char* to_string(CoeffMethod method);

/// A coefficient together with the range in which its formula was applied.
struct CoeffValue {
  BigInt value;
  CoeffMethod method = CoeffMethod::kDirectEngine;
  std::string validity;  // e.g. "valid: j > f2 - r = -2"
};

/// Lazily computed facts about one matroid, shared by the formula
/// operations so a verification pass enumerates each structure once.
/// Not thread-safe; use one per worker.
class MatroidFacts {
 public:
  explicit MatroidFacts(Matroid m);

  const Matroid& matroid() const { return matroid_; }
  int size() const { return matroid_.size(); }
  int rank() const { return matroid_.rank(); }

  const FlatReport& flats() const;
  const CircuitReport& circuits() const;
  const SigmaProfile& sigma() const;
  const TauProfile& tau() const;
  /// Subset-expansion polynomial (the ground truth for comparisons).
  const BivariatePolynomial& polynomial() const;
  const UnivariatePolynomial& at_x1() const;  // T(1, y)
  const UnivariatePolynomial& at_y1() const;  // T(x, 1)

 private:
  Matroid matroid_;
  mutable std::optional<FlatReport> flats_;
  mutable std::optional<CircuitReport> circuits_;
  mutable std::optional<SigmaProfile> sigma_;
  mutable std::optional<TauProfile> tau_;
  mutable std::optional<BivariatePolynomial> poly_;
  mutable std::optional<UnivariatePolynomial> at_x1_;
  mutable std::optional<UnivariatePolynomial> at_y1_;
};

// -- binomial identity -------------------------------------------------------

struct IdentitySides {
  BigInt lhs;
  BigInt rhs;
};

/// lhs = sum_{i=k}^{m-p} (-1)^(i-k) C(m, p+i) C(i, k), rhs = C(m-k-1, p-1).
/// Requires p + k <= m.
IdentitySides binomial_identity_sides(int m, int p, int k);

// -- coefficient formulas on matroids ----------------------------------------

/// [y^j] T(1,y) read off the engine polynomial.
CoeffValue coeff_y_engine(const MatroidFacts& facts, int j);
/// [x^i] T(x,1) read off the engine polynomial.
CoeffValue coeff_x_engine(const MatroidFacts& facts, int i);

/// Alternating sum over spanning-set counts.
CoeffValue coeff_y_sigma(const MatroidFacts& facts, int j);
/// Alternating sum over independent-set counts.
CoeffValue coeff_x_tau(const MatroidFacts& facts, int i);

/// C(|X|-j-1, r-1) minus hyperplane corrections; needs j > f_2 - r.
CoeffValue coeff_y_hyperplane(const MatroidFacts& facts, int j);
/// Same value via cocircuit sizes.
CoeffValue coeff_y_cocircuit(const MatroidFacts& facts, int j);
/// C(|X|-j-1, r-1); needs f_1 < j + r.
CoeffValue coeff_y_threshold(const MatroidFacts& facts, int j);
/// C(|X|-i-1, r-i) minus circuit corrections; needs i > r - d_2.
CoeffValue coeff_x_circuit(const MatroidFacts& facts, int i);
/// C(|X|-i-1, r-i); needs d_1 > r - i.
CoeffValue coeff_x_threshold(const MatroidFacts& facts, int i);

inline CoeffValue coeff_y_sigma(const Matroid& m, int j) { return coeff_y_sigma(MatroidFacts(m), j); }
inline CoeffValue coeff_x_tau(const Matroid& m, int i) { return coeff_x_tau(MatroidFacts(m), i); }
inline CoeffValue coeff_y_hyperplane(const Matroid& m, int j) { return coeff_y_hyperplane(MatroidFacts(m), j); }
inline CoeffValue coeff_y_cocircuit(const Matroid& m, int j) { return coeff_y_cocircuit(MatroidFacts(m), j); }
inline CoeffValue coeff_y_threshold(const Matroid& m, int j) { return coeff_y_threshold(MatroidFacts(m), j); }
inline CoeffValue coeff_x_circuit(const Matroid& m, int i) { return coeff_x_circuit(MatroidFacts(m), i); }
inline CoeffValue coeff_x_threshold(const Matroid& m, int i) { return coeff_x_threshold(MatroidFacts(m), i); }

// -- biconditional checks ----------------------------------------------------

struct IffRow {
  int index = 0;
  bool condition = false;  // the threshold side of the biconditional
  bool identity = false;   // engine coefficient == closed form
  BigInt closed_form;
  BigInt engine;
  bool consistent() const { return condition == identity; }
};

struct IffCheck {
  bool pass = true;
  std::vector<IffRow> rows;
  std::optional<IffRow> counterexample;  // first inconsistent row
};

/// f_1 < j + r  <=>  [y^j]T(1,y) = C(|X|-j-1, r-1), for j = 0..|X|-r.
IffCheck coeff_y_threshold_iff(const MatroidFacts& facts);
/// d_1 > r - i  <=>  [x^i]T(x,1) = C(|X|-i-1, r-i), for i = 0..r.
IffCheck coeff_x_threshold_iff(const MatroidFacts& facts);

// -- graph-level statements --------------------------------------------------

/// Facts about a graph and its cycle matroid.
class GraphFacts {
 public:
  explicit GraphFacts(Multigraph g);

  const Multigraph& graph() const { return graph_; }
  const MatroidFacts& matroid() const { return facts_; }
  int n() const { return graph_.vertex_count(); }
  int m() const { return graph_.edge_count(); }
  int components() const { return components_; }
  bool connected_nontrivial() const { return n() >= 2 && components_ == 1; }
  /// m - n + 1; meaningful for connected graphs.
  int cyclomatic() const { return m() - n() + 1; }
  const CutReport& cuts() const;

 private:
  Multigraph graph_;
  MatroidFacts facts_;
  int components_;
  mutable std::optional<CutReport> cuts_;
};

/// (k+1)-edge-connected  <=>  [y^j]T(1,y) = C(m-j-1, n-2) for g-k <= j <= g.
/// Indices below zero are evaluated with coefficient 0.
IffCheck graph_gjk_iff(const GraphFacts& facts, int k);
/// Edge-cut corrected coefficient for g - 3(k+1)/2 < j <= g.
CoeffValue graph_cg_coeff(const GraphFacts& facts, int j, int k);

struct BoundCheck {
  bool pass = true;
  std::optional<int> f2;
  int lhs = 0;  // 2 f_2, or 0 when f_2 is undefined
  int rhs = 0;  // 2m - 3(k+1)
};

/// 2 f_2(M(G)) <= 2m - 3(k+1) for a (k+1)-edge-connected graph.
BoundCheck cut_flat_bound_check(const GraphFacts& facts, int k);

/// Circuit-corrected [x^i]T_G(x,1) computed from graph data; cross-checked
/// against coeff_x_circuit on the cycle matroid.
CoeffValue graph_circuit_coeff(const GraphFacts& facts, int i);
/// g(G) > n - k(G) - i  <=>  [x^i]T_G(x,1) = C(m-i-1, n-k(G)-i).
IffCheck graph_girth_iff(const GraphFacts& facts);

inline IffCheck graph_gjk_iff(const Multigraph& g, int k) { return graph_gjk_iff(GraphFacts(g), k); }
inline CoeffValue graph_cg_coeff(const Multigraph& g, int j, int k) {
  return graph_cg_coeff(GraphFacts(g), j, k);
}
inline BoundCheck cut_flat_bound_check(const Multigraph& g, int k) {
  return cut_flat_bound_check(GraphFacts(g), k);
}
inline CoeffValue graph_circuit_coeff(const Multigraph& g, int i) {
  return graph_circuit_coeff(GraphFacts(g), i);
}
inline IffCheck graph_girth_iff(const Multigraph& g) {
  return graph_girth_iff(GraphFacts(g));
}

}  // namespace tutte
