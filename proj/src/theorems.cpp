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

#include "tutte/theorems.hpp"

#include "tutte/error.hpp"

namespace tutte {

const char* to_string(CoeffMethod method) {
  switch (method) {
    case CoeffMethod::kDirectEngine: return "direct-engine";
    case CoeffMethod::kSigmaSum: return "sigma-sum";
    case CoeffMethod::kTauSum: return "tau-sum";
    case CoeffMethod::kHyperplaneCorrection: return "hyperplane-correction";
    case CoeffMethod::kCocircuitCorrection: return "cocircuit-correction";
    case CoeffMethod::kCircuitCorrection: return "circuit-correction";
    case CoeffMethod::kThresholdClosedForm: return "threshold-closed-form";
  }
  return "unknown";
}

// -- facts -------------------------------------------------------------------

MatroidFacts::MatroidFacts(Matroid m) : matroid_(std::move(m)) {}

const FlatReport& MatroidFacts::flats() const {
  if (!flats_) flats_ = enumerate_flats(matroid_);
  return *flats_;
}

const CircuitReport& MatroidFacts::circuits() const {
  if (!circuits_) circuits_ = enumerate_circuits(matroid_);
  return *circuits_;
}

const SigmaProfile& MatroidFacts::sigma() const {
  if (!sigma_) sigma_ = sigma_profile(matroid_);
  return *sigma_;
}

const TauProfile& MatroidFacts::tau() const {
  if (!tau_) tau_ = tau_profile(matroid_);
  return *tau_;
}

const BivariatePolynomial& MatroidFacts::polynomial() const {
  if (!poly_) poly_ = tutte_subset_expansion(matroid_);
  return *poly_;
}

const UnivariatePolynomial& MatroidFacts::at_x1() const {
  if (!at_x1_) at_x1_ = specialize_x_at_1(polynomial());
  return *at_x1_;
}

const UnivariatePolynomial& MatroidFacts::at_y1() const {
  if (!at_y1_) at_y1_ = specialize_y_at_1(polynomial());
  return *at_y1_;
}

GraphFacts::GraphFacts(Multigraph g)
    : graph_(std::move(g)), facts_(cycle_matroid(graph_)), components_(component_count(graph_)) {}

const CutReport& GraphFacts::cuts() const {
  if (!cuts_) cuts_ = minimal_edge_cuts(graph_);
  return *cuts_;
}

namespace {

void require_index(int index, const char* name) {
  if (index < 0) {
    throw Error(ErrorCode::kInvalidParameters, std::string(name) + " must be nonnegative");
  }
}

BigInt sign(int exponent) { return (exponent % 2) ? BigInt(-1) : BigInt(1); }

std::string undefined_note(const char* quantity, const char* index) {
  return std::string("valid: ") + quantity + " undefined, all " + index;
}

}  // namespace

// -- binomial identity -------------------------------------------------------

IdentitySides binomial_identity_sides(int m, int p, int k) {
  if (m < 0 || p < 0 || k < 0) {
    throw Error(ErrorCode::kInvalidParameters, "identity arguments must be nonnegative");
  }
  if (p + k > m) {
    throw Error(ErrorCode::kPrecondition, "identity needs p + k <= m (got p=" +
                                              std::to_string(p) + ", k=" + std::to_string(k) +
                                              ", m=" + std::to_string(m) + ")");
  }
  IdentitySides sides;
  for (int i = k; i <= m - p; ++i) sides.lhs += sign(i - k) * binomial(m, p + i) * binomial(i, k);
  sides.rhs = binomial(m - k - 1, p - 1);
  return sides;
}

// -- matroid formulas --------------------------------------------------------

CoeffValue coeff_y_engine(const MatroidFacts& facts, int j) {
  require_index(j, "j");
  return {facts.at_x1().coeff(j), CoeffMethod::kDirectEngine, "valid: all j"};
}

CoeffValue coeff_x_engine(const MatroidFacts& facts, int i) {
  require_index(i, "i");
  return {facts.at_y1().coeff(i), CoeffMethod::kDirectEngine, "valid: all i"};
}

CoeffValue coeff_y_sigma(const MatroidFacts& facts, int j) {
  require_index(j, "j");
  const int n = facts.size();
  const int r = facts.rank();
  const auto& sigma = facts.sigma().counts;
  BigInt sum = 0;
  for (int t = j; t <= n - r; ++t) sum += sign(t - j) * binomial(t, j) * BigInt(sigma[r + t]);
  return {sum, CoeffMethod::kSigmaSum, "valid: all j"};
}

CoeffValue coeff_x_tau(const MatroidFacts& facts, int i) {
  require_index(i, "i");
  const int r = facts.rank();
  const auto& tau = facts.tau().counts;
  BigInt sum = 0;
  for (int t = i; t <= r; ++t) sum += sign(t - i) * binomial(t, i) * BigInt(tau[r - t]);
  return {sum, CoeffMethod::kTauSum, "valid: all i"};
}

namespace {

// Shared guard for the hyperplane and cocircuit forms.
std::string hyperplane_validity(const MatroidFacts& facts, int j) {
  const auto f2 = facts.flats().f_k(2);
  if (!f2) return undefined_note("f2", "j");
  const int bound = *f2 - facts.rank();
  if (j <= bound) {
    throw Error(ErrorCode::kPrecondition, "j = " + std::to_string(j) +
                                              " outside validity range j > f2 - r = " +
                                              std::to_string(bound));
  }
  return "valid: j > f2 - r = " + std::to_string(bound);
}

}  // namespace

CoeffValue coeff_y_hyperplane(const MatroidFacts& facts, int j) {
  require_index(j, "j");
  std::string validity = hyperplane_validity(facts, j);
  const int n = facts.size();
  const int r = facts.rank();
  const auto f2 = facts.flats().f_k(2);
  BigInt value = binomial(n - j - 1, r - 1);
  for (SubsetMask h : facts.flats().hyperplanes) {
    if (!f2 || h.size() > *f2) value -= binomial(h.size() - j - 1, r - 1);
  }
  return {value, CoeffMethod::kHyperplaneCorrection, std::move(validity)};
}

CoeffValue coeff_y_cocircuit(const MatroidFacts& facts, int j) {
  require_index(j, "j");
  std::string validity = hyperplane_validity(facts, j);
  const int n = facts.size();
  const int r = facts.rank();
  const auto f2 = facts.flats().f_k(2);
  BigInt value = binomial(n - j - 1, r - 1);
  for (SubsetMask c : facts.circuits().cocircuits) {
    if (!f2 || c.size() < n - *f2) value -= binomial(n - c.size() - j - 1, r - 1);
  }
  return {value, CoeffMethod::kCocircuitCorrection, std::move(validity)};
}

CoeffValue coeff_y_threshold(const MatroidFacts& facts, int j) {
  require_index(j, "j");
  const int n = facts.size();
  const int r = facts.rank();
  const auto f1 = facts.flats().f_k(1);
  std::string validity = undefined_note("f1", "j");
  if (f1) {
    if (!(*f1 < j + r)) {
      throw Error(ErrorCode::kPrecondition,
                  "threshold form needs f1 < j + r (f1 = " + std::to_string(*f1) +
                      ", j + r = " + std::to_string(j + r) + ")");
    }
    validity = "valid: j > f1 - r = " + std::to_string(*f1 - r);
  }
  return {binomial(n - j - 1, r - 1), CoeffMethod::kThresholdClosedForm, std::move(validity)};
}

CoeffValue coeff_x_circuit(const MatroidFacts& facts, int i) {
  require_index(i, "i");
  const int n = facts.size();
  const int r = facts.rank();
  const auto d2 = facts.circuits().d_k(2);
  std::string validity = undefined_note("d2", "i");
  if (d2) {
    const int bound = r - *d2;
    if (i <= bound) {
      throw Error(ErrorCode::kPrecondition, "i = " + std::to_string(i) +
                                                " outside validity range i > r - d2 = " +
                                                std::to_string(bound));
    }
    validity = "valid: i > r - d2 = " + std::to_string(bound);
  }
  BigInt value = binomial(n - i - 1, r - i);
  for (SubsetMask c : facts.circuits().circuits) {
    if (!d2 || c.size() < *d2) value -= binomial(n - c.size() - i - 1, n - r - 1);
  }
  return {value, CoeffMethod::kCircuitCorrection, std::move(validity)};
}

CoeffValue coeff_x_threshold(const MatroidFacts& facts, int i) {
  require_index(i, "i");
  const int n = facts.size();
  const int r = facts.rank();
  const auto d1 = facts.circuits().d_k(1);
  std::string validity = undefined_note("d1", "i");
  if (d1) {
    if (!(*d1 > r - i)) {
      throw Error(ErrorCode::kPrecondition,
                  "threshold form needs d1 > r - i (d1 = " + std::to_string(*d1) +
                      ", r - i = " + std::to_string(r - i) + ")");
    }
    validity = "valid: i > r - d1 = " + std::to_string(r - *d1);
  }
  return {binomial(n - i - 1, r - i), CoeffMethod::kThresholdClosedForm, std::move(validity)};
}

// -- biconditionals ----------------------------------------------------------

namespace {

void finish(IffCheck& check) {
  for (const IffRow& row : check.rows) {
    if (!row.consistent()) {
      check.pass = false;
      check.counterexample = row;
      return;
    }
  }
}

}  // namespace

IffCheck coeff_y_threshold_iff(const MatroidFacts& facts) {
  const int n = facts.size();
  const int r = facts.rank();
  const auto f1 = facts.flats().f_k(1);
  IffCheck check;
  for (int j = 0; j <= n - r; ++j) {
    IffRow row;
    row.index = j;
    row.condition = !f1 || *f1 < j + r;
    row.closed_form = binomial(n - j - 1, r - 1);
    row.engine = facts.at_x1().coeff(j);
    row.identity = row.engine == row.closed_form;
    check.rows.push_back(std::move(row));
  }
  finish(check);
  return check;
}

IffCheck coeff_x_threshold_iff(const MatroidFacts& facts) {
  const int n = facts.size();
  const int r = facts.rank();
  const auto d1 = facts.circuits().d_k(1);
  IffCheck check;
  for (int i = 0; i <= r; ++i) {
    IffRow row;
    row.index = i;
    row.condition = !d1 || *d1 > r - i;
    row.closed_form = binomial(n - i - 1, r - i);
    row.engine = facts.at_y1().coeff(i);
    row.identity = row.engine == row.closed_form;
    check.rows.push_back(std::move(row));
  }
  finish(check);
  return check;
}

// -- graph statements --------------------------------------------------------

namespace {

void require_connected(const GraphFacts& facts, const char* what) {
  if (!facts.connected_nontrivial()) {
    throw Error(ErrorCode::kNotApplicable,
                std::string(what) + " needs a connected graph with at least 2 vertices");
  }
}

int connectivity(const GraphFacts& facts) { return facts.cuts().edge_connectivity.value_or(0); }

}  // namespace

IffCheck graph_gjk_iff(const GraphFacts& facts, int k) {
  require_index(k, "k");
  require_connected(facts, "edge-connectivity biconditional");
  const int n = facts.n();
  const int m = facts.m();
  const int g = facts.cyclomatic();
  const bool condition = connectivity(facts) >= k + 1;

  IffCheck check;
  bool identity_everywhere = true;
  for (int j = g - k; j <= g; ++j) {
    IffRow row;
    row.index = j;
    row.condition = condition;
    row.closed_form = binomial(m - j - 1, n - 2);
    row.engine = j < 0 ? BigInt(0) : facts.matroid().at_x1().coeff(j);
    row.identity = row.engine == row.closed_form;
    identity_everywhere = identity_everywhere && row.identity;
    check.rows.push_back(std::move(row));
  }
  if (condition != identity_everywhere) {
    check.pass = false;
    for (const IffRow& row : check.rows) {
      // With the condition true, report the failing index; otherwise the
      // identity held on the whole range and any row witnesses that.
      if (!condition || !row.identity) {
        check.counterexample = row;
        break;
      }
    }
  }
  return check;
}

CoeffValue graph_cg_coeff(const GraphFacts& facts, int j, int k) {
  require_index(j, "j");
  require_index(k, "k");
  require_connected(facts, "edge-cut coefficient formula");
  const int lambda = connectivity(facts);
  if (lambda < k + 1) {
    throw Error(ErrorCode::kPrecondition, "graph is not " + std::to_string(k + 1) +
                                              "-edge-connected (edge connectivity " +
                                              std::to_string(lambda) + ")");
  }
  const int n = facts.n();
  const int m = facts.m();
  const int g = facts.cyclomatic();
  const int bound = 2 * g - 3 * (k + 1);
  if (!(2 * j > bound) || j > g) {
    throw Error(ErrorCode::kPrecondition, "j = " + std::to_string(j) +
                                              " outside validity range 2j > 2g - 3(k+1) = " +
                                              std::to_string(bound) + ", j <= g = " +
                                              std::to_string(g));
  }
  BigInt value = binomial(m - j - 1, n - 2);
  for (int i = k + 1; i <= g - j; ++i) {
    value -= binomial(m - j - i - 1, n - 2) * BigInt(facts.cuts().cut_count(i));
  }
  return {value, CoeffMethod::kHyperplaneCorrection,
          "valid: 2j > 2g - 3(k+1) = " + std::to_string(bound)};
}

BoundCheck cut_flat_bound_check(const GraphFacts& facts, int k) {
  require_index(k, "k");
  require_connected(facts, "cut-size bound");
  const int lambda = connectivity(facts);
  if (lambda < k + 1) {
    throw Error(ErrorCode::kPrecondition, "graph is not " + std::to_string(k + 1) +
                                              "-edge-connected (edge connectivity " +
                                              std::to_string(lambda) + ")");
  }
  BoundCheck check;
  check.f2 = facts.matroid().flats().f_k(2);
  check.rhs = 2 * facts.m() - 3 * (k + 1);
  if (check.f2) {
    check.lhs = 2 * *check.f2;
    check.pass = check.lhs <= check.rhs;
  }
  return check;
}

CoeffValue graph_circuit_coeff(const GraphFacts& facts, int i) {
  require_index(i, "i");
  const int n = facts.n();
  const int m = facts.m();
  const int kg = facts.components();
  const auto h = facts.cuts().h_value;
  std::string validity = undefined_note("h", "i");
  if (h) {
    const int bound = n - kg - *h;
    if (i <= bound) {
      throw Error(ErrorCode::kPrecondition, "i = " + std::to_string(i) +
                                                " outside validity range i > n - k(G) - h = " +
                                                std::to_string(bound));
    }
    validity = "valid: i > n - k(G) - h = " + std::to_string(bound);
  }
  BigInt value = binomial(m - i - 1, n - kg - i);
  for (SubsetMask cycle : facts.matroid().circuits().circuits) {
    if (!h || cycle.size() < *h) value -= binomial(m - cycle.size() - i - 1, m - n + kg - 1);
  }
  const CoeffValue matroid_side = coeff_x_circuit(facts.matroid(), i);
  if (matroid_side.value != value) {
    throw Error(ErrorCode::kVerification,
                "graph and matroid circuit formulas disagree at i = " + std::to_string(i));
  }
  return {value, CoeffMethod::kCircuitCorrection, std::move(validity)};
}

IffCheck graph_girth_iff(const GraphFacts& facts) {
  const int n = facts.n();
  const int m = facts.m();
  const int kg = facts.components();
  const auto girth = facts.cuts().girth;
  IffCheck check;
  for (int i = 0; i <= n - kg; ++i) {
    IffRow row;
    row.index = i;
    row.condition = !girth || *girth > n - kg - i;
    row.closed_form = binomial(m - i - 1, n - kg - i);
    row.engine = facts.matroid().at_y1().coeff(i);
    row.identity = row.engine == row.closed_form;
    check.rows.push_back(std::move(row));
  }
  finish(check);
  const IffCheck matroid_side = coeff_x_threshold_iff(facts.matroid());
  if (matroid_side.rows.size() != check.rows.size()) {
    throw Error(ErrorCode::kVerification, "graph and matroid girth checks cover different ranges");
  }
  for (std::size_t idx = 0; idx < check.rows.size(); ++idx) {
    const IffRow& a = check.rows[idx];
    const IffRow& b = matroid_side.rows[idx];
    if (a.condition != b.condition || a.closed_form != b.closed_form) {
      throw Error(ErrorCode::kVerification,
                  "graph and matroid girth checks disagree at i = " + std::to_string(a.index));
    }
  }
  return check;
}

}  // namespace tutte
