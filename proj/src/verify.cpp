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

#include "tutte/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "tutte/engines.hpp"
#include "tutte/error.hpp"
#include "tutte/theorems.hpp"

namespace tutte {

std::set<std::string> parse_check_selection(const std::string& spec) {
  const auto& known = check_names();
  if (spec.empty() || spec == "all") return {known.begin(), known.end()};
  std::set<std::string> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (std::find(known.begin(), known.end(), item) == known.end()) {
      throw Error(ErrorCode::kInvalidParameters, "unknown check '" + item + "'");
    }
    out.insert(item);
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidParameters, "empty check selection");
  return out;
}

std::size_t VerificationReport::failure_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const ReportEntry& e) { return !e.ok; }));
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "# instance: " << instance << '\n';
  for (const auto& note : notes) os << "# " << note << '\n';
  for (const auto& e : entries) os << e.method << ' ' << e.index << ' ' << e.value << '\n';
  os << "AGREEMENT: " << (agreement ? "pass" : "fail") << '\n';
  if (counterexample) {
    os << "COUNTEREXAMPLE: " << counterexample->index << ' ' << counterexample->method << ' '
       << counterexample->value << ' ' << counterexample->reference << '\n';
  }
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["instance"] = instance;
  j["notes"] = notes;
  auto entry_json = [](const ReportEntry& e) {
    return nlohmann::json{{"method", e.method},
                          {"index", e.index},
                          {"value", e.value.str()},
                          {"reference", e.reference.str()},
                          {"ok", e.ok}};
  };
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) j["entries"].push_back(entry_json(e));
  j["agreement"] = agreement;
  j["counterexample"] = counterexample ? entry_json(*counterexample) : nlohmann::json(nullptr);
  return j.dump();
}

namespace {

class Recorder {
 public:
  Recorder(VerificationReport& report, const std::set<std::string>& checks)
      : report_(report), checks_(checks) {}

  bool wants(const std::string& name) const { return checks_.count(name) > 0; }

  void compare(std::string method, int index, const BigInt& value, const BigInt& reference) {
    add(std::move(method), index, value, reference, value == reference);
  }

  void add(std::string method, int index, const BigInt& value, const BigInt& reference, bool ok) {
    report_.entries.push_back({std::move(method), index, value, reference, ok});
    if (!ok && report_.agreement) {
      report_.agreement = false;
      report_.counterexample = report_.entries.back();
    }
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

 private:
  VerificationReport& report_;
  const std::set<std::string>& checks_;
};

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : "undefined"; }

void compare_polynomials(Recorder& rec, const std::string& engine, const BivariatePolynomial& got,
                         const BivariatePolynomial& truth) {
  std::set<BivariatePolynomial::Exponent> support;
  for (const auto& [e, c] : got.terms()) support.insert(e);
  for (const auto& [e, c] : truth.terms()) support.insert(e);
  for (const auto& [i, j] : support) {
    rec.compare(engine + ":y" + std::to_string(j), i, got.coeff(i, j), truth.coeff(i, j));
  }
}

// Runs a formula over an index range, skipping indices outside its validity
// range and noting the range once.
void formula_range(Recorder& rec, const std::string& method, int lo, int hi,
                   const std::function<CoeffValue(int)>& formula,
                   const std::function<BigInt(int)>& engine) {
  std::string validity;
  for (int idx = lo; idx <= hi; ++idx) {
    try {
      CoeffValue v = formula(idx);
      if (validity.empty()) validity = v.validity;
      rec.compare(method, idx, v.value, engine(idx));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPrecondition) throw;
      if (validity.empty()) validity = e.what();
    }
  }
  rec.note(method + ": " + (validity.empty() ? "empty range" : validity));
}

void record_iff(Recorder& rec, const std::string& method, const IffCheck& check) {
  for (const IffRow& row : check.rows) {
    const bool ok = check.pass || (check.counterexample && check.counterexample->index != row.index);
    rec.add(method, row.index, row.closed_form, row.engine, ok);
  }
}

void verify_matroid_facts(const MatroidFacts& facts, Recorder& rec) {
  const Matroid& m = facts.matroid();
  const int n = facts.size();
  const int r = facts.rank();
  const auto& engine_y = [&facts](int j) { return facts.at_x1().coeff(j); };
  const auto& engine_x = [&facts](int i) { return facts.at_y1().coeff(i); };

  rec.note("size " + std::to_string(n) + ", rank " + std::to_string(r) + ", f1 " +
           opt(facts.flats().f_k(1)) + ", f2 " + opt(facts.flats().f_k(2)) + ", d1 " +
           opt(facts.circuits().d_k(1)) + ", d2 " + opt(facts.circuits().d_k(2)));

  if (rec.wants("engines")) {
    compare_polynomials(rec, "activities", tutte_by_activities(m).polynomial, facts.polynomial());
  }
  if (rec.wants("duality")) {
    const MatroidFacts dual(m.dual());
    compare_polynomials(rec, "duality", dual.polynomial().swapped(), facts.polynomial());
    for (int k = 1; k <= 2; ++k) {
      const auto d = facts.circuits().d_k(k);
      const auto f = dual.flats().f_k(k);
      if (!d && !f) continue;
      if (d && f) {
        rec.compare("dk+fk*", k, *d + *f, n);
      } else {
        rec.add("dk+fk*", k, -1, n, false);  // defined on one side only
      }
    }
  }
  if (rec.wants("sigma")) {
    for (int j = 0; j <= n - r; ++j) rec.compare("sigma", j, coeff_y_sigma(facts, j).value, engine_y(j));
  }
  if (rec.wants("tau")) {
    for (int i = 0; i <= r; ++i) rec.compare("tau", i, coeff_x_tau(facts, i).value, engine_x(i));
  }
  if (rec.wants("hyperplane")) {
    formula_range(rec, "hyperplane", 0, n - r, [&](int j) { return coeff_y_hyperplane(facts, j); },
                  engine_y);
  }
  if (rec.wants("cocircuit")) {
    formula_range(rec, "cocircuit", 0, n - r, [&](int j) { return coeff_y_cocircuit(facts, j); },
                  engine_y);
  }
  if (rec.wants("y-threshold")) record_iff(rec, "y-threshold", coeff_y_threshold_iff(facts));
  if (rec.wants("circuit")) {
    formula_range(rec, "circuit", 0, r, [&](int i) { return coeff_x_circuit(facts, i); }, engine_x);
  }
  if (rec.wants("x-threshold")) record_iff(rec, "x-threshold", coeff_x_threshold_iff(facts));
}

}  // namespace

VerificationReport verify_matroid(const Matroid& m, const std::set<std::string>& checks,
                                  const std::string& instance) {
  require_exhaustive(m.size(), "verification");
  VerificationReport report;
  report.instance = instance;
  Recorder rec(report, checks);
  verify_matroid_facts(MatroidFacts(m), rec);
  return report;
}

VerificationReport verify_graph(const Multigraph& g, const std::set<std::string>& checks,
                                const std::string& instance) {
  require_exhaustive(g.edge_count(), "verification");
  VerificationReport report;
  report.instance = instance;
  Recorder rec(report, checks);
  const GraphFacts facts(g);
  verify_matroid_facts(facts.matroid(), rec);

  const MatroidFacts& mf = facts.matroid();
  if (rec.wants("engines")) {
    compare_polynomials(rec, "delcon", tutte_deletion_contraction(g), mf.polynomial());
  }

  const CutReport& cuts = facts.cuts();
  rec.note("n " + std::to_string(facts.n()) + ", m " + std::to_string(facts.m()) +
           ", components " + std::to_string(facts.components()) + ", edge connectivity " +
           opt(cuts.edge_connectivity) + ", girth " + opt(cuts.girth) + ", h " + opt(cuts.h_value));

  const bool connected = facts.connected_nontrivial();
  const int lambda = cuts.edge_connectivity.value_or(0);
  const int gval = facts.cyclomatic();
  const auto engine_y = [&mf](int j) { return mf.at_x1().coeff(j); };
  const auto engine_x = [&mf](int i) { return mf.at_y1().coeff(i); };

  if (rec.wants("edge-connectivity")) {
    if (!connected) {
      rec.note("edge-connectivity: not applicable (needs a connected graph, n >= 2)");
    } else {
      for (int k = 0; k <= lambda; ++k) {
        record_iff(rec, "edge-connectivity[k=" + std::to_string(k) + "]", graph_gjk_iff(facts, k));
      }
    }
  }
  if (rec.wants("edge-cut")) {
    if (!connected) {
      rec.note("edge-cut: not applicable (needs a connected graph, n >= 2)");
    } else {
      for (int k = 0; k + 1 <= lambda; ++k) {
        formula_range(rec, "edge-cut[k=" + std::to_string(k) + "]", 0, gval,
                      [&](int j) { return graph_cg_coeff(facts, j, k); }, engine_y);
      }
    }
  }
  if (rec.wants("cut-bound")) {
    if (!connected) {
      rec.note("cut-bound: not applicable (needs a connected graph, n >= 2)");
    } else {
      for (int k = 0; k + 1 <= lambda; ++k) {
        const BoundCheck b = cut_flat_bound_check(facts, k);
        rec.add("cut-bound", k, b.lhs, b.rhs, b.pass);
      }
      if (!mf.flats().f_k(2)) rec.note("cut-bound: f2 undefined, bound holds vacuously");
    }
  }
  if (rec.wants("graph-circuit")) {
    try {
      formula_range(rec, "graph-circuit", 0, facts.n() - facts.components(),
                    [&](int i) { return graph_circuit_coeff(facts, i); }, engine_x);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kVerification) throw;
      rec.note(std::string("graph-circuit: ") + e.what());
      rec.add("graph-circuit", -1, 0, 0, false);
    }
  }
  if (rec.wants("graph-girth")) {
    try {
      record_iff(rec, "graph-girth", graph_girth_iff(facts));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kVerification) throw;
      rec.note(std::string("graph-girth: ") + e.what());
      rec.add("graph-girth", -1, 0, 0, false);
    }
  }
  return report;
}

}  // namespace tutte
