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

#include "tutte/commands.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

#include "tutte/engines.hpp"
#include "tutte/error.hpp"

namespace tutte {

EngineChoice parse_engine(const std::string& name) {
  if (name == "subset") return EngineChoice::kSubset;
  if (name == "activities") return EngineChoice::kActivities;
  if (name == "delcon") return EngineChoice::kDelCon;
  if (name == "all") return EngineChoice::kAll;
  throw Error(ErrorCode::kInvalidParameters, "unknown engine '" + name + "'");
}

Matroid instance_matroid(const Instance& instance) {
  if (const auto* g = std::get_if<Multigraph>(&instance)) return cycle_matroid(*g);
  return std::get<Matroid>(instance);
}

BivariatePolynomial compute_tutte(const Instance& instance, EngineChoice engine) {
  const Multigraph* graph = std::get_if<Multigraph>(&instance);
  switch (engine) {
    case EngineChoice::kSubset:
      return tutte_subset_expansion(instance_matroid(instance));
    case EngineChoice::kActivities:
      return tutte_by_activities(instance_matroid(instance)).polynomial;
    case EngineChoice::kDelCon:
      if (!graph) {
        throw Error(ErrorCode::kNotApplicable, "deletion-contraction engine needs a graph input");
      }
      return tutte_deletion_contraction(*graph);
    case EngineChoice::kAll: {
      const Matroid m = instance_matroid(instance);
      const BivariatePolynomial subset = tutte_subset_expansion(m);
      if (tutte_by_activities(m).polynomial != subset) {
        throw Error(ErrorCode::kVerification, "activity engine disagrees with subset expansion");
      }
      if (graph && tutte_deletion_contraction(*graph) != subset) {
        throw Error(ErrorCode::kVerification,
                    "deletion-contraction engine disagrees with subset expansion");
      }
      return subset;
    }
  }
  throw Error(ErrorCode::kInvalidParameters, "unknown engine");
}

CoeffValue coefficient(const Instance& instance, char axis, int index, const std::string& method) {
  const MatroidFacts facts(instance_matroid(instance));
  if (axis == 'y') {
    if (method == "engine") return coeff_y_engine(facts, index);
    if (method == "sigma") return coeff_y_sigma(facts, index);
    if (method == "hyperplane") return coeff_y_hyperplane(facts, index);
    if (method == "cocircuit") return coeff_y_cocircuit(facts, index);
    if (method == "threshold") return coeff_y_threshold(facts, index);
    throw Error(ErrorCode::kInvalidParameters, "unknown y-method '" + method + "'");
  }
  if (axis == 'x') {
    if (method == "engine") return coeff_x_engine(facts, index);
    if (method == "tau") return coeff_x_tau(facts, index);
    if (method == "circuit") return coeff_x_circuit(facts, index);
    if (method == "threshold") return coeff_x_threshold(facts, index);
    throw Error(ErrorCode::kInvalidParameters, "unknown x-method '" + method + "'");
  }
  throw Error(ErrorCode::kInvalidParameters, "axis must be 'x' or 'y'");
}

std::string format_coefficient(const CoeffValue& value, char axis, int index, bool json) {
  if (json) {
    return nlohmann::json{{"axis", std::string(1, axis)},
                          {"index", index},
                          {"method", to_string(value.method)},
                          {"validity", value.validity},
                          {"value", value.value.str()}}
        .dump();
  }
  return value.value.str() + " (" + value.validity + ")";
}

namespace {

std::map<int, int> histogram(const std::vector<SubsetMask>& sets) {
  std::map<int, int> h;
  for (SubsetMask s : sets) ++h[s.size()];
  return h;
}

std::string histogram_text(const std::map<int, int>& h) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [size, count] : h) {
    os << (first ? "" : " ") << size << ':' << count;
    first = false;
  }
  return h.empty() ? "-" : os.str();
}

nlohmann::json histogram_json(const std::map<int, int>& h) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [size, count] : h) j[std::to_string(size)] = count;
  return j;
}

nlohmann::json opt_json(const std::optional<int>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string opt_text(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "undefined";
}

}  // namespace

std::string structure_report(const Instance& instance, bool json) {
  const MatroidFacts facts(instance_matroid(instance));
  const FlatReport& flats = facts.flats();
  const CircuitReport& circuits = facts.circuits();
  const Multigraph* graph = std::get_if<Multigraph>(&instance);
  std::optional<CutReport> cuts;
  if (graph) cuts = minimal_edge_cuts(*graph);

  const auto flat_h = histogram(flats.flats);
  const auto hyper_h = histogram(flats.hyperplanes);
  const auto circ_h = histogram(circuits.circuits);
  const auto cocirc_h = histogram(circuits.cocircuits);

  if (json) {
    nlohmann::json j;
    j["elements"] = facts.size();
    j["rank"] = facts.rank();
    j["flats"] = histogram_json(flat_h);
    j["hyperplanes"] = histogram_json(hyper_h);
    j["circuits"] = histogram_json(circ_h);
    j["cocircuits"] = histogram_json(cocirc_h);
    j["f1"] = opt_json(flats.f_k(1));
    j["f2"] = opt_json(flats.f_k(2));
    j["d1"] = opt_json(circuits.d_k(1));
    j["d2"] = opt_json(circuits.d_k(2));
    if (cuts) {
      j["girth"] = opt_json(cuts->girth);
      j["h"] = opt_json(cuts->h_value);
      j["edge_connectivity"] = opt_json(cuts->edge_connectivity);
      nlohmann::json ec = nlohmann::json::object();
      for (const auto& [size, list] : cuts->cuts_by_size) ec[std::to_string(size)] = list.size();
      j["edge_cuts"] = ec;
    }
    return j.dump();
  }

  std::ostringstream os;
  os << "elements " << facts.size() << '\n';
  os << "rank " << facts.rank() << '\n';
  os << "flats " << flats.flats.size() << " by-size " << histogram_text(flat_h) << '\n';
  os << "hyperplanes " << flats.hyperplanes.size() << " by-size " << histogram_text(hyper_h) << '\n';
  os << "circuits " << circuits.circuits.size() << " by-size " << histogram_text(circ_h) << '\n';
  os << "cocircuits " << circuits.cocircuits.size() << " by-size " << histogram_text(cocirc_h)
     << '\n';
  os << "f1 " << opt_text(flats.f_k(1)) << '\n';
  os << "f2 " << opt_text(flats.f_k(2)) << '\n';
  os << "d1 " << opt_text(circuits.d_k(1)) << '\n';
  os << "d2 " << opt_text(circuits.d_k(2)) << '\n';
  if (cuts) {
    os << "girth " << opt_text(cuts->girth) << '\n';
    os << "h " << opt_text(cuts->h_value) << '\n';
    os << "edge-connectivity " << opt_text(cuts->edge_connectivity) << '\n';
    for (const auto& [size, list] : cuts->cuts_by_size) os << "EC " << size << ' ' << list.size() << '\n';
  }
  return os.str();
}

}  // namespace tutte
