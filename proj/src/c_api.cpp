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

#include "tutte/tutte_c.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "tutte/commands.hpp"
#include "tutte/error.hpp"
#include "tutte/fuzz.hpp"
#include "tutte/io.hpp"
#include "tutte/verify.hpp"

struct tutte_instance {
  tutte::Instance value;
};

struct tutte_poly {
  tutte::BivariatePolynomial value;
};

namespace {

thread_local std::string g_last_error;

tutte_status status_of(tutte::ErrorCode code) {
  using tutte::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidParameters: return TUTTE_INVALID_ARGUMENT;
    case ErrorCode::kInvalidBases: return TUTTE_INVALID_BASES;
    case ErrorCode::kSizeLimit: return TUTTE_SIZE_LIMIT;
    case ErrorCode::kPrecondition: return TUTTE_PRECONDITION;
    case ErrorCode::kNotApplicable: return TUTTE_NOT_APPLICABLE;
    case ErrorCode::kParse: return TUTTE_PARSE;
    case ErrorCode::kVerification: return TUTTE_VERIFICATION;
  }
  return TUTTE_INTERNAL;
}

template <class F>
tutte_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const tutte::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return TUTTE_INTERNAL;
}

tutte_status invalid(const char* what) {
  g_last_error = what;
  return TUTTE_INVALID_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tutte_status emit(tutte::Instance value, tutte_instance** out) {
  *out = new tutte_instance{std::move(value)};
  return TUTTE_OK;
}

}  // namespace

extern "C" {

const char* tutte_last_error(void) { return g_last_error.c_str(); }

void tutte_string_free(char* s) { std::free(s); }

int tutte_get_exhaustive_limit(void) { return tutte::exhaustive_limit(); }

tutte_status tutte_set_exhaustive_limit(int limit, int* previous) {
  return guarded([&] {
    const int old = tutte::set_exhaustive_limit(limit);
    if (previous) *previous = old;
    return TUTTE_OK;
  });
}

tutte_status tutte_parse(const char* text, tutte_instance** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] { return emit(tutte::parse_instance(text), out); });
}

tutte_status tutte_graph_create(int n, int m, const int* endpoints, tutte_instance** out) {
  if (!out || (m > 0 && !endpoints)) return invalid("null argument");
  if (n < 0 || m < 0) return invalid("negative size");
  return guarded([&] {
    std::vector<tutte::Edge> edges;
    for (int i = 0; i < m; ++i) edges.push_back({endpoints[2 * i], endpoints[2 * i + 1]});
    return emit(tutte::Multigraph(n, std::move(edges)), out);
  });
}

tutte_status tutte_uniform_create(int rank, int size, tutte_instance** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { return emit(tutte::make_uniform(rank, size), out); });
}

tutte_status tutte_matroid_from_bases(int size, const uint64_t* bases, size_t count,
                                      tutte_instance** out) {
  if (!out || (count > 0 && !bases)) return invalid("null argument");
  return guarded([&] {
    std::vector<tutte::SubsetMask> list;
    for (size_t i = 0; i < count; ++i) list.emplace_back(bases[i]);
    return emit(tutte::make_from_bases(size, list), out);
  });
}

tutte_status tutte_cycle_matroid(const tutte_instance* graph, tutte_instance** out) {
  if (!graph || !out) return invalid("null argument");
  const auto* g = std::get_if<tutte::Multigraph>(&graph->value);
  if (!g) {
    g_last_error = "instance is not a graph";
    return TUTTE_NOT_APPLICABLE;
  }
  return guarded([&] { return emit(tutte::cycle_matroid(*g), out); });
}

tutte_status tutte_dual(const tutte_instance* inst, tutte_instance** out) {
  if (!inst || !out) return invalid("null argument");
  return guarded([&] { return emit(tutte::instance_matroid(inst->value).dual(), out); });
}

void tutte_instance_free(tutte_instance* inst) { delete inst; }

int tutte_is_graph(const tutte_instance* inst) {
  return inst && std::holds_alternative<tutte::Multigraph>(inst->value) ? 1 : 0;
}

int tutte_ground_size(const tutte_instance* inst) {
  if (!inst) return -1;
  if (const auto* g = std::get_if<tutte::Multigraph>(&inst->value)) return g->edge_count();
  return std::get<tutte::Matroid>(inst->value).size();
}

tutte_status tutte_rank_of(const tutte_instance* inst, uint64_t subset, int* rank) {
  if (!inst || !rank) return invalid("null argument");
  return guarded([&] {
    const tutte::Matroid m = tutte::instance_matroid(inst->value);
    if (m.size() < 64 && (subset >> m.size()) != 0) {
      throw tutte::Error(tutte::ErrorCode::kInvalidParameters, "subset outside the ground set");
    }
    *rank = m.rank(tutte::SubsetMask(subset));
    return TUTTE_OK;
  });
}

tutte_status tutte_format_instance(const tutte_instance* inst, char** out) {
  if (!inst || !out) return invalid("null argument");
  return guarded([&] {
    if (const auto* g = std::get_if<tutte::Multigraph>(&inst->value)) {
      *out = dup(tutte::format_graph(*g));
    } else {
      *out = dup(tutte::format_matroid(std::get<tutte::Matroid>(inst->value)));
    }
    return TUTTE_OK;
  });
}

tutte_status tutte_polynomial(const tutte_instance* inst, const char* engine, tutte_poly** out) {
  if (!inst || !engine || !out) return invalid("null argument");
  return guarded([&] {
    auto p = tutte::compute_tutte(inst->value, tutte::parse_engine(engine));
    *out = new tutte_poly{std::move(p)};
    return TUTTE_OK;
  });
}

tutte_status tutte_poly_format(const tutte_poly* p, int json, char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] {
    *out = dup(json ? tutte::polynomial_json(p->value) : tutte::format_polynomial(p->value));
    return TUTTE_OK;
  });
}

tutte_status tutte_poly_coeff(const tutte_poly* p, int i, int j, char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] {
    *out = dup(p->value.coeff(i, j).str());
    return TUTTE_OK;
  });
}

void tutte_poly_free(tutte_poly* p) { delete p; }

tutte_status tutte_coefficient(const tutte_instance* inst, char axis, int index, const char* method,
                               int json, char** out) {
  if (!inst || !method || !out) return invalid("null argument");
  return guarded([&] {
    const tutte::CoeffValue v = tutte::coefficient(inst->value, axis, index, method);
    *out = dup(tutte::format_coefficient(v, axis, index, json != 0));
    return TUTTE_OK;
  });
}

tutte_status tutte_report(const tutte_instance* inst, int json, char** out) {
  if (!inst || !out) return invalid("null argument");
  return guarded([&] {
    *out = dup(tutte::structure_report(inst->value, json != 0));
    return TUTTE_OK;
  });
}

tutte_status tutte_verify(const tutte_instance* inst, const char* checks, int json, char** out) {
  if (!inst || !out) return invalid("null argument");
  return guarded([&] {
    const auto selection = tutte::parse_check_selection(checks ? checks : "all");
    tutte::VerificationReport report;
    if (const auto* g = std::get_if<tutte::Multigraph>(&inst->value)) {
      report = tutte::verify_graph(*g, selection);
    } else {
      report = tutte::verify_matroid(std::get<tutte::Matroid>(inst->value), selection);
    }
    *out = dup(json ? report.to_json() : report.to_text());
    if (report.agreement) return TUTTE_OK;
    g_last_error = "verification failed";
    return TUTTE_VERIFICATION;
  });
}

tutte_status tutte_fuzz(const tutte_fuzz_options* options, int json, char** out) {
  if (!options || !options->family || !out) return invalid("null argument");
  return guarded([&] {
    tutte::FuzzOptions opts;
    opts.family = tutte::parse_fuzz_family(options->family);
    opts.max_elements = options->max_elements;
    opts.seed = options->seed;
    opts.trials = options->trials;
    opts.connected = options->connected != 0;
    opts.workers = options->workers;
    opts.checks = tutte::parse_check_selection(options->checks ? options->checks : "all");
    const tutte::FuzzResult result = tutte::run_fuzz(opts);
    *out = dup(json ? result.to_json() : result.to_text());
    if (result.failures == 0) return TUTTE_OK;
    g_last_error = std::to_string(result.failures) + " fuzz trial(s) failed";
    return TUTTE_VERIFICATION;
  });
}

}  // extern "C"
