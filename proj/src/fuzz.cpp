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

#include "tutte/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "json.hpp"

#include "tutte/error.hpp"

namespace tutte {

FuzzFamily parse_fuzz_family(const std::string& name) {
  if (name == "graphs") return FuzzFamily::kGraphs;
  if (name == "uniform") return FuzzFamily::kUniform;
  if (name == "bases") return FuzzFamily::kBases;
  throw Error(ErrorCode::kInvalidParameters, "unknown fuzz family '" + name + "'");
}

const char* to_string(FuzzFamily family) {
  switch (family) {
    case FuzzFamily::kGraphs: return "graphs";
    case FuzzFamily::kUniform: return "uniform";
    case FuzzFamily::kBases: return "bases";
  }
  return "unknown";
}

namespace {

// std distributions are implementation-defined; draws go through this
// helper so a seed replays identically everywhere.
class Sampler {
 public:
  Sampler(std::uint64_t seed, int trial) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    rng_.seed(z ^ (z >> 31));
  }

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = rng_.max() - rng_.max() % span;
    std::uint64_t v;
    do {
      v = rng_();
    } while (v >= limit);
    return lo + static_cast<int>(v % span);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[uniform(0, i)]);
  }

 private:
  std::mt19937_64 rng_;
};

Multigraph sample_graph(Sampler& s, int max_edges, bool connected) {
  int n;
  int m;
  if (connected) {
    n = s.uniform(std::min(2, max_edges + 1), std::min(8, max_edges + 1));
    m = s.uniform(n - 1, max_edges);
  } else {
    n = s.uniform(1, 8);
    m = s.uniform(0, max_edges);
  }
  std::vector<Edge> edges;
  if (connected) {
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    s.shuffle(label);
    for (int i = 1; i < n; ++i) edges.push_back({label[s.uniform(0, i - 1)], label[i]});
  }
  while (static_cast<int>(edges.size()) < m) edges.push_back({s.uniform(0, n - 1), s.uniform(0, n - 1)});
  s.shuffle(edges);
  return Multigraph(n, std::move(edges));
}

}  // namespace

Instance sample_instance(FuzzFamily family, int max_elements, bool connected, std::uint64_t seed,
                         int trial) {
  if (max_elements < 0) throw Error(ErrorCode::kInvalidParameters, "max elements must be >= 0");
  Sampler s(seed, trial);
  switch (family) {
    case FuzzFamily::kGraphs:
      return sample_graph(s, max_elements, connected);
    case FuzzFamily::kUniform: {
      const int n = s.uniform(0, max_elements);
      return make_uniform(s.uniform(0, n), n);
    }
    case FuzzFamily::kBases: {
      Matroid m = cycle_matroid(sample_graph(s, max_elements, connected));
      if (s.uniform(0, 1) == 1) m = m.dual();
      std::vector<int> perm(m.size());
      std::iota(perm.begin(), perm.end(), 0);
      s.shuffle(perm);
      const Matroid shuffled = relabel(m, perm);
      const std::vector<SubsetMask> list = bases(shuffled);
      return make_from_bases(shuffled.size(), list);
    }
  }
  throw Error(ErrorCode::kInvalidParameters, "unknown fuzz family");
}

namespace {

FuzzTrial run_trial(const FuzzOptions& options, int trial) {
  FuzzTrial out;
  out.trial = trial;
  try {
    const Instance inst = sample_instance(options.family, options.max_elements, options.connected,
                                          options.seed, trial);
    const std::string label = "fuzz " + std::string(to_string(options.family)) + " seed " +
                              std::to_string(options.seed) + " trial " + std::to_string(trial);
    if (const auto* g = std::get_if<Multigraph>(&inst)) {
      out.instance_text = format_graph(*g);
      out.report = verify_graph(*g, options.checks, label);
    } else {
      const auto& m = std::get<Matroid>(inst);
      out.instance_text = format_matroid(m);
      out.report = verify_matroid(m, options.checks, label);
    }
  } catch (const std::exception& e) {
    out.error = e.what();
    out.report.agreement = false;
  }
  return out;
}

}  // namespace

FuzzResult run_fuzz(const FuzzOptions& options) {
  if (options.trials < 0) throw Error(ErrorCode::kInvalidParameters, "trials must be >= 0");
  require_exhaustive(options.max_elements, "fuzz");
  FuzzResult result;
  result.options = options;

  std::vector<char> failed(options.trials, 0);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < options.trials; t = next++) {
      failed[t] = run_trial(options, t).report.agreement ? 0 : 1;
    }
  };
  const int workers = std::max(1, std::min(options.workers, options.trials));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (int t = 0; t < options.trials; ++t) {
    if (!failed[t]) continue;
    ++result.failures;
    // Rerun the first failure to keep its full report; trials are pure.
    if (!result.first_failure) result.first_failure = run_trial(options, t);
  }
  return result;
}

std::string FuzzResult::to_text() const {
  std::ostringstream os;
  os << "fuzz family=" << to_string(options.family) << " max-elements=" << options.max_elements
     << " seed=" << options.seed << " trials=" << options.trials
     << " connected=" << (options.connected ? 1 : 0) << " failures=" << failures << '\n';
  if (first_failure) {
    os << "FIRST-FAILURE trial=" << first_failure->trial << '\n';
    os << first_failure->instance_text;
    if (!first_failure->error.empty()) {
      os << "ERROR: " << first_failure->error << '\n';
    } else {
      os << first_failure->report.to_text();
    }
  }
  os << "AGREEMENT: " << (failures == 0 ? "pass" : "fail") << '\n';
  return os.str();
}

std::string FuzzResult::to_json() const {
  nlohmann::json j;
  j["family"] = to_string(options.family);
  j["max_elements"] = options.max_elements;
  j["seed"] = options.seed;
  j["trials"] = options.trials;
  j["connected"] = options.connected;
  j["failures"] = failures;
  j["agreement"] = failures == 0;
  if (first_failure) {
    nlohmann::json f;
    f["trial"] = first_failure->trial;
    f["instance"] = first_failure->instance_text;
    f["error"] = first_failure->error;
    f["report"] = nlohmann::json::parse(first_failure->report.to_json());
    j["first_failure"] = f;
  } else {
    j["first_failure"] = nullptr;
  }
  return j.dump();
}

}  // namespace tutte
