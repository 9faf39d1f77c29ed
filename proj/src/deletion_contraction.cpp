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

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "tutte/engines.hpp"

namespace tutte {

std::optional<BivariatePolynomial> DelConCache::find(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void DelConCache::insert(const std::string& key, const BivariatePolynomial& value) {
  std::lock_guard lock(mutex_);
  table_.emplace(key, value);
}

std::size_t DelConCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

std::uint64_t DelConCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::uint64_t DelConCache::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

void DelConCache::clear() {
  std::lock_guard lock(mutex_);
  table_.clear();
  hits_ = misses_ = 0;
}

// -- canonical form ----------------------------------------------------------

namespace {

constexpr int kMaxTiedCell = 8;
constexpr std::uint64_t kMaxOrderings = 40320;

using Signature = std::pair<int, std::vector<std::pair<int, int>>>;

}  // namespace

std::optional<std::string> canonical_key(int vertex_count, const std::vector<Edge>& edges) {
  // Compact away isolated vertices; loops are not expected here.
  std::vector<int> index(vertex_count, -1);
  int n = 0;
  for (const Edge& e : edges) {
    for (int v : {e.u, e.v}) {
      if (index[v] < 0) index[v] = n++;
    }
  }
  std::vector<std::vector<int>> weight(n, std::vector<int>(n, 0));
  for (const Edge& e : edges) {
    if (e.is_loop()) return std::nullopt;
    const int a = index[e.u];
    const int b = index[e.v];
    ++weight[a][b];
    ++weight[b][a];
  }

  // Colour refinement with multiplicity-labelled neighbourhoods.
  std::vector<int> colour(n, 0);
  int colour_count = n == 0 ? 0 : 1;
  for (;;) {
    std::vector<Signature> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int u = 0; u < n; ++u) {
        if (weight[v][u] > 0) sig[v].second.emplace_back(colour[u], weight[v][u]);
      }
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                   distinct.begin());
    }
    const int next = static_cast<int>(distinct.size());
    if (next == colour_count) break;
    colour_count = next;
  }

  std::vector<std::vector<int>> cells(colour_count);
  for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  std::uint64_t orderings = 1;
  for (const auto& cell : cells) {
    if (cell.size() > static_cast<std::size_t>(kMaxTiedCell)) return std::nullopt;
    for (std::size_t k = 2; k <= cell.size(); ++k) orderings *= k;
    if (orderings > kMaxOrderings) return std::nullopt;
  }

  std::string best;
  std::vector<int> order;
  order.reserve(n);
  auto encode = [&] {
    std::string code;
    code.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) code.push_back(static_cast<char>(weight[order[a]][order[b]]));
    return code;
  };
  std::function<void(std::size_t)> walk = [&](std::size_t cell_index) {
    if (cell_index == cells.size()) {
      std::string code = encode();
      if (best.empty() || code < best) best = std::move(code);
      return;
    }
    std::vector<int> cell = cells[cell_index];
    std::sort(cell.begin(), cell.end());
    do {
      order.insert(order.end(), cell.begin(), cell.end());
      walk(cell_index + 1);
      order.resize(order.size() - cell.size());
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  walk(0);

  std::string key;
  key.push_back(static_cast<char>(n));
  key += best;
  return key;
}

// -- recursion ---------------------------------------------------------------

namespace {

struct LabelledEdge {
  Edge ends;
  int label = 0;  // index in the original edge list
};

struct WorkGraph {
  int vertex_count = 0;
  std::vector<LabelledEdge> edges;
};

/// Bridge flags by Tarjan low-link; parallel edges are never bridges because
/// only the tree edge itself (by id) is skipped.
std::vector<bool> find_bridges(const WorkGraph& g) {
  const int n = g.vertex_count;
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i].ends;
    if (e.is_loop()) continue;
    adj[e.u].emplace_back(e.v, static_cast<int>(i));
    adj[e.v].emplace_back(e.u, static_cast<int>(i));
  }
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> bridge(g.edges.size(), false);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    for (auto [u, id] : adj[v]) {
      if (id == parent_edge) continue;
      if (disc[u] >= 0) {
        low[v] = std::min(low[v], disc[u]);
      } else {
        dfs(u, id);
        low[v] = std::min(low[v], low[u]);
        if (low[u] > disc[v]) bridge[id] = true;
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  return bridge;
}

class Engine {
 public:
  explicit Engine(const DelConOptions& options) : options_(options), rng_(options.seed) {
    if (options_.use_cache && !options_.cache) options_.cache = std::make_shared<DelConCache>();
  }

  BivariatePolynomial run(WorkGraph g) {
    // Loops contribute y each, bridges x each.
    int loop_count = 0;
    std::erase_if(g.edges, [&](const LabelledEdge& e) {
      if (!e.ends.is_loop()) return false;
      ++loop_count;
      return true;
    });
    const std::vector<bool> is_bridge = find_bridges(g);
    int bridge_count = 0;
    std::vector<int> rep(g.vertex_count);
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> root = [&](int v) { return rep[v] == v ? v : rep[v] = root(rep[v]); };
    std::vector<LabelledEdge> kept;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (is_bridge[i]) {
        ++bridge_count;
        rep[root(g.edges[i].ends.v)] = root(g.edges[i].ends.u);
      } else {
        kept.push_back(g.edges[i]);
      }
    }
    for (LabelledEdge& e : kept) e.ends = {root(e.ends.u), root(e.ends.v)};
    g.edges = std::move(kept);

    BivariatePolynomial factor = BivariatePolynomial::monomial(bridge_count, loop_count);
    if (g.edges.empty()) return factor;
    return factor * reduced(std::move(g));
  }

 private:
  // g has no loops and no bridges, and at least one edge.
  BivariatePolynomial reduced(WorkGraph g) {
    std::optional<std::string> key;
    if (options_.use_cache) {
      std::vector<Edge> plain;
      plain.reserve(g.edges.size());
      for (const auto& e : g.edges) plain.push_back(e.ends);
      key = canonical_key(g.vertex_count, plain);
      if (key) {
        if (auto hit = options_.cache->find(*key)) return *hit;
      }
    }

    std::size_t pivot = 0;
    if (options_.pivot == PivotRule::kRandom) {
      std::uniform_int_distribution<std::size_t> pick(0, g.edges.size() - 1);
      pivot = pick(rng_);
    } else {
      for (std::size_t i = 1; i < g.edges.size(); ++i)
        if (g.edges[i].label > g.edges[pivot].label) pivot = i;
    }
    const Edge e = g.edges[pivot].ends;

    WorkGraph deleted = g;
    deleted.edges.erase(deleted.edges.begin() + static_cast<std::ptrdiff_t>(pivot));

    WorkGraph contracted = deleted;
    for (auto& other : contracted.edges) {
      if (other.ends.u == e.v) other.ends.u = e.u;
      if (other.ends.v == e.v) other.ends.v = e.u;
    }

    BivariatePolynomial result = run(std::move(deleted));
    result += run(std::move(contracted));
    if (key) options_.cache->insert(*key, result);
    return result;
  }

  DelConOptions options_;
  std::mt19937_64 rng_;
};

}  // namespace

BivariatePolynomial tutte_deletion_contraction(const Multigraph& g, const DelConOptions& options) {
  WorkGraph work;
  work.vertex_count = g.vertex_count();
  for (int i = 0; i < g.edge_count(); ++i) work.edges.push_back({g.edge(i), i});
  Engine engine(options);
  return engine.run(std::move(work));
}

}  // namespace tutte
