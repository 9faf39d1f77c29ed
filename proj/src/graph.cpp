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

#include "tutte/graph.hpp"

#include <algorithm>
#include <numeric>

#include "tutte/error.hpp"

namespace tutte {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw Error(ErrorCode::kInvalidParameters, "negative vertex count");
  if (edges_.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw Error(ErrorCode::kInvalidParameters, "more than 64 edges");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw Error(ErrorCode::kInvalidParameters,
                  "edge " + std::to_string(i) + " endpoint out of range");
    }
  }
}

Multigraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Multigraph(n, std::move(edges));
}

Multigraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multigraph(n, std::move(edges));
}

Multigraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Multigraph(n, std::move(edges));
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.vertex_count();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Multigraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

int component_count(const Multigraph& g, SubsetMask edges) {
  UnionFind uf(g.vertex_count());
  int components = g.vertex_count();
  for (int i : edges.elements()) {
    const Edge& e = g.edge(i);
    if (uf.unite(e.u, e.v)) --components;
  }
  return components;
}

bool is_connected(const Multigraph& g) { return component_count(g) <= 1; }

SubsetMask bridges(const Multigraph& g, SubsetMask edges) {
  const int base = component_count(g, edges);
  SubsetMask out;
  for (int i : edges.elements()) {
    if (g.edge(i).is_loop()) continue;
    if (component_count(g, edges.without(i)) > base) out = out.with(i);
  }
  return out;
}

Matroid cycle_matroid(const Multigraph& g) {
  const int n = g.vertex_count();
  return make_matroid(g.edge_count(), MatroidKind::kCycleOfGraph,
                      [g, n](SubsetMask a) { return n - component_count(g, a); });
}

CutReport minimal_edge_cuts(const Multigraph& g) {
  require_exhaustive(g.edge_count(), "edge cut enumeration");
  const Matroid m = cycle_matroid(g);
  const CircuitReport circuits = enumerate_circuits(m);
  CutReport report;
  for (SubsetMask c : circuits.cocircuits) report.cuts_by_size[c.size()].push_back(c);
  if (g.vertex_count() >= 2) {
    if (!is_connected(g)) {
      report.edge_connectivity = 0;
    } else if (!report.cuts_by_size.empty()) {
      report.edge_connectivity = report.cuts_by_size.begin()->first;
    }
  }
  report.girth = circuits.d_k(1);
  report.h_value = circuits.d_k(2);
  return report;
}

std::optional<int> min_bridgeless_corank2(const Multigraph& g) {
  require_exhaustive(g.edge_count(), "h(G) search");
  const int m = g.edge_count();
  const int n = g.vertex_count();
  for (int size = 0; size <= m; ++size) {
    bool found = false;
    for_each_k_subset(m, size, [&](SubsetMask a) {
      if (found) return;
      const int corank = a.size() - (n - component_count(g, a));
      if (corank == 2 && bridges(g, a).empty()) found = true;
    });
    if (found) return size;
  }
  return std::nullopt;
}

bool is_k_edge_connected(const Multigraph& g, int k_plus_1) {
  if (g.vertex_count() < 2 || !is_connected(g)) {
    throw Error(ErrorCode::kNotApplicable,
                "edge connectivity query needs a connected graph with at least 2 vertices");
  }
  if (k_plus_1 < 1) throw Error(ErrorCode::kInvalidParameters, "k+1 must be positive");
  const CutReport cuts = minimal_edge_cuts(g);
  return *cuts.edge_connectivity >= k_plus_1;
}

}  // namespace tutte
