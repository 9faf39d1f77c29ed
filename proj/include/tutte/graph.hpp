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

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tutte/matroid.hpp"
#include "tutte/subset.hpp"

namespace tutte {

struct Edge {
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertices 0..n-1 and an ordered edge list; loops and parallel edges are
/// allowed. Edge order is the ground-set order of the cycle matroid.
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws Error(kInvalidParameters) on an endpoint outside [0, n).
  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  SubsetMask all_edges() const { return SubsetMask::full(edge_count()); }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Small fixtures used throughout tests and docs.
Multigraph complete_graph(int n);
Multigraph cycle_graph(int n);
Multigraph path_graph(int n);
/// Disjoint union, b's vertices shifted past a's.
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

/// Components of the spanning subgraph (V, A). Loops never merge components.
int component_count(const Multigraph& g, SubsetMask edges);
inline int component_count(const Multigraph& g) { return component_count(g, g.all_edges()); }

bool is_connected(const Multigraph& g);

/// Edges of A whose removal increases k(V, A).
SubsetMask bridges(const Multigraph& g, SubsetMask edges);

/// Cycle matroid: rk(A) = n - k(A) on the edge set.
Matroid cycle_matroid(const Multigraph& g);

struct CutReport {
  std::map<int, std::vector<SubsetMask>> cuts_by_size;  // i -> EC_i(G)
  std::optional<int> edge_connectivity;                 // absent for n <= 1
  std::optional<int> girth;                             // absent for forests
  std::optional<int> h_value;                           // absent when corank < 2

  std::size_t cut_count(int size) const {
    auto it = cuts_by_size.find(size);
    return it == cuts_by_size.end() ? 0 : it->second.size();
  }
};

/// Minimal edge cuts as complements of hyperplanes of M(G), plus
/// connectivity, girth and h(G) from the cycle matroid.
CutReport minimal_edge_cuts(const Multigraph& g);

/// Minimum size of a bridgeless edge set of corank 2, by ascending-size
/// search over edge subsets (the direct route to h(G)).
std::optional<int> min_bridgeless_corank2(const Multigraph& g);

/// Edge connectivity >= k_plus_1. Requires a connected graph with n >= 2.
bool is_k_edge_connected(const Multigraph& g, int k_plus_1);

}  // namespace tutte
