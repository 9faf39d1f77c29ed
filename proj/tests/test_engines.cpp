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

#include "doctest.h"

#include <numeric>
#include <random>

#include "catalogue.hpp"
#include "oracles.hpp"
#include "tutte/engines.hpp"
#include "tutte/error.hpp"

using namespace tutte;

namespace {

oracle::Poly as_oracle(const BivariatePolynomial& p) {
  oracle::Poly out;
  for (const auto& [e, c] : p.terms()) out[e] = c;
  return out;
}

Multigraph to_graph(const catalogue::Graph& g) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return Multigraph(g.n, std::move(edges));
}

BivariatePolynomial k4_golden() {
  BivariatePolynomial p;
  p.add_term(3, 0, 1);
  p.add_term(2, 0, 3);
  p.add_term(1, 0, 2);
  p.add_term(1, 1, 4);
  p.add_term(0, 1, 2);
  p.add_term(0, 2, 3);
  p.add_term(0, 3, 1);
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  BivariatePolynomial a = BivariatePolynomial::monomial(1, 0) + BivariatePolynomial::monomial(0, 1);
  BivariatePolynomial sq = a * a;
  CHECK(sq.coeff(2, 0) == 1);
  CHECK(sq.coeff(1, 1) == 2);
  CHECK(sq.coeff(0, 2) == 1);
  CHECK(sq.evaluate(2, 3) == 25);
  CHECK(sq.swapped() == sq);
  BivariatePolynomial z = a;
  z += BivariatePolynomial::monomial(1, 0, -1);
  CHECK(z == BivariatePolynomial::monomial(0, 1));
  CHECK(z.terms().size() == 1);
  CHECK(a.to_pretty() == "x + y");
  BivariatePolynomial neg = BivariatePolynomial::constant(-2);
  CHECK_FALSE(neg.has_nonnegative_coefficients());
  CHECK(specialize_x_at_1(sq).coeff(0) == 1);
  CHECK(specialize_x_at_1(sq).coeff(1) == 2);
  CHECK(specialize_y_at_1(sq).degree() == 2);
}

TEST_CASE("golden polynomials") {
  BivariatePolynomial k3;
  k3.add_term(2, 0, 1);
  k3.add_term(1, 0, 1);
  k3.add_term(0, 1, 1);
  const Matroid mk3 = cycle_matroid(complete_graph(3));
  CHECK(tutte_subset_expansion(mk3) == k3);
  CHECK(tutte_by_activities(mk3).polynomial == k3);
  CHECK(tutte_deletion_contraction(complete_graph(3)) == k3);

  const BivariatePolynomial k4 = k4_golden();
  CHECK(tutte_subset_expansion(cycle_matroid(complete_graph(4))) == k4);
  CHECK(tutte_deletion_contraction(complete_graph(4)) == k4);

  const UnivariatePolynomial u24 = specialize_x_at_1(tutte_subset_expansion(make_uniform(2, 4)));
  CHECK(u24.coeff(0) == 3);
  CHECK(u24.coeff(1) == 2);
  CHECK(u24.coeff(2) == 1);
  CHECK(u24.degree() == 2);
}

TEST_CASE("empty and trivial matroids") {
  CHECK(tutte_subset_expansion(make_uniform(0, 0)) == BivariatePolynomial::constant(1));
  CHECK(tutte_subset_expansion(make_uniform(0, 2)) == BivariatePolynomial::monomial(0, 2));
  CHECK(tutte_subset_expansion(make_uniform(2, 2)) == BivariatePolynomial::monomial(2, 0));
  CHECK(tutte_deletion_contraction(Multigraph(3, {})) == BivariatePolynomial::constant(1));
}

TEST_CASE("engines match the plain recursion on small connected multigraphs") {
  const auto levels = catalogue::connected_multigraphs(6, true);
  for (const auto& level : levels) {
    for (const auto& cg : level) {
      const Multigraph g = to_graph(cg);
      const oracle::Poly truth = oracle::tutte_graph(cg.n, cg.edges);
      const Matroid m = cycle_matroid(g);
      CHECK(as_oracle(tutte_subset_expansion(m)) == truth);
      CHECK(as_oracle(tutte_by_activities(m).polynomial) == truth);
      CHECK(as_oracle(tutte_deletion_contraction(g)) == truth);
    }
  }
}

TEST_CASE("uniform matroids match the size-grouped formula") {
  for (int n = 0; n <= 8; ++n) {
    for (int r = 0; r <= n; ++r) {
      const Matroid u = make_uniform(r, n);
      const oracle::Poly truth = oracle::tutte_uniform(r, n);
      CHECK(as_oracle(tutte_subset_expansion(u)) == truth);
      CHECK(as_oracle(tutte_by_activities(u).polynomial) == truth);
    }
  }
}

TEST_CASE("evaluations count bases and subsets") {
  for (const auto& level : catalogue::connected_multigraphs(5, true)) {
    for (const auto& cg : level) {
      const Matroid m = cycle_matroid(to_graph(cg));
      const BivariatePolynomial t = tutte_subset_expansion(m);
      CHECK(t.evaluate(1, 1) == bases(m).size());
      CHECK(t.evaluate(2, 2) == BigInt(1) << m.size());
      CHECK(t.has_nonnegative_coefficients());
    }
  }
}

TEST_CASE("activity records cover every base once") {
  const Matroid m = cycle_matroid(complete_graph(4));
  const ActivityExpansion a = tutte_by_activities(m);
  CHECK(a.records.size() == 16);
  for (std::size_t i = 1; i < a.records.size(); ++i) CHECK(a.records[i - 1].base < a.records[i].base);
  for (const auto& rec : a.records) {
    CHECK(m.is_basis(rec.base));
    CHECK(rec.internal_activity <= m.rank());
    CHECK(rec.external_activity <= m.size() - m.rank());
  }
}

TEST_CASE("deletion-contraction pivot rules and cache") {
  const Multigraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 3}, {2, 2}, {0, 1}});
  const BivariatePolynomial truth = tutte_subset_expansion(cycle_matroid(g));

  DelConOptions plain;
  plain.use_cache = false;
  CHECK(tutte_deletion_contraction(g, plain) == truth);

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    DelConOptions random;
    random.pivot = PivotRule::kRandom;
    random.seed = seed;
    CHECK(tutte_deletion_contraction(g, random) == truth);
  }

  DelConOptions shared;
  shared.cache = std::make_shared<DelConCache>();
  CHECK(tutte_deletion_contraction(g, shared) == truth);
  const std::uint64_t misses = shared.cache->misses();
  CHECK(shared.cache->size() > 0);
  CHECK(tutte_deletion_contraction(g, shared) == truth);
  CHECK(shared.cache->hits() > 0);
  CHECK(shared.cache->misses() == misses);
  shared.cache->clear();
  CHECK(shared.cache->size() == 0);
}

TEST_CASE("canonical key is invariant under relabelling") {
  std::mt19937_64 rng(7);
  for (const auto& level : catalogue::connected_multigraphs(6, false)) {
    for (const auto& cg : level) {
      std::vector<Edge> edges;
      for (auto [u, v] : cg.edges) edges.push_back({u, v});
      const auto key = canonical_key(cg.n, edges);
      if (!key) continue;
      std::vector<int> perm(cg.n);
      std::iota(perm.begin(), perm.end(), 0);
      for (int t = 0; t < 3; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> moved;
        for (const Edge& e : edges) moved.push_back({perm[e.v], perm[e.u]});
        std::shuffle(moved.begin(), moved.end(), rng);
        CHECK(canonical_key(cg.n, moved) == key);
      }
    }
  }
}

TEST_CASE("canonical key separates non-isomorphic graphs") {
  std::set<std::string> keys;
  int counted = 0;
  for (const auto& level : catalogue::connected_multigraphs(6, false)) {
    for (const auto& cg : level) {
      std::vector<Edge> edges;
      for (auto [u, v] : cg.edges) edges.push_back({u, v});
      if (auto key = canonical_key(cg.n, edges)) {
        keys.insert(*key);
        ++counted;
      }
    }
  }
  CHECK(static_cast<int>(keys.size()) == counted);
}

TEST_CASE("canonical key ignores isolated vertices") {
  const std::vector<Edge> tri = {{0, 1}, {1, 2}, {2, 0}};
  const std::vector<Edge> shifted = {{1, 2}, {2, 3}, {3, 1}};
  CHECK(canonical_key(3, tri) == canonical_key(5, shifted));
}

TEST_CASE("duality swaps the variables") {
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      const DualityCheck d = duality_check(make_uniform(r, n));
      CHECK(d.pass);
      CHECK_FALSE(d.mismatch.has_value());
    }
  }
  const DualityCheck k4 = duality_check(cycle_matroid(complete_graph(4)));
  CHECK(k4.pass);
  CHECK(k4.dual == k4.primal.swapped());
}

TEST_CASE("engines refuse oversize inputs") {
  const int old = set_exhaustive_limit(4);
  try {
    tutte_subset_expansion(make_uniform(2, 5));
    FAIL("expected size limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSizeLimit);
  }
  set_exhaustive_limit(old);
}
