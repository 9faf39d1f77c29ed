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

#include <algorithm>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "tutte/error.hpp"
#include "tutte/graph.hpp"
#include "tutte/matroid.hpp"

using namespace tutte;

namespace {

std::vector<std::uint64_t> bits(const std::vector<SubsetMask>& v) {
  std::vector<std::uint64_t> out;
  for (SubsetMask s : v) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matroid> zoo() {
  std::vector<Matroid> out;
  for (int n = 0; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) out.push_back(make_uniform(r, n));
  }
  out.push_back(cycle_matroid(complete_graph(4)));
  out.push_back(cycle_matroid(Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}, {0, 2}})));
  out.push_back(cycle_matroid(disjoint_union(cycle_graph(3), path_graph(3))));
  out.push_back(cycle_matroid(complete_graph(4)).dual());
  return out;
}

}  // namespace

TEST_CASE("subset mask basics") {
  SubsetMask a = SubsetMask::of({0, 2, 5});
  CHECK(a.size() == 3);
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(1));
  CHECK(a.to_string() == "{0,2,5}");
  CHECK(a.complement(6) == SubsetMask::of({1, 3, 4}));
  CHECK(a.without(2).with(1) == SubsetMask::of({0, 1, 5}));
  CHECK(SubsetMask::full(64).size() == 64);
  CHECK(SubsetMask().to_string() == "{}");

  int count = 0;
  for_each_k_subset(6, 3, [&](SubsetMask s) {
    CHECK(s.size() == 3);
    ++count;
  });
  CHECK(count == 20);
  count = 0;
  for_each_k_subset(4, 0, [&](SubsetMask s) {
    CHECK(s.empty());
    ++count;
  });
  CHECK(count == 1);
}

TEST_CASE("exhaustive limit guards enumeration") {
  const int old = set_exhaustive_limit(3);
  CHECK_THROWS_AS(make_uniform(2, 5).rank_table(), Error);
  try {
    enumerate_flats(make_uniform(2, 5));
    FAIL("expected size limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSizeLimit);
  }
  CHECK(set_exhaustive_limit(99) == 3);
  CHECK(exhaustive_limit() == kHardExhaustiveLimit);
  set_exhaustive_limit(old);
}

TEST_CASE("uniform matroid rank") {
  Matroid u = make_uniform(2, 4);
  CHECK(u.size() == 4);
  CHECK(u.rank() == 2);
  CHECK(u.rank(SubsetMask::of({1})) == 1);
  CHECK(u.rank(SubsetMask::of({0, 1, 3})) == 2);
  CHECK(bases(u).size() == 6);
  CHECK_THROWS_AS(make_uniform(5, 4), Error);
  CHECK_THROWS_AS(make_uniform(-1, 4), Error);
}

TEST_CASE("explicit bases are validated") {
  SUBCASE("good") {
    std::vector<SubsetMask> b = {SubsetMask::of({0, 1}), SubsetMask::of({0, 2}), SubsetMask::of({1, 2})};
    Matroid m = make_from_bases(3, b);
    CHECK(m.rank() == 2);
    CHECK(m.kind() == MatroidKind::kExplicitBases);
    CHECK(same_oracle(m, make_uniform(2, 3)));
  }
  SUBCASE("exchange axiom fails") {
    // {0,1} and {2,3}: 0 cannot be replaced from {2,3}.
    std::vector<SubsetMask> b = {SubsetMask::of({0, 1}), SubsetMask::of({2, 3})};
    try {
      make_from_bases(4, b);
      FAIL("expected invalid bases");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidBases);
    }
  }
  SUBCASE("unequal sizes") {
    std::vector<SubsetMask> b = {SubsetMask::of({0, 1}), SubsetMask::of({2})};
    CHECK_THROWS_AS(make_from_bases(3, b), Error);
  }
  SUBCASE("empty list") {
    std::vector<SubsetMask> b;
    CHECK_THROWS_AS(make_from_bases(3, b), Error);
  }
  SUBCASE("element out of range") {
    std::vector<SubsetMask> b = {SubsetMask::of({4})};
    CHECK_THROWS_AS(make_from_bases(3, b), Error);
  }
}

TEST_CASE("rebuilding from bases reproduces the rank oracle") {
  for (const Matroid& m : zoo()) {
    if (m.rank() == 0) continue;  // a list of bases cannot say {} here
    const auto list = bases(m);
    CHECK(same_oracle(make_from_bases(m.size(), list), m));
  }
}

TEST_CASE("cycle matroid rank matches component count") {
  Multigraph g(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 3}, {0, 1}});
  oracle::EdgeList el;
  for (const Edge& e : g.edges()) el.push_back({e.u, e.v});
  Matroid m = cycle_matroid(g);
  for_each_subset(g.edge_count(), [&](SubsetMask a) {
    CHECK(m.rank(a) == oracle::graph_rank(4, el, a.bits()));
  });
}

TEST_CASE("dual rank and involution") {
  for (const Matroid& m : zoo()) {
    Matroid d = m.dual();
    CHECK(d.rank() == m.size() - m.rank());
    CHECK(same_oracle(d.dual(), m));
    for_each_subset(m.size(), [&](SubsetMask a) {
      CHECK(d.rank(a) == a.size() + m.rank(a.complement(m.size())) - m.rank());
    });
  }
  CHECK(same_oracle(make_uniform(2, 5).dual(), make_uniform(3, 5)));
}

TEST_CASE("relabel permutes elements") {
  Matroid m = cycle_matroid(Multigraph(3, {{0, 1}, {0, 1}, {1, 2}}));
  std::vector<int> perm = {2, 0, 1};
  Matroid r = relabel(m, perm);
  // Element i of m is element perm[i] of r.
  for_each_subset(3, [&](SubsetMask a) {
    SubsetMask b;
    for (int e : a.elements()) b = b.with(perm[e]);
    CHECK(r.rank(b) == m.rank(a));
  });
  std::vector<int> bad = {0, 0, 1};
  CHECK_THROWS_AS(relabel(m, bad), Error);
}

TEST_CASE("rank axioms hold for built-in constructions") {
  for (const Matroid& m : zoo()) {
    CHECK_FALSE(check_rank_axioms(m).has_value());
    CHECK_FALSE(check_rank_axioms(m.dual()).has_value());
  }
}

TEST_CASE("rank axiom violations are reported") {
  SUBCASE("bounds") {
    auto v = check_rank_axioms(2, [](SubsetMask a) { return a.size() + 1; });
    REQUIRE(v.has_value());
    CHECK(v->axiom == RankAxiomViolation::Axiom::kBounds);
  }
  SUBCASE("monotone") {
    auto v = check_rank_axioms(2, [](SubsetMask a) { return a.size() == 2 ? 0 : a.size(); });
    REQUIRE(v.has_value());
    CHECK(v->axiom == RankAxiomViolation::Axiom::kMonotone);
  }
  SUBCASE("submodular") {
    // rk = 0 on {}, 1 on singletons, 2 on {0,1} and {0,1,2} but rk({0,2}) = rk({1,2}) = 1.
    auto rank = [](SubsetMask a) {
      if (a.empty()) return 0;
      if (a.size() == 1) return 1;
      if (a.size() == 3) return 2;
      return a == SubsetMask::of({0, 1}) ? 2 : 1;
    };
    auto v = check_rank_axioms(3, rank);
    REQUIRE(v.has_value());
    CHECK(v->axiom == RankAxiomViolation::Axiom::kSubmodular);
    CHECK_FALSE(v->describe().empty());
  }
}

TEST_CASE("flats, hyperplanes, circuits and cocircuits match definitions") {
  for (const Matroid& m : zoo()) {
    auto rank = [&m](std::uint64_t a) { return m.rank(SubsetMask(a)); };
    const FlatReport fr = enumerate_flats(m);
    const CircuitReport cr = enumerate_circuits(m);
    CHECK(bits(fr.flats) == oracle::flats(m.size(), rank));
    CHECK(bits(cr.circuits) == oracle::circuits(m.size(), rank));

    std::vector<std::uint64_t> hyper;
    for (auto f : oracle::flats(m.size(), rank)) {
      if (rank(f) == m.rank() - 1) hyper.push_back(f);
    }
    CHECK(bits(fr.hyperplanes) == hyper);

    const Matroid d = m.dual();
    auto drank = [&d](std::uint64_t a) { return d.rank(SubsetMask(a)); };
    CHECK(bits(cr.cocircuits) == oracle::circuits(m.size(), drank));

    for (SubsetMask f : fr.flats) CHECK(closure(m, f) == f);
  }
}

TEST_CASE("f_k and d_k match brute force") {
  for (const Matroid& m : zoo()) {
    const int n = m.size();
    const int r = m.rank();
    const FlatReport fr = enumerate_flats(m);
    const CircuitReport cr = enumerate_circuits(m);
    for (int k = 1; k <= r; ++k) {
      std::optional<int> best;
      for_each_subset(n, [&](SubsetMask a) {
        if (m.rank(a) == r - k && closure(m, a) == a) best = std::max(best.value_or(0), a.size());
      });
      CHECK(fr.f_k(k) == best);
    }
    CHECK_FALSE(fr.f_k(r + 1).has_value());
    for (int k = 1; k <= n - r + 1; ++k) {
      std::optional<int> best;
      for_each_subset(n, [&](SubsetMask a) {
        bool in_d = true;
        for (int e : a.elements()) in_d = in_d && m.rank(a.without(e)) == m.rank(a);
        if (in_d && a.size() - m.rank(a) == k && (!best || a.size() < *best)) best = a.size();
      });
      CHECK(cr.d_k(k) == best);
    }
  }
}

TEST_CASE("D-sets are unions of circuits") {
  Matroid m = cycle_matroid(complete_graph(4));
  const auto circuits = enumerate_circuits(m).circuits;
  for_each_subset(m.size(), [&](SubsetMask a) {
    SubsetMask u;
    for (SubsetMask c : circuits) {
      if (c.subset_of(a)) u = u | c;
    }
    CHECK(is_dependent_closed(m, a) == (u == a));
  });
}

TEST_CASE("sigma and tau profiles") {
  Matroid u = make_uniform(2, 4);
  CHECK(sigma_profile(u).counts == std::vector<std::uint64_t>{0, 0, 6, 4, 1});
  CHECK(tau_profile(u).counts == std::vector<std::uint64_t>{1, 4, 6, 0, 0});
  for (const Matroid& m : zoo()) {
    // Complements of spanning sets are independent in the dual.
    const auto s = sigma_profile(m).counts;
    const auto t = tau_profile(m.dual()).counts;
    for (int k = 0; k <= m.size(); ++k) CHECK(s[k] == t[m.size() - k]);
  }
}

TEST_CASE("loops and closure") {
  Matroid m = cycle_matroid(Multigraph(2, {{0, 0}, {0, 1}, {1, 1}, {0, 1}}));
  CHECK(loops(m) == SubsetMask::of({0, 2}));
  CHECK(closure(m, SubsetMask::of({1})) == SubsetMask::full(4));
  CHECK(make_uniform(0, 3).rank() == 0);
  CHECK(loops(make_uniform(0, 3)) == SubsetMask::full(3));
}
