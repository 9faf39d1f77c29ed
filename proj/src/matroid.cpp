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

#include "tutte/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "tutte/error.hpp"

namespace tutte {

const char* to_string(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kUniform: return "uniform";
    case MatroidKind::kExplicitBases: return "explicit-bases";
    case MatroidKind::kCycleOfGraph: return "cycle-of-graph";
    case MatroidKind::kDualOf: return "dual-of";
    case MatroidKind::kRelabeled: return "relabeled";
  }
  return "unknown";
}

namespace detail {

using TableBuilder = std::function<std::vector<std::uint8_t>()>;

struct MatroidState {
  int size = 0;
  int full_rank = 0;
  MatroidKind kind = MatroidKind::kUniform;
  RankFunction rank;
  TableBuilder builder;  // optional faster route to the full table

  mutable std::once_flag table_once;
  mutable std::vector<std::uint8_t> table;
  mutable std::atomic<bool> table_ready{false};
};

struct MatroidFactory {
  static Matroid build(std::shared_ptr<const MatroidState> state) {
    return Matroid(std::move(state));
  }
};

}  // namespace detail

namespace {

std::shared_ptr<detail::MatroidState> new_state(int size, MatroidKind kind, RankFunction rank,
                                                detail::TableBuilder builder = {}) {
  if (size < 0 || size > kMaxGroundSize) {
    throw Error(ErrorCode::kInvalidParameters,
                "ground set size " + std::to_string(size) + " outside [0, 64]");
  }
  auto s = std::make_shared<detail::MatroidState>();
  s->size = size;
  s->kind = kind;
  s->rank = std::move(rank);
  s->builder = std::move(builder);
  s->full_rank = s->rank(SubsetMask::full(size));
  return s;
}

}  // namespace

Matroid::Matroid() : Matroid(new_state(0, MatroidKind::kUniform, [](SubsetMask) { return 0; })) {}

Matroid::Matroid(std::shared_ptr<const detail::MatroidState> state) : state_(std::move(state)) {}

int Matroid::size() const { return state_->size; }
int Matroid::rank() const { return state_->full_rank; }
MatroidKind Matroid::kind() const { return state_->kind; }

int Matroid::rank(SubsetMask subset) const {
  if (state_->table_ready.load(std::memory_order_acquire)) return state_->table[subset.bits()];
  return state_->rank(subset);
}

std::span<const std::uint8_t> Matroid::rank_table() const {
  require_exhaustive(size(), "rank table");
  std::call_once(state_->table_once, [this] {
    const auto& s = *state_;
    if (s.builder) {
      s.table = s.builder();
    } else {
      s.table.resize(std::size_t{1} << s.size);
      for_each_subset(s.size, [&](SubsetMask a) {
        s.table[a.bits()] = static_cast<std::uint8_t>(s.rank(a));
      });
    }
    s.table_ready.store(true, std::memory_order_release);
  });
  return state_->table;
}

Matroid Matroid::dual() const {
  Matroid base = *this;
  const int n = size();
  const int r = rank();
  return make_matroid(n, MatroidKind::kDualOf, [base, n, r](SubsetMask a) {
    return a.size() + base.rank(a.complement(n)) - r;
  });
}

bool same_oracle(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  require_exhaustive(a.size(), "oracle comparison");
  bool same = true;
  for_each_subset(a.size(), [&](SubsetMask s) {
    if (same && a.rank(s) != b.rank(s)) same = false;
  });
  return same;
}

Matroid make_matroid(int size, MatroidKind kind, RankFunction rank) {
  return detail::MatroidFactory::build(new_state(size, kind, std::move(rank)));
}

Matroid make_uniform(int rank, int size) {
  if (size < 0 || rank < 0 || rank > size) {
    throw Error(ErrorCode::kInvalidParameters,
                "uniform matroid needs 0 <= r <= n (got r=" + std::to_string(rank) +
                    ", n=" + std::to_string(size) + ")");
  }
  return make_matroid(size, MatroidKind::kUniform,
                      [rank](SubsetMask a) { return std::min(a.size(), rank); });
}

Matroid make_from_bases(int size, std::span<const SubsetMask> bases) {
  if (size < 0 || size > kMaxGroundSize) {
    throw Error(ErrorCode::kInvalidParameters, "ground set size out of range");
  }
  if (bases.empty()) throw Error(ErrorCode::kInvalidBases, "invalid bases: empty base list");
  const SubsetMask ground = SubsetMask::full(size);
  const int r = bases.front().size();
  std::unordered_set<std::uint64_t> lookup;
  for (SubsetMask b : bases) {
    if (!b.subset_of(ground)) {
      throw Error(ErrorCode::kInvalidBases,
                  "invalid bases: " + b.to_string() + " leaves the ground set");
    }
    if (b.size() != r) {
      throw Error(ErrorCode::kInvalidBases, "invalid bases: unequal cardinalities " +
                                                bases.front().to_string() + " and " +
                                                b.to_string());
    }
    lookup.insert(b.bits());
  }
  std::vector<SubsetMask> unique;
  unique.reserve(lookup.size());
  for (auto bits : lookup) unique.emplace_back(bits);
  std::sort(unique.begin(), unique.end());

  // Exchange: for B1, B2 and x in B1 \ B2 some y in B2 \ B1 has B1 - x + y a base.
  for (SubsetMask b1 : unique) {
    for (SubsetMask b2 : unique) {
      const SubsetMask only1 = SubsetMask(b1.bits() & ~b2.bits());
      const SubsetMask only2 = SubsetMask(b2.bits() & ~b1.bits());
      for (int x : only1.elements()) {
        bool found = false;
        for (int y : only2.elements()) {
          if (lookup.count(b1.without(x).with(y).bits())) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw Error(ErrorCode::kInvalidBases,
                      "invalid bases: exchange fails for " + b1.to_string() + " and " +
                          b2.to_string() + " at element " + std::to_string(x));
        }
      }
    }
  }

  auto rank_fn = [unique](SubsetMask a) {
    int best = 0;
    for (SubsetMask b : unique) best = std::max(best, (a & b).size());
    return best;
  };
  // Independent sets are the subsets of bases; rank follows by one pass
  // over masks in increasing order.
  auto builder = [unique, size]() {
    const std::size_t count = std::size_t{1} << size;
    std::vector<std::uint8_t> indep(count, 0);
    for (SubsetMask b : unique) indep[b.bits()] = 1;
    for (std::size_t bits = count; bits-- > 0;) {
      if (indep[bits]) continue;
      for (int e = 0; e < size; ++e) {
        const std::size_t up = bits | (std::size_t{1} << e);
        if (up != bits && indep[up]) {
          indep[bits] = 1;
          break;
        }
      }
    }
    std::vector<std::uint8_t> table(count, 0);
    for (std::size_t bits = 1; bits < count; ++bits) {
      if (indep[bits]) {
        table[bits] = static_cast<std::uint8_t>(std::popcount(bits));
        continue;
      }
      std::uint8_t best = 0;
      for (int e = 0; e < size; ++e) {
        if ((bits >> e) & 1u) best = std::max(best, table[bits & ~(std::size_t{1} << e)]);
      }
      table[bits] = best;
    }
    return table;
  };
  return detail::MatroidFactory::build(
      new_state(size, MatroidKind::kExplicitBases, rank_fn, builder));
}

Matroid relabel(const Matroid& m, std::span<const int> perm) {
  const int n = m.size();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::kInvalidParameters, "relabel: permutation has wrong length");
  }
  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n || inverse[perm[i]] != -1) {
      throw Error(ErrorCode::kInvalidParameters, "relabel: not a permutation");
    }
    inverse[perm[i]] = i;
  }
  return make_matroid(n, MatroidKind::kRelabeled, [m, inverse](SubsetMask a) {
    SubsetMask original;
    for (int e : a.elements()) original = original.with(inverse[e]);
    return m.rank(original);
  });
}

SubsetMask closure(const Matroid& m, SubsetMask a) {
  const int base = m.rank(a);
  SubsetMask cl = a;
  for (int e = 0; e < m.size(); ++e) {
    if (!a.contains(e) && m.rank(a.with(e)) == base) cl = cl.with(e);
  }
  return cl;
}

std::vector<SubsetMask> bases(const Matroid& m) {
  require_exhaustive(m.size(), "basis enumeration");
  auto table = m.rank_table();
  std::vector<SubsetMask> out;
  for_each_k_subset(m.size(), m.rank(), [&](SubsetMask a) {
    if (table[a.bits()] == m.rank()) out.push_back(a);
  });
  std::sort(out.begin(), out.end());
  return out;
}

FlatReport enumerate_flats(const Matroid& m) {
  require_exhaustive(m.size(), "flat enumeration");
  const int n = m.size();
  const int r = m.rank();
  auto table = m.rank_table();
  FlatReport report;
  for_each_subset(n, [&](SubsetMask a) {
    const int ra = table[a.bits()];
    for (int e = 0; e < n; ++e) {
      if (!a.contains(e) && table[a.with(e).bits()] == ra) return;
    }
    report.flats.push_back(a);
    if (ra == r - 1) report.hyperplanes.push_back(a);
    const int k = r - ra;
    if (k >= 1) {
      auto [it, inserted] = report.f.try_emplace(k, a.size());
      if (!inserted) it->second = std::max(it->second, a.size());
    }
  });
  return report;
}

bool is_dependent_closed(const Matroid& m, SubsetMask a) {
  const int ra = m.rank(a);
  for (int e : a.elements()) {
    if (m.rank(a.without(e)) != ra) return false;
  }
  return true;
}

CircuitReport enumerate_circuits(const Matroid& m) {
  require_exhaustive(m.size(), "circuit enumeration");
  const int n = m.size();
  auto table = m.rank_table();
  CircuitReport report;
  for_each_subset(n, [&](SubsetMask a) {
    const int ra = table[a.bits()];
    bool closed_under_removal = true;
    for (int e : a.elements()) {
      if (table[a.without(e).bits()] != ra) {
        closed_under_removal = false;
        break;
      }
    }
    if (!closed_under_removal) return;
    const int corank = a.size() - ra;
    // Corank 1 in D(M) means every element lies on the unique circuit.
    if (corank == 1) report.circuits.push_back(a);
    if (corank >= 1) {
      auto [it, inserted] = report.d.try_emplace(corank, a.size());
      if (!inserted) it->second = std::min(it->second, a.size());
    }
  });
  for (SubsetMask h : enumerate_flats(m).hyperplanes) report.cocircuits.push_back(h.complement(n));
  std::sort(report.cocircuits.begin(), report.cocircuits.end());
  return report;
}

SigmaProfile sigma_profile(const Matroid& m) {
  require_exhaustive(m.size(), "sigma profile");
  auto table = m.rank_table();
  SigmaProfile p;
  p.counts.assign(m.size() + 1, 0);
  for_each_subset(m.size(), [&](SubsetMask a) {
    if (table[a.bits()] == m.rank()) ++p.counts[a.size()];
  });
  return p;
}

TauProfile tau_profile(const Matroid& m) {
  require_exhaustive(m.size(), "tau profile");
  auto table = m.rank_table();
  TauProfile p;
  p.counts.assign(m.size() + 1, 0);
  for_each_subset(m.size(), [&](SubsetMask a) {
    if (table[a.bits()] == a.size()) ++p.counts[a.size()];
  });
  return p;
}

std::string RankAxiomViolation::describe() const {
  std::ostringstream os;
  switch (axiom) {
    case Axiom::kBounds:
      os << "bounds: rk" << a.to_string() << " outside [0, |A|]";
      break;
    case Axiom::kMonotone:
      os << "monotone: " << a.to_string() << " subset of " << b.to_string()
         << " but rk decreases";
      break;
    case Axiom::kSubmodular:
      os << "submodular: rk(A|B) + rk(A&B) > rk(A) + rk(B) for A=" << a.to_string()
         << " B=" << b.to_string();
      break;
  }
  return os.str();
}

// The local form (unit steps, pairwise submodularity around each A) is
// equivalent to the global axioms and costs O(n^2 2^n) instead of O(4^n).
std::optional<RankAxiomViolation> check_rank_axioms(int n, const RankFunction& rank) {
  require_exhaustive(n, "rank axiom check");
  using Axiom = RankAxiomViolation::Axiom;
  std::vector<int> table(std::size_t{1} << n);
  for_each_subset(n, [&](SubsetMask a) { table[a.bits()] = rank(a); });
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const SubsetMask a(bits);
    const int ra = table[bits];
    if (ra < 0 || ra > a.size()) return RankAxiomViolation{Axiom::kBounds, a, {}};
  }
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const SubsetMask a(bits);
    const int ra = table[bits];
    for (int e = 0; e < n; ++e) {
      if (a.contains(e)) continue;
      const int re = table[a.with(e).bits()];
      if (re < ra) return RankAxiomViolation{Axiom::kMonotone, a, a.with(e)};
      if (re > ra + 1) {
        return RankAxiomViolation{Axiom::kSubmodular, a, SubsetMask::single(e)};
      }
    }
  }
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const SubsetMask a(bits);
    const int ra = table[bits];
    for (int e = 0; e < n; ++e) {
      if (a.contains(e)) continue;
      for (int f = e + 1; f < n; ++f) {
        if (a.contains(f)) continue;
        const int lhs = table[a.with(e).with(f).bits()] + ra;
        const int rhs = table[a.with(e).bits()] + table[a.with(f).bits()];
        if (lhs > rhs) return RankAxiomViolation{Axiom::kSubmodular, a.with(e), a.with(f)};
      }
    }
  }
  return std::nullopt;
}

std::optional<RankAxiomViolation> check_rank_axioms(const Matroid& m) {
  return check_rank_axioms(m.size(), [&m](SubsetMask a) { return m.rank(a); });
}

}  // namespace tutte
