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

#include "tutte/engines.hpp"

#include <vector>

#include "tutte/binomial.hpp"

namespace tutte {

BivariatePolynomial tutte_subset_expansion(const Matroid& m) {
  require_exhaustive(m.size(), "subset expansion");
  const int n = m.size();
  const int r = m.rank();
  auto table = m.rank_table();

  // Group subsets by (r - rk A, |A| - rk A) before expanding the binomials.
  std::vector<std::vector<std::uint64_t>> counts(r + 1, std::vector<std::uint64_t>(n - r + 1, 0));
  for_each_subset(n, [&](SubsetMask a) {
    const int ra = table[a.bits()];
    ++counts[r - ra][a.size() - ra];
  });

  BivariatePolynomial out;
  for (int a = 0; a <= r; ++a) {
    for (int b = 0; b <= n - r; ++b) {
      if (counts[a][b] == 0) continue;
      const BigInt weight = counts[a][b];
      for (int i = 0; i <= a; ++i) {
        const BigInt xi = binomial(a, i) * (((a - i) % 2) ? -1 : 1);
        for (int j = 0; j <= b; ++j) {
          const BigInt yj = binomial(b, j) * (((b - j) % 2) ? -1 : 1);
          out.add_term(i, j, weight * xi * yj);
        }
      }
    }
  }
  return out;
}

ActivityExpansion tutte_by_activities(const Matroid& m) {
  require_exhaustive(m.size(), "activity expansion");
  const int n = m.size();
  const int r = m.rank();
  auto table = m.rank_table();
  auto is_base = [&](SubsetMask b) { return table[b.bits()] == r; };

  ActivityExpansion out;
  for (SubsetMask base : bases(m)) {
    ActivityRecord rec{base, 0, 0};
    for (int e = 0; e < n; ++e) {
      bool active = true;
      if (base.contains(e)) {
        for (int f = 0; f < e && active; ++f) {
          if (!base.contains(f) && is_base(base.without(e).with(f))) active = false;
        }
        rec.internal_activity += active;
      } else {
        for (int f = 0; f < e && active; ++f) {
          if (base.contains(f) && is_base(base.without(f).with(e))) active = false;
        }
        rec.external_activity += active;
      }
    }
    out.polynomial.add_term(rec.internal_activity, rec.external_activity, 1);
    out.records.push_back(rec);
  }
  return out;
}

DualityCheck duality_check(const Matroid& m) {
  DualityCheck check;
  check.primal = tutte_subset_expansion(m);
  check.dual = tutte_subset_expansion(m.dual());
  const BivariatePolynomial swapped = check.dual.swapped();
  check.pass = check.primal == swapped;
  if (!check.pass) {
    auto a = check.primal.terms().begin();
    auto b = swapped.terms().begin();
    while (a != check.primal.terms().end() && b != swapped.terms().end() && *a == *b) {
      ++a;
      ++b;
    }
    if (a == check.primal.terms().end()) {
      check.mismatch = b->first;
    } else if (b == swapped.terms().end()) {
      check.mismatch = a->first;
    } else {
      check.mismatch = std::min(a->first, b->first);
    }
  }
  return check;
}

}  // namespace tutte
