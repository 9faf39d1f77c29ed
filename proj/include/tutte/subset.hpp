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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace tutte {

/// Hard upper bound for anything that walks all 2^n subsets.
inline constexpr int kHardExhaustiveLimit = 24;
/// Largest ground set a matroid value can describe.
inline constexpr int kMaxGroundSize = 64;

/// Current exhaustive limit (process-wide, defaults to the hard cap).
int exhaustive_limit();
/// Clamps to [0, kHardExhaustiveLimit]; returns the previous value.
int set_exhaustive_limit(int limit);
/// Throws Error(kSizeLimit) when n exceeds exhaustive_limit().
void require_exhaustive(int n, const char* what);

/// Membership indicator over a ground set; element i present iff bit i set.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr SubsetMask single(int e) {
    return SubsetMask(std::uint64_t{1} << e);
  }
  static SubsetMask of(std::initializer_list<int> elements) {
    SubsetMask m;
    for (int e : elements) m = m.with(e);
    return m;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr SubsetMask with(int e) const { return SubsetMask(bits_ | (std::uint64_t{1} << e)); }
  constexpr SubsetMask without(int e) const { return SubsetMask(bits_ & ~(std::uint64_t{1} << e)); }
  constexpr SubsetMask complement(int n) const { return SubsetMask(~bits_ & full(n).bits_); }

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  constexpr SubsetMask operator^(SubsetMask o) const { return SubsetMask(bits_ ^ o.bits_); }

  constexpr auto operator<=>(const SubsetMask&) const = default;

  /// Element indices in ascending order.
  std::vector<int> elements() const;
  /// "{0,2,5}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Calls f(SubsetMask) for every subset of {0..n-1} in increasing bit order.
template <class F>
void for_each_subset(int n, F&& f) {
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < end; ++b) f(SubsetMask(b));
}

/// Calls f for every k-subset of {0..n-1} (Gosper's hack, increasing order).
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(SubsetMask());
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  while (s < limit) {
    f(SubsetMask(s));
    const std::uint64_t c = s & -s;
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace tutte
