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

#include <atomic>
#include <sstream>

#include "tutte/error.hpp"
#include "tutte/subset.hpp"

namespace tutte {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameters: return "invalid-parameters";
    case ErrorCode::kInvalidBases: return "invalid-bases";
    case ErrorCode::kSizeLimit: return "size-limit";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kNotApplicable: return "not-applicable";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kVerification: return "verification";
  }
  return "unknown";
}

namespace {
std::atomic<int> g_exhaustive_limit{kHardExhaustiveLimit};
}

int exhaustive_limit() { return g_exhaustive_limit.load(std::memory_order_relaxed); }

int set_exhaustive_limit(int limit) {
  if (limit < 0) limit = 0;
  if (limit > kHardExhaustiveLimit) limit = kHardExhaustiveLimit;
  return g_exhaustive_limit.exchange(limit);
}

void require_exhaustive(int n, const char* what) {
  const int limit = exhaustive_limit();
  if (n > limit) {
    throw Error(ErrorCode::kSizeLimit, std::string(what) + ": ground set of size " +
                                           std::to_string(n) + " exceeds exhaustive limit " +
                                           std::to_string(limit));
  }
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string SubsetMask::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace tutte
