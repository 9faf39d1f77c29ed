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

// Exercises the shared library through its C header only.

#include "doctest.h"

#include <cstring>
#include <string>

#include "tutte/tutte_c.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  tutte_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse and compute through the C API") {
  tutte_instance* k3 = nullptr;
  REQUIRE(tutte_parse("graph 3 3\n0 1\n0 2\n1 2\n", &k3) == TUTTE_OK);
  CHECK(tutte_is_graph(k3) == 1);
  CHECK(tutte_ground_size(k3) == 3);

  tutte_poly* p = nullptr;
  REQUIRE(tutte_polynomial(k3, "all", &p) == TUTTE_OK);
  char* text = nullptr;
  REQUIRE(tutte_poly_format(p, 0, &text) == TUTTE_OK);
  CHECK(take(text) == "0 1 1\n1 0 1\n2 0 1\n");
  char* c = nullptr;
  REQUIRE(tutte_poly_coeff(p, 2, 0, &c) == TUTTE_OK);
  CHECK(take(c) == "1");
  tutte_poly_free(p);

  int rank = -1;
  CHECK(tutte_rank_of(k3, 0x7, &rank) == TUTTE_OK);
  CHECK(rank == 2);
  CHECK(tutte_rank_of(k3, 0x8, &rank) == TUTTE_INVALID_ARGUMENT);

  tutte_instance* m = nullptr;
  REQUIRE(tutte_cycle_matroid(k3, &m) == TUTTE_OK);
  CHECK(tutte_is_graph(m) == 0);
  tutte_instance* d = nullptr;
  REQUIRE(tutte_dual(m, &d) == TUTTE_OK);
  CHECK(tutte_rank_of(d, 0x7, &rank) == TUTTE_OK);
  CHECK(rank == 1);
  CHECK(tutte_cycle_matroid(m, &d) == TUTTE_NOT_APPLICABLE);
  tutte_instance_free(d);
  tutte_instance_free(m);
  tutte_instance_free(k3);
}

TEST_CASE("constructors and status codes") {
  tutte_instance* g = nullptr;
  const int endpoints[] = {0, 1, 1, 2, 2, 0, 0, 3, 1, 3, 2, 3};
  REQUIRE(tutte_graph_create(4, 6, endpoints, &g) == TUTTE_OK);
  char* out = nullptr;
  CHECK(tutte_coefficient(g, 'y', 0, "hyperplane", 0, &out) == TUTTE_OK);
  CHECK(take(out) == "6 (valid: j > f2 - r = -2)");
  CHECK(tutte_verify(g, "all", 0, &out) == TUTTE_OK);
  CHECK(take(out).find("AGREEMENT: pass") != std::string::npos);
  CHECK(tutte_report(g, 1, &out) == TUTTE_OK);
  CHECK(take(out).find("\"edge_connectivity\":3") != std::string::npos);
  CHECK(tutte_format_instance(g, &out) == TUTTE_OK);
  CHECK(take(out).rfind("graph 4 6\n", 0) == 0);
  tutte_instance_free(g);

  const int bad[] = {0, 9};
  CHECK(tutte_graph_create(2, 1, bad, &g) == TUTTE_INVALID_ARGUMENT);
  CHECK(std::strlen(tutte_last_error()) > 0);

  tutte_instance* u = nullptr;
  CHECK(tutte_uniform_create(3, 2, &u) == TUTTE_INVALID_ARGUMENT);
  REQUIRE(tutte_uniform_create(0, 2, &u) == TUTTE_OK);
  CHECK(tutte_verify(u, "hyperplane", 0, &out) == TUTTE_VERIFICATION);
  CHECK(take(out).find("COUNTEREXAMPLE") != std::string::npos);
  tutte_poly* p = nullptr;
  CHECK(tutte_polynomial(u, "delcon", &p) == TUTTE_NOT_APPLICABLE);
  CHECK(tutte_coefficient(u, 'y', 0, "nonsense", 0, &out) == TUTTE_INVALID_ARGUMENT);
  tutte_instance_free(u);

  const uint64_t ok_bases[] = {0x3, 0x5, 0x6};
  tutte_instance* b = nullptr;
  CHECK(tutte_matroid_from_bases(3, ok_bases, 3, &b) == TUTTE_OK);
  tutte_instance_free(b);
  const uint64_t bad_bases[] = {0x3, 0xC};
  CHECK(tutte_matroid_from_bases(4, bad_bases, 2, &b) == TUTTE_INVALID_BASES);

  tutte_instance* x = nullptr;
  CHECK(tutte_parse("graph 2 1\n0 5\n", &x) == TUTTE_PARSE);
  CHECK(std::string(tutte_last_error()).find("line 2") != std::string::npos);
  CHECK(tutte_parse(nullptr, &x) == TUTTE_INVALID_ARGUMENT);
}

TEST_CASE("exhaustive limit via the C API") {
  int previous = -1;
  REQUIRE(tutte_set_exhaustive_limit(3, &previous) == TUTTE_OK);
  tutte_instance* g = nullptr;
  REQUIRE(tutte_parse("graph 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", &g) == TUTTE_OK);
  char* out = nullptr;
  CHECK(tutte_report(g, 0, &out) == TUTTE_SIZE_LIMIT);
  CHECK(tutte_get_exhaustive_limit() == 3);
  tutte_set_exhaustive_limit(previous, nullptr);
  CHECK(tutte_report(g, 0, &out) == TUTTE_OK);
  tutte_string_free(out);
  tutte_instance_free(g);
}

TEST_CASE("fuzz through the C API") {
  tutte_fuzz_options opts{"uniform", 6, 3, 20, 0, 2, "engines,duality,sigma,tau"};
  char* out = nullptr;
  CHECK(tutte_fuzz(&opts, 0, &out) == TUTTE_OK);
  CHECK(take(out).find("failures=0") != std::string::npos);
  opts.family = "bogus";
  CHECK(tutte_fuzz(&opts, 0, &out) == TUTTE_INVALID_ARGUMENT);
}
