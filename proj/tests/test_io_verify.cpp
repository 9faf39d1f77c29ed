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

#include "json.hpp"

#include "tutte/commands.hpp"
#include "tutte/error.hpp"
#include "tutte/fuzz.hpp"
#include "tutte/io.hpp"
#include "tutte/verify.hpp"

using namespace tutte;

namespace {

const char* kK4 = "graph 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

std::string parse_error(const std::string& text, ErrorCode expect = ErrorCode::kParse) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    CHECK(e.code() == expect);
    return e.what();
  }
  FAIL("expected a parse failure");
  return "";
}

}  // namespace

TEST_CASE("parse graphs and matroids") {
  const Instance k3 = parse_instance("graph 3 3\n0 1\n0 2\n1 2\n");
  REQUIRE(std::holds_alternative<Multigraph>(k3));
  CHECK(std::get<Multigraph>(k3).edge_count() == 3);

  const Matroid u = parse_matroid("matroid 4\nuniform 2\n");
  CHECK(same_oracle(u, make_uniform(2, 4)));

  const Matroid b = parse_matroid("# comment\nmatroid 3\n\nbases\n0 1\n0 2  # trailing\n1 2\n");
  CHECK(same_oracle(b, make_uniform(2, 3)));

  CHECK(parse_matroid("matroid 2\nuniform 0\n").rank() == 0);
  CHECK_THROWS_AS(parse_graph("matroid 2\nuniform 1\n"), Error);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error("graph 2 1\n0 5\n").find("line 2") != std::string::npos);
  CHECK(parse_error("").find("line 1") != std::string::npos);
  CHECK(parse_error("graph 3 2\n0 1\n").find("expected 2 edge lines") != std::string::npos);
  CHECK(parse_error("graph 3 1\n0 1\n1 2\n").find("line 3") != std::string::npos);
  CHECK(parse_error("graph 3 1\n0 x\n").find("line 2") != std::string::npos);
  CHECK(parse_error("graph 3 1\n0 1 2\n").find("line 2") != std::string::npos);
  CHECK(parse_error("matroid 3\nuniform 4\n").find("line 2") != std::string::npos);
  CHECK(parse_error("matroid 3\nbases\n0 0\n").find("repeated") != std::string::npos);
  CHECK(parse_error("hypergraph 3\n").find("line 1") != std::string::npos);
  parse_error("matroid 4\nbases\n0 1\n2 3\n", ErrorCode::kInvalidBases);
}

TEST_CASE("format round trips") {
  const Multigraph g(3, {{0, 1}, {1, 1}, {1, 2}});
  CHECK(format_graph(g) == "graph 3 3\n0 1\n1 1\n1 2\n");
  CHECK(parse_graph(format_graph(g)) == g);

  const Matroid m = cycle_matroid(complete_graph(3));
  const Matroid back = parse_matroid(format_matroid(m));
  CHECK(same_oracle(back, m));
  CHECK(format_matroid(make_uniform(0, 3)) == "matroid 3\nuniform 0\n");
  CHECK(format_matroid(make_uniform(2, 3)) == "matroid 3\nuniform 2\n");
}

TEST_CASE("polynomial output formats") {
  const BivariatePolynomial k3 = compute_tutte(parse_instance("graph 3 3\n0 1\n0 2\n1 2\n"), EngineChoice::kAll);
  CHECK(format_polynomial(k3) == "0 1 1\n1 0 1\n2 0 1\n");
  const auto j = nlohmann::json::parse(polynomial_json(k3));
  CHECK(j["terms"].size() == 3);
  CHECK(j["terms"][2][2] == "1");
  CHECK(format_univariate(specialize_x_at_1(k3)) == "0 2\n1 1\n");
}

TEST_CASE("engine selection") {
  const Instance k4 = parse_instance(kK4);
  const BivariatePolynomial p = compute_tutte(k4, EngineChoice::kSubset);
  CHECK(compute_tutte(k4, EngineChoice::kActivities) == p);
  CHECK(compute_tutte(k4, EngineChoice::kDelCon) == p);
  CHECK(compute_tutte(k4, EngineChoice::kAll) == p);
  const Instance u = parse_instance("matroid 4\nuniform 2\n");
  CHECK(compute_tutte(u, EngineChoice::kAll) == compute_tutte(u, EngineChoice::kSubset));
  CHECK_THROWS_AS(compute_tutte(u, EngineChoice::kDelCon), Error);
  CHECK(parse_engine("delcon") == EngineChoice::kDelCon);
  CHECK_THROWS_AS(parse_engine("magic"), Error);
}

TEST_CASE("coefficient command") {
  const Instance k4 = parse_instance(kK4);
  const CoeffValue v = coefficient(k4, 'y', 0, "hyperplane");
  CHECK(format_coefficient(v, 'y', 0, false) == "6 (valid: j > f2 - r = -2)");
  const auto j = nlohmann::json::parse(format_coefficient(v, 'y', 0, true));
  CHECK(j["value"] == "6");
  CHECK(j["method"] == "hyperplane-correction");
  CHECK(coefficient(k4, 'x', 2, "circuit").value == 3);
  CHECK(coefficient(k4, 'x', 2, "tau").value == 3);
  CHECK(coefficient(k4, 'y', 3, "threshold").value == 1);
  CHECK_THROWS_AS(coefficient(k4, 'x', 0, "sigma"), Error);
  CHECK_THROWS_AS(coefficient(k4, 'z', 0, "engine"), Error);
}

TEST_CASE("structure report") {
  const std::string text = structure_report(parse_instance(kK4), false);
  CHECK(text.find("f1 3\n") != std::string::npos);
  CHECK(text.find("f2 1\n") != std::string::npos);
  CHECK(text.find("d2 5\n") != std::string::npos);
  CHECK(text.find("girth 3\n") != std::string::npos);
  CHECK(text.find("edge-connectivity 3\n") != std::string::npos);
  CHECK(text.find("EC 3 4\n") != std::string::npos);
  CHECK(text.find("EC 4 3\n") != std::string::npos);
  const auto j = nlohmann::json::parse(structure_report(parse_instance("matroid 3\nuniform 1\n"), true));
  CHECK(j["f2"].is_null());
  CHECK(j["rank"] == 1);
  CHECK_FALSE(j.contains("girth"));
}

TEST_CASE("check selection") {
  CHECK(parse_check_selection("all").size() == check_names().size());
  CHECK(parse_check_selection("sigma,tau") == std::set<std::string>{"sigma", "tau"});
  CHECK_THROWS_AS(parse_check_selection("sigma,bogus"), Error);
  CHECK_THROWS_AS(parse_check_selection(","), Error);
}

TEST_CASE("verification report on K4") {
  const VerificationReport r = verify_graph(complete_graph(4), parse_check_selection("all"), "K4");
  CHECK(r.agreement);
  CHECK(r.failure_count() == 0);
  CHECK_FALSE(r.counterexample.has_value());
  const std::string text = r.to_text();
  CHECK(text.find("AGREEMENT: pass\n") != std::string::npos);
  CHECK(text.find("hyperplane 0 6\n") != std::string::npos);
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["agreement"] == true);
  CHECK(j["counterexample"].is_null());
}

TEST_CASE("verification report names a counterexample") {
  const VerificationReport r = verify_matroid(make_uniform(0, 2), parse_check_selection("hyperplane"));
  CHECK_FALSE(r.agreement);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->index == 2);
  CHECK(r.to_text().find("COUNTEREXAMPLE: 2 hyperplane 0 1\n") != std::string::npos);
}

TEST_CASE("verification honours the size limit") {
  const int old = set_exhaustive_limit(5);
  try {
    verify_graph(complete_graph(4), parse_check_selection("all"));
    FAIL("expected size limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSizeLimit);
  }
  set_exhaustive_limit(old);
}

TEST_CASE("fuzz sampler is deterministic") {
  for (int trial = 0; trial < 50; ++trial) {
    for (auto fam : {FuzzFamily::kGraphs, FuzzFamily::kUniform, FuzzFamily::kBases}) {
      const Instance a = sample_instance(fam, 8, trial % 2 == 0, 42, trial);
      const Instance b = sample_instance(fam, 8, trial % 2 == 0, 42, trial);
      if (const auto* g = std::get_if<Multigraph>(&a)) {
        CHECK(*g == std::get<Multigraph>(b));
        CHECK(g->edge_count() <= 8);
        if (trial % 2 == 0) CHECK(is_connected(*g));
      } else {
        CHECK(same_oracle(std::get<Matroid>(a), std::get<Matroid>(b)));
        CHECK(std::get<Matroid>(a).size() <= 8);
      }
    }
  }
  CHECK(parse_fuzz_family("bases") == FuzzFamily::kBases);
  CHECK_THROWS_AS(parse_fuzz_family("trees"), Error);
}

TEST_CASE("fuzz results do not depend on the worker count") {
  FuzzOptions opts;
  opts.trials = 60;
  opts.max_elements = 8;
  opts.seed = 5;
  opts.workers = 1;
  const FuzzResult one = run_fuzz(opts);
  opts.workers = 3;
  const FuzzResult three = run_fuzz(opts);
  CHECK(one.failures == three.failures);
  CHECK(one.to_text() == three.to_text());
  CHECK(one.to_json() == three.to_json());
}

TEST_CASE("fuzz passes on checks unaffected by the binomial boundary") {
  FuzzOptions opts;
  opts.trials = 80;
  opts.max_elements = 9;
  opts.checks = parse_check_selection("engines,duality,sigma,tau,edge-connectivity,edge-cut,cut-bound");
  for (auto fam : {FuzzFamily::kGraphs, FuzzFamily::kUniform, FuzzFamily::kBases}) {
    opts.family = fam;
    const FuzzResult r = run_fuzz(opts);
    CHECK(r.failures == 0);
    CHECK(r.to_text().find("AGREEMENT: pass") != std::string::npos);
  }
}
