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

#include "tutte/io.hpp"

#include <sstream>
#include <vector>

#include "json.hpp"

#include "tutte/error.hpp"

namespace tutte {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + message);
}

int to_int(const Line& line, std::size_t index, const char* what) {
  if (index >= line.tokens.size()) fail(line.number, std::string("missing ") + what);
  const std::string& tok = line.tokens[index];
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    fail(line.number, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size()) fail(line.number, std::string("expected integer ") + what + ", got '" + tok + "'");
  if (value < 0 || value > 1'000'000) fail(line.number, std::string(what) + " out of range");
  return static_cast<int>(value);
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    fail(line.number, "expected " + std::to_string(count) + " fields, got " +
                          std::to_string(line.tokens.size()));
  }
}

Multigraph graph_from(const std::vector<Line>& lines) {
  const Line& header = lines.front();
  expect_arity(header, 3);
  const int n = to_int(header, 1, "vertex count");
  const int m = to_int(header, 2, "edge count");
  if (m > kMaxGroundSize) fail(header.number, "more than 64 edges");
  if (static_cast<int>(lines.size()) - 1 != m) {
    const int where = lines.size() > static_cast<std::size_t>(m) + 1 ? lines[m + 1].number
                                                                      : lines.back().number;
    fail(where, "expected " + std::to_string(m) + " edge lines, found " +
                    std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) {
    const Line& line = lines[i];
    expect_arity(line, 2);
    const int u = to_int(line, 0, "endpoint");
    const int v = to_int(line, 1, "endpoint");
    if (u >= n || v >= n) {
      fail(line.number, "endpoint out of range (vertex count " + std::to_string(n) + ")");
    }
    edges.push_back({u, v});
  }
  return Multigraph(n, std::move(edges));
}

Matroid matroid_from(const std::vector<Line>& lines) {
  const Line& header = lines.front();
  expect_arity(header, 2);
  const int n = to_int(header, 1, "element count");
  if (n > kMaxGroundSize) fail(header.number, "more than 64 elements");
  if (lines.size() < 2) fail(header.number, "missing 'uniform <r>' or 'bases' line");
  const Line& kind = lines[1];
  if (kind.tokens[0] == "uniform") {
    expect_arity(kind, 2);
    const int r = to_int(kind, 1, "rank");
    if (r > n) fail(kind.number, "rank exceeds element count");
    if (lines.size() > 2) fail(lines[2].number, "unexpected content after 'uniform'");
    return make_uniform(r, n);
  }
  if (kind.tokens[0] != "bases") fail(kind.number, "expected 'uniform <r>' or 'bases'");
  expect_arity(kind, 1);
  std::vector<SubsetMask> bases;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    SubsetMask b;
    for (std::size_t t = 0; t < lines[i].tokens.size(); ++t) {
      const int e = to_int(lines[i], t, "element");
      if (e >= n) fail(lines[i].number, "element " + std::to_string(e) + " out of range");
      if (b.contains(e)) fail(lines[i].number, "repeated element " + std::to_string(e));
      b = b.with(e);
    }
    bases.push_back(b);
  }
  return make_from_bases(n, bases);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::kParse, "line 1: empty input");
  const std::string& head = lines.front().tokens.front();
  if (head == "graph") return graph_from(lines);
  if (head == "matroid") return matroid_from(lines);
  fail(lines.front().number, "expected 'graph' or 'matroid', got '" + head + "'");
}

Multigraph parse_graph(const std::string& text) {
  Instance inst = parse_instance(text);
  if (auto* g = std::get_if<Multigraph>(&inst)) return *g;
  throw Error(ErrorCode::kParse, "line 1: expected a graph");
}

Matroid parse_matroid(const std::string& text) {
  Instance inst = parse_instance(text);
  if (auto* m = std::get_if<Matroid>(&inst)) return *m;
  throw Error(ErrorCode::kParse, "line 1: expected a matroid");
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream os;
  os << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string format_matroid(const Matroid& m) {
  std::ostringstream os;
  os << "matroid " << m.size() << '\n';
  if (m.kind() == MatroidKind::kUniform || m.rank() == 0) {
    os << "uniform " << m.rank() << '\n';
    return os.str();
  }
  os << "bases\n";
  for (SubsetMask b : bases(m)) {
    bool first = true;
    for (int e : b.elements()) {
      os << (first ? "" : " ") << e;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

std::string format_polynomial(const BivariatePolynomial& p) {
  std::ostringstream os;
  for (const auto& [e, c] : p.terms()) os << e.first << ' ' << e.second << ' ' << c << '\n';
  return os.str();
}

std::string format_univariate(const UnivariatePolynomial& p) {
  std::ostringstream os;
  for (const auto& [d, c] : p.terms()) os << d << ' ' << c << '\n';
  return os.str();
}

std::string polynomial_json(const BivariatePolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, c.str()});
  return nlohmann::json{{"terms", terms}}.dump();
}

}  // namespace tutte
