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

// Command-line front end. Talks to the library only through the C API.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "tutte/tutte_c.h"

namespace {

constexpr int kDefaultLimit = 20;
constexpr int kHardLimit = 24;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kPrecondition = 3, kVerification = 4, kSizeLimit = 5, kInternal = 6 };

int exit_code(tutte_status s) {
  switch (s) {
    case TUTTE_OK: return kOk;
    case TUTTE_INVALID_ARGUMENT: return kUsage;
    case TUTTE_PARSE:
    case TUTTE_INVALID_BASES: return kParse;
    case TUTTE_PRECONDITION:
    case TUTTE_NOT_APPLICABLE: return kPrecondition;
    case TUTTE_VERIFICATION: return kVerification;
    case TUTTE_SIZE_LIMIT: return kSizeLimit;
    case TUTTE_INTERNAL: return kInternal;
  }
  return kInternal;
}

struct InstanceDeleter {
  void operator()(tutte_instance* p) const { tutte_instance_free(p); }
};
struct PolyDeleter {
  void operator()(tutte_poly* p) const { tutte_poly_free(p); }
};
using InstancePtr = std::unique_ptr<tutte_instance, InstanceDeleter>;
using PolyPtr = std::unique_ptr<tutte_poly, PolyDeleter>;

class Failure {
 public:
  Failure(int code, std::string message) : code_(code), message_(std::move(message)) {}
  int code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  int code_;
  std::string message_;
};

void check(tutte_status s) {
  if (s != TUTTE_OK) throw Failure(exit_code(s), tutte_last_error());
}

// Takes ownership of a C string; prints it unless empty.
void print_owned(char* s) {
  if (!s) return;
  std::string text(s);
  tutte_string_free(s);
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << '\n';
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kUsage, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InstancePtr load(const std::string& path) {
  tutte_instance* raw = nullptr;
  check(tutte_parse(read_input(path).c_str(), &raw));
  return InstancePtr(raw);
}

int parse_limit(const std::string& text, const std::string& source) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size() && v >= 0 && v <= kHardLimit) return v;
  } catch (const std::exception&) {
  }
  throw Failure(kUsage, source + " must be an integer in [0, " + std::to_string(kHardLimit) + "]");
}

void apply_limit(std::optional<int> max_size) {
  int limit = kDefaultLimit;
  if (const char* env = std::getenv("TUTTE_MAX_GROUND"); env && *env) {
    limit = parse_limit(env, "TUTTE_MAX_GROUND");
  }
  if (max_size) {
    if (*max_size < 0 || *max_size > kHardLimit) {
      throw Failure(kUsage, "--max-size must be in [0, " + std::to_string(kHardLimit) + "]");
    }
    limit = *max_size;
  }
  check(tutte_set_exhaustive_limit(limit, nullptr));
}

// Writes output even on a verification failure, then reports the status.
int finish(tutte_status s, char* out) {
  print_owned(out);
  if (s == TUTTE_OK) return kOk;
  if (s == TUTTE_VERIFICATION) return kVerification;
  throw Failure(exit_code(s), tutte_last_error());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Tutte polynomial and coefficient toolkit"};
  app.require_subcommand(1);

  bool json = false;
  std::optional<int> max_size;
  app.add_flag("--json", json, "Emit a single JSON object");
  app.add_option("--max-size", max_size, "Exhaustive enumeration limit (at most 24)");

  std::string input;
  auto add_input = [&input](CLI::App* sub) {
    sub->add_option("input", input, "Graph or matroid file ('-' or omitted reads stdin)");
  };

  std::string engine = "subset";
  auto* tutte_cmd = app.add_subcommand("tutte", "Compute the Tutte polynomial");
  tutte_cmd->add_option("--engine", engine, "subset|activities|delcon|all")
      ->check(CLI::IsMember({"subset", "activities", "delcon", "all"}));
  add_input(tutte_cmd);

  std::optional<int> y_index;
  std::optional<int> x_index;
  std::string method = "engine";
  auto* coeff_cmd = app.add_subcommand("coeff", "One coefficient of T(1,y) or T(x,1)");
  auto* y_opt = coeff_cmd->add_option("--y", y_index, "Coefficient of y^j in T(1,y)");
  auto* x_opt = coeff_cmd->add_option("--x", x_index, "Coefficient of x^i in T(x,1)");
  y_opt->excludes(x_opt);
  coeff_cmd->add_option("--method", method,
                        "y: engine|sigma|hyperplane|cocircuit|threshold; x: engine|tau|circuit|threshold");
  add_input(coeff_cmd);

  auto* report_cmd = app.add_subcommand("report", "Structural quantities");
  add_input(report_cmd);

  std::string theorems = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check every formula against the engines");
  verify_cmd->add_option("--theorems", theorems, "all or a comma-separated list of checks");
  verify_cmd->add_option("--max-size", max_size, "Exhaustive enumeration limit (at most 24)");
  add_input(verify_cmd);

  std::string family = "graphs";
  int max_elements = 12;
  std::uint64_t seed = 1;
  int trials = 100;
  bool connected = false;
  int workers = 1;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random instances through every cross-check");
  fuzz_cmd->add_option("--family", family, "graphs|uniform|bases")
      ->check(CLI::IsMember({"graphs", "uniform", "bases"}));
  fuzz_cmd->add_option("--max-elements", max_elements, "Maximum ground set size")
      ->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_option("--seed", seed, "Random seed");
  fuzz_cmd->add_option("--trials", trials, "Number of trials")->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_flag("--connected", connected, "Force connected graphs");
  fuzz_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--theorems", theorems, "all or a comma-separated list of checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    apply_limit(max_size);
    char* out = nullptr;

    if (*tutte_cmd) {
      InstancePtr inst = load(input);
      tutte_poly* raw = nullptr;
      check(tutte_polynomial(inst.get(), engine.c_str(), &raw));
      PolyPtr poly(raw);
      check(tutte_poly_format(poly.get(), json, &out));
      print_owned(out);
      return kOk;
    }
    if (*coeff_cmd) {
      if (!y_index && !x_index) throw Failure(kUsage, "coeff needs --y <j> or --x <i>");
      InstancePtr inst = load(input);
      const char axis = y_index ? 'y' : 'x';
      const int index = y_index ? *y_index : *x_index;
      check(tutte_coefficient(inst.get(), axis, index, method.c_str(), json, &out));
      print_owned(out);
      return kOk;
    }
    if (*report_cmd) {
      InstancePtr inst = load(input);
      check(tutte_report(inst.get(), json, &out));
      print_owned(out);
      return kOk;
    }
    if (*verify_cmd) {
      InstancePtr inst = load(input);
      const tutte_status s = tutte_verify(inst.get(), theorems.c_str(), json, &out);
      return finish(s, out);
    }
    if (*fuzz_cmd) {
      tutte_fuzz_options opts{family.c_str(), max_elements, seed, trials, connected ? 1 : 0, workers,
                              theorems.c_str()};
      const tutte_status s = tutte_fuzz(&opts, json, &out);
      return finish(s, out);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message() << '\n';
    return f.code();
  }
  return kUsage;
}
