// Copyright 2026 The Rainbow Forest Authors
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

#include "rainbow/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbow/batch.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/constructor.hpp"
#include "rainbow/error.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/trace.hpp"
#include "rainbow/verifier.hpp"

namespace rainbow {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text,
          std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

struct GenArgs {
  std::size_t m = 0;
  std::string scheme = "round-robin";
  std::optional<std::uint64_t> permute_seed;
  std::string output;
};

struct BuildArgs {
  std::string input;
  std::string output;
  std::string policy = "min";
  std::uint64_t seed = 0;
  std::string trace;
  std::string dot;
};

struct VerifyArgs {
  std::string coloring;
  std::string forest;
  std::string trace;
};

struct OracleArgs {
  std::string input;
  std::size_t cap = kPackingVertexCap;
};

struct BenchArgs {
  std::size_t m_from = 1;
  std::size_t m_to = 40;
  std::size_t reps = 3;
  std::string policy = "min";
  std::uint64_t seed = 0;
  std::string csv;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  const EdgeColoring coloring = a.permute_seed
                                    ? permuted_round_robin(a.m, *a.permute_seed)
                                    : round_robin(a.m);
  emit(a.output, serialize_coloring(coloring), out);
  return kExitOk;
}

int run_build(const BuildArgs& a, std::ostream& out, std::ostream& err) {
  const EdgeColoring coloring = parse_coloring(read_file(a.input));
  const SelectionPolicy policy = SelectionPolicy::parse(a.policy, a.seed);
  try {
    const BuildResult result = build_forest(coloring, policy, true);
    emit(a.output, serialize_forest(result.forest), out);
    if (!a.trace.empty()) write_file(a.trace, serialize_trace(result.trace));
    if (!a.dot.empty()) write_file(a.dot, forest_to_dot(result.forest));
  } catch (const ConstructionFailure& failure) {
    const std::string base =
        !a.trace.empty() ? a.trace
                         : (!a.output.empty() ? a.output : std::string("rainbow"));
    const std::string dump = base + ".failure.jsonl";
    write_file(dump, serialize_trace(failure.trace()));
    err << "error: " << failure.what() << "\n"
        << "trace dump: " << dump << "\n";
    return failure.internal() ? kExitInternal : kExitUsage;
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const EdgeColoring coloring = parse_coloring(read_file(a.coloring));
  const Forest forest = parse_forest(read_file(a.forest));
  std::optional<ConstructionTrace> trace;
  if (!a.trace.empty()) trace = parse_trace(read_file(a.trace));
  const VerificationReport report =
      verify_all(coloring, forest, trace ? &*trace : nullptr);
  out << report.to_json();
  if (!report.pass) {
    err << "verification failed\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_oracle(const OracleArgs& a, std::ostream& out) {
  const EdgeColoring coloring = parse_coloring(read_file(a.input));
  const std::size_t count =
      enumerate_rainbow_spanning_trees_parallel(coloring, a.cap).size();
  const std::size_t packing = max_disjoint_rainbow_trees_parallel(coloring, a.cap);
  nlohmann::ordered_json doc;
  doc["count"] = count;
  doc["max_disjoint"] = packing;
  out << doc.dump() << "\n";
  return kExitOk;
}

int run_bench(const BenchArgs& a, std::ostream& out) {
  if (a.m_from > a.m_to) {
    throw Error(ErrorCode::kInvalidArgument, "--m-from exceeds --m-to");
  }
  BatchConfig config;
  config.m_from = a.m_from;
  config.m_to = a.m_to;
  config.reps = a.reps;
  config.seed_base = a.seed;
  config.policy = SelectionPolicy::parse(a.policy, a.seed);
  const auto rows = run_batch_parallel(config);
  emit(a.csv, batch_csv(rows), out);
  const bool all_pass = std::all_of(rows.begin(), rows.end(),
                                    [](const BatchRow& r) {
                                      return r.verify_pass;
                                    });
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Edge-disjoint rainbow spanning trees in edge-colored K_2m",
               "rainbow"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a proper coloring");
  gen_cmd->add_option("--m", gen.m, "Half the vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--scheme", gen.scheme)
      ->check(CLI::IsMember({"round-robin"}));
  gen_cmd->add_option("--permute-seed", gen.permute_seed,
                      "Relabel vertices and colors with this seed");
  gen_cmd->add_option("-o,--output", gen.output);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Construct the forest");
  build_cmd->add_option("-i,--input", build.input)->required();
  build_cmd->add_option("-o,--output", build.output);
  build_cmd->add_option("--policy", build.policy)
      ->check(CLI::IsMember({"min", "max", "random"}));
  build_cmd->add_option("--seed", build.seed);
  build_cmd->add_option("--trace", build.trace, "Write the JSONL trace here");
  build_cmd->add_option("--dot", build.dot, "Write Graphviz output here");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a forest");
  verify_cmd->add_option("-i,--input", verify.coloring)->required();
  verify_cmd->add_option("-f,--forest", verify.forest)->required();
  verify_cmd->add_option("-t,--trace", verify.trace);

  OracleArgs oracle;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Exhaustive search on tiny instances");
  oracle_cmd->add_option("-i,--input", oracle.input)->required();
  oracle_cmd->add_option("--cap", oracle.cap, "Largest vertex count searched");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Build and verify a batch");
  bench_cmd->add_option("--m-from", bench.m_from)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--m-to", bench.m_to)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--reps", bench.reps);
  bench_cmd->add_option("--policy", bench.policy)
      ->check(CLI::IsMember({"min", "max", "random"}));
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--csv", bench.csv);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen, out);
    if (*build_cmd) return run_build(build, out, err);
    if (*verify_cmd) return run_verify(verify, out, err);
    if (*oracle_cmd) return run_oracle(oracle, out);
    if (*bench_cmd) return run_bench(bench, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.internal() ? kExitInternal : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rainbow
