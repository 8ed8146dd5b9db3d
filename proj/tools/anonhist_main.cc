//
// Copyright 2026 The anonhist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Command line front end. Exit codes: 0 success, 2 precondition violation
// (including bad usage), 3 guardrail exceeded, 4 certification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "anonhist/enumeration.h"
#include "anonhist/errors.h"
#include "anonhist/experiment.h"
#include "anonhist/io.h"
#include "anonhist/lowerbound.h"
#include "anonhist/mechanism.h"
#include "anonhist/noise.h"
#include "anonhist/partition.h"

namespace anonhist {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw PreconditionError("cannot open input file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Accepts either the line-per-count text format or a JSON count array.
IntegerPartition ParsePartitionFile(const std::string& content) {
  for (char c : content) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    if (c == '[') return ParsePartitionJson(content);
    break;
  }
  return ParsePartitionText(content);
}

MechanismKind KindFromName(const std::string& name) {
  if (name == "alg1") return MechanismKind::kAlg1;
  if (name == "alg2") return MechanismKind::kAlg2;
  if (name == "baseline") return MechanismKind::kBaseline;
  throw PreconditionError("unknown mechanism: " + name);
}

ShapeKind ShapeFromName(const std::string& name) {
  if (name == "staircase") return ShapeKind::kStaircase;
  if (name == "flat") return ShapeKind::kFlat;
  if (name == "block") return ShapeKind::kBlock;
  throw PreconditionError("unknown shape: " + name);
}

struct ReleaseArgs {
  double epsilon = 0.0;
  int64_t n = 0;
  bool unknown_n = false;
  bool has_n = false;
  std::string mechanism = "alg1";
  uint64_t seed = 0;
  std::string input_path;
};

int RunRelease(const ReleaseArgs& args) {
  ReleaseConfig config;
  config.epsilon = args.epsilon;
  config.kind = KindFromName(args.mechanism);
  config.seed = args.seed;
  if (args.has_n) config.size_bound = args.n;
  if (HasLowEpsilonCaveat(config)) {
    std::cerr << "warning: epsilon < 1 lies outside the calibrated accuracy "
                 "regime; the release is still private but noisier\n";
  }
  const IntegerPartition input = ParsePartitionFile(ReadFile(args.input_path));
  const IntegerPartition released = Release(config, input, 0);
  std::cout << FormatPartitionText(released);
  return 0;
}

struct EvalArgs {
  double epsilon = 0.0;
  int64_t n = 0;
  int64_t trials = 0;
  uint64_t seed = 0;
  std::string mechanism = "alg1";
  std::string input_path;
  std::string shape;
};

int RunEval(const EvalArgs& args) {
  ReleaseConfig config;
  config.epsilon = args.epsilon;
  config.kind = KindFromName(args.mechanism);
  config.seed = args.seed;
  if (config.kind != MechanismKind::kAlg2) config.size_bound = args.n;

  std::vector<IntegerPartition> inputs;
  std::vector<std::string> labels;
  if (!args.input_path.empty()) {
    inputs.push_back(ParsePartitionFile(ReadFile(args.input_path)));
    labels.push_back(args.input_path);
  } else if (!args.shape.empty()) {
    inputs.push_back(MakeShapeInput(ShapeFromName(args.shape), args.n));
    labels.push_back(args.shape);
  } else {
    for (const char* name : {"staircase", "flat", "block"}) {
      inputs.push_back(MakeShapeInput(ShapeFromName(name), args.n));
      labels.push_back(name);
    }
  }

  std::vector<ExperimentReport> reports;
  int64_t total_ms = 0;
  for (const IntegerPartition& input : inputs) {
    reports.push_back(RunErrorExperiment(config, input, args.trials));
    total_ms += reports.back().wall_time_ms;
  }
  if (reports.size() == 1) {
    std::cout << ReportToJson(reports[0], labels[0]) << '\n';
  } else {
    std::cout << ReportsToJson(reports, labels) << '\n';
  }
  std::cerr << "wall_time_ms=" << total_ms << '\n';
  return 0;
}

struct CodeArgs {
  int64_t n = 0;
  int64_t delta = 0;
  std::string bits_hex;
  std::string input_path;
};

int RunEncode(const CodeArgs& args) {
  const EncodingSpec spec = BuildEncodingSpec(args.n, args.delta);
  const BitVector bits = HexToBits(args.bits_hex, spec.bit_length);
  std::cout << PartitionToJson(Encode(spec, bits)) << '\n';
  return 0;
}

int RunDecode(const CodeArgs& args) {
  const EncodingSpec spec = BuildEncodingSpec(args.n, args.delta);
  const IntegerPartition p = ParsePartitionFile(ReadFile(args.input_path));
  const BitVector bits = DecodeNearest(spec, p);
  std::string line(bits.size(), '0');
  for (size_t i = 0; i < bits.size(); ++i) {
    // Highest numbered bit first, matching the hex order taken by encode.
    line[bits.size() - 1 - i] = static_cast<char>('0' + bits[i]);
  }
  std::cout << line << '\n';
  return 0;
}

struct PackArgs {
  int64_t n = 0;
  int64_t delta = 0;
  int64_t attempts = 0;
  uint64_t seed = 0;
};

int RunPack(const PackArgs& args) {
  SeededStream stream(args.seed, 0);
  const PackingResult packing =
      GeneratePacking(args.n, args.delta, args.attempts, stream);
  std::cout << PackingToJson(packing) << '\n';
  return 0;
}

int RunAudit(int64_t n) {
  const SensitivityAuditReport report = SensitivityAudit(n);
  std::cout << AuditToJson(report, n) << '\n';
  return 0;
}

int RunOracleProject(int64_t n, const std::string& input_path) {
  const std::vector<int64_t> values = ParseIntVector(ReadFile(input_path));
  const ProjectionOracleResult result = BruteForceProject(values, n);
  std::cout << FormatPartitionText(result.partition);
  std::cerr << "cost=" << result.cost << '\n';
  return 0;
}

int RunMain(int argc, char** argv) {
  CLI::App app{"Differentially private release of anonymized histograms"};
  app.require_subcommand(1);

  ReleaseArgs release_args;
  CLI::App* release = app.add_subcommand(
      "release", "Release one histogram under differential privacy");
  release->add_option("--eps", release_args.epsilon, "Privacy budget epsilon")
      ->required();
  CLI::Option* release_n =
      release->add_option("--n", release_args.n, "Public size bound");
  CLI::Option* unknown_n = release->add_flag(
      "--unknown-n", release_args.unknown_n,
      "No public size bound (requires --mechanism alg2 and eps >= 2)");
  release_n->excludes(unknown_n);
  unknown_n->excludes(release_n);
  release
      ->add_option("--mechanism", release_args.mechanism,
                   "alg1 (default), alg2, or baseline")
      ->check(CLI::IsMember({"alg1", "alg2", "baseline"}));
  release->add_option("--seed", release_args.seed, "RNG seed");
  release->add_option("--input", release_args.input_path, "Histogram file")
      ->required();
  release->callback([&release_args, release_n] {
    release_args.has_n = release_n->count() > 0;
  });

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand(
      "eval", "Monte-Carlo error report for a mechanism");
  eval->add_option("--eps", eval_args.epsilon, "Privacy budget epsilon")
      ->required();
  eval->add_option("--n", eval_args.n, "Size bound and shape size")
      ->required();
  eval->add_option("--trials", eval_args.trials, "Number of releases")
      ->required();
  eval->add_option("--seed", eval_args.seed, "RNG seed");
  eval->add_option("--mechanism", eval_args.mechanism,
                   "alg1 (default), alg2, or baseline")
      ->check(CLI::IsMember({"alg1", "alg2", "baseline"}));
  CLI::Option* eval_input =
      eval->add_option("--input", eval_args.input_path, "Histogram file");
  CLI::Option* eval_shape =
      eval->add_option("--shape", eval_args.shape,
                       "staircase, flat, or block (default: all three)")
          ->check(CLI::IsMember({"staircase", "flat", "block"}));
  eval_input->excludes(eval_shape);
  eval_shape->excludes(eval_input);

  CodeArgs encode_args;
  CLI::App* encode = app.add_subcommand(
      "encode", "Embed a bit vector as a histogram");
  encode->add_option("--n", encode_args.n, "Size budget")->required();
  encode->add_option("--delta", encode_args.delta, "Distance scale")
      ->required();
  encode->add_option("--bits", encode_args.bits_hex, "Bit vector as hex")
      ->required();

  CodeArgs decode_args;
  CLI::App* decode = app.add_subcommand(
      "decode", "Recover the nearest encoded bit vector from a histogram");
  decode->add_option("--n", decode_args.n, "Size budget")->required();
  decode->add_option("--delta", decode_args.delta, "Distance scale")
      ->required();
  decode->add_option("--input", decode_args.input_path, "Histogram file")
      ->required();

  PackArgs pack_args;
  CLI::App* pack = app.add_subcommand(
      "pack", "Generate a certified packing of far-apart histograms");
  pack->add_option("--n", pack_args.n, "Size budget")->required();
  pack->add_option("--delta", pack_args.delta, "Distance scale")->required();
  pack->add_option("--attempts", pack_args.attempts, "Random draws")
      ->required();
  pack->add_option("--seed", pack_args.seed, "RNG seed");

  int64_t audit_n = 0;
  CLI::App* audit = app.add_subcommand(
      "audit", "Exhaustively audit the pre-noise map's sensitivity");
  audit->add_option("--n", audit_n, "Max histogram size (guardrail 12)")
      ->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Exact reference oracles");
  oracle->require_subcommand(1);
  int64_t oracle_n = 0;
  std::string oracle_input;
  CLI::App* oracle_project = oracle->add_subcommand(
      "project", "Exact nearest histogram by exhaustive scan");
  oracle_project->add_option("--n", oracle_n, "Max size (guardrail 12)")
      ->required();
  oracle_project->add_option("--input", oracle_input, "Integer vector file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (release->parsed()) return RunRelease(release_args);
  if (eval->parsed()) return RunEval(eval_args);
  if (encode->parsed()) return RunEncode(encode_args);
  if (decode->parsed()) return RunDecode(decode_args);
  if (pack->parsed()) return RunPack(pack_args);
  if (audit->parsed()) return RunAudit(audit_n);
  if (oracle->parsed() && oracle_project->parsed()) {
    return RunOracleProject(oracle_n, oracle_input);
  }
  return 2;
}

}  // namespace
}  // namespace anonhist

int main(int argc, char** argv) {
  try {
    return anonhist::RunMain(argc, argv);
  } catch (const anonhist::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const anonhist::GuardrailError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const anonhist::CertificationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
