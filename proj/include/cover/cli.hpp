// Copyright 2026 The cover Authors
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

// The `cover` command line. Run() is the whole program minus main(), so tests
// can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 usage, 2 parse/read error, 3 invalid or
// infeasible instance, 4 budget or size limit exceeded.

#ifndef COVER_CLI_HPP_
#define COVER_CLI_HPP_

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cover/bounds.hpp"
#include "cover/error.hpp"
#include "cover/exact.hpp"
#include "cover/experiments.hpp"
#include "cover/generators.hpp"
#include "cover/greedy.hpp"
#include "cover/instance.hpp"
#include "cover/io.hpp"
#include "cover/lp.hpp"
#include "cover/rational.hpp"

namespace cover::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitInvalid = 3,
  kExitLimit = 4,
};

inline int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError:
    case ErrorCode::kIoError:
      return kExitParse;
    case ErrorCode::kElementOutOfRange:
    case ErrorCode::kEmptySet:
    case ErrorCode::kNegativeWeight:
    case ErrorCode::kUnionNotUniverse:
    case ErrorCode::kEmptyInstance:
    case ErrorCode::kIndexOutOfRange:
    case ErrorCode::kNonPositiveWeight:
    case ErrorCode::kInvalidTrace:
    case ErrorCode::kTraceMismatch:
    case ErrorCode::kLengthMismatch:
      return kExitInvalid;
    case ErrorCode::kIterationLimit:
    case ErrorCode::kNumericalFailure:
    case ErrorCode::kNonOptimalLp:
    case ErrorCode::kTooManySets:
    case ErrorCode::kMTooLargeForMode:
      return kExitLimit;
    case ErrorCode::kNonPositiveArgument:
    case ErrorCode::kArgumentTooSmall:
    case ErrorCode::kSingletonSequence:
    case ErrorCode::kEpsilonOutOfRange:
    case ErrorCode::kKOutOfRange:
    case ErrorCode::kInvalidSpec:
      return kExitUsage;
  }
  return kExitUsage;
}

namespace internal {

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void WriteOutput(const std::string& path, const std::string& text,
                        std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
  file << text;
  if (!file) throw Error(ErrorCode::kIoError, "write to '" + path + "' failed");
}

inline Instance LoadInstance(const std::string& path, InputFormat format) {
  Instance instance = ParseInstance(ReadFile(path), format);
  instance.name = path;
  return instance;
}

inline Rational RationalArg(const std::string& text, const std::string& what) {
  auto value = ParseRational(text);
  if (!value) {
    throw Error(ErrorCode::kInvalidSpec,
                what + " must be a decimal or p/q, got '" + text + "'");
  }
  return *value;
}

inline std::string JoinCounts(const std::vector<std::size_t>& values,
                              std::size_t offset = 0) {
  std::string out;
  for (std::size_t v : values) {
    if (!out.empty()) out += " ";
    out += std::to_string(v + offset);
  }
  return out;
}

}  // namespace internal

inline int Run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Weighted set cover: greedy traces, accuracy bounds, LP "
               "relaxation, exact solver and enumeration tables.",
               "cover"};
  app.require_subcommand(1);

  const std::map<std::string, InputFormat> format_map = {
      {"auto", InputFormat::kAuto},
      {"native", InputFormat::kNative},
      {"orlib", InputFormat::kOrLib}};
  const std::map<std::string, TieBreak> tie_map = {
      {"index", TieBreak::kLowestIndex},
      {"max-size", TieBreak::kLargestResidual}};
  const std::map<std::string, SequenceMode> mode_map = {
      {"auto", SequenceMode::kAuto},
      {"compositions", SequenceMode::kCompositions},
      {"partitions", SequenceMode::kPartitions}};
  const std::map<std::string, SolveMethod> method_map = {
      {"auto", SolveMethod::kAuto},
      {"exhaustive", SolveMethod::kExhaustive},
      {"bnb", SolveMethod::kBranchAndBound}};

  std::string input;
  std::string output;
  InputFormat from = InputFormat::kAuto;
  TieBreak tie = TieBreak::kLowestIndex;
  std::string format;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "Instance file")->required();
    cmd->add_option("--from", from, "Input format: auto|native|orlib")
        ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
  };

  // greedy
  CLI::App* greedy_cmd = app.add_subcommand("greedy", "Run charged-weight greedy");
  add_input(greedy_cmd);
  greedy_cmd->add_option("--tie-break", tie, "index|max-size")
      ->transform(CLI::CheckedTransformer(tie_map, CLI::ignore_case));
  greedy_cmd->add_option("--format", format, "kv|csv")
      ->check(CLI::IsMember({"kv", "csv"}));

  // bounds
  bool no_exact = false;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "Report accuracy bounds");
  add_input(bounds_cmd);
  bounds_cmd->add_option("--tie-break", tie, "index|max-size")
      ->transform(CLI::CheckedTransformer(tie_map, CLI::ignore_case));
  bounds_cmd->add_option("--format", format, "kv|csv")
      ->check(CLI::IsMember({"kv", "csv"}));
  bounds_cmd->add_flag("--no-exact", no_exact,
                       "Skip the exact optimum even when n <= 18");

  // lp
  double tol = 1e-9;
  CLI::App* lp_cmd = app.add_subcommand("lp", "Solve the LP relaxation");
  add_input(lp_cmd);
  lp_cmd->add_option("--tol", tol, "Feasibility/optimality tolerance")
      ->check(CLI::PositiveNumber);
  lp_cmd->add_option("--format", format, "kv|csv|lp")
      ->check(CLI::IsMember({"kv", "csv", "lp"}));

  // exact
  SolveBudget budget;
  CLI::App* exact_cmd = app.add_subcommand("exact", "Exact optimum");
  add_input(exact_cmd);
  exact_cmd->add_option("--node-limit", budget.node_limit)
      ->check(CLI::PositiveNumber);
  exact_cmd->add_option("--time-limit", budget.time_limit_seconds, "Seconds")
      ->check(CLI::PositiveNumber);
  exact_cmd->add_option("--method", budget.method, "auto|exhaustive|bnb")
      ->transform(CLI::CheckedTransformer(method_map, CLI::ignore_case));
  exact_cmd->add_flag("--lp-bound", budget.use_lp_bound,
                      "Also prune with the LP relaxation");

  // gen
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->require_subcommand(1);
  std::vector<std::size_t> sequence;
  std::string eps_text = "1/2";
  CLI::App* gen_cs = gen_cmd->add_subcommand("cs", "Instance producing sequence s");
  gen_cs->add_option("--s", sequence, "Sequence, e.g. 2,1")
      ->required()
      ->delimiter(',');
  gen_cs->add_option("--eps", eps_text, "Epsilon in (0,1)");
  gen_cs->add_option("-o,--output", output);
  int k = 5;
  CLI::App* gen_gf2 = gen_cmd->add_subcommand("gf2", "GF(2) inner-product family");
  gen_gf2->add_option("--k", k)->required();
  gen_gf2->add_option("-o,--output", output);
  RandomSpec random_spec;
  std::string weight_lo = "1", weight_hi = "10";
  CLI::App* gen_random = gen_cmd->add_subcommand("random", "Seeded random instance");
  gen_random->add_option("--m", random_spec.m)->check(CLI::PositiveNumber);
  gen_random->add_option("--n", random_spec.n)->check(CLI::PositiveNumber);
  gen_random->add_option("--density", random_spec.density);
  gen_random->add_option("--weight-lo", weight_lo);
  gen_random->add_option("--weight-hi", weight_hi);
  gen_random->add_option("--seed", random_spec.seed);
  gen_random->add_option("-o,--output", output);

  // table
  int table_id = 1;
  std::size_t table_m = 10;
  std::optional<std::size_t> table_m_max;
  SequenceMode mode = SequenceMode::kAuto;
  int k_lo = 5, k_hi = 10;
  Table3Options table3_options;
  CLI::App* table_cmd = app.add_subcommand("table", "Reproduce a result table");
  table_cmd->add_option("table", table_id, "1, 2 or 3")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));
  table_cmd->add_option("--m", table_m, "Universe size (tables 1, 2)");
  table_cmd->add_option("--m-max", table_m_max, "Last m of a range");
  table_cmd->add_option("--mode", mode, "compositions|partitions|auto")
      ->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case));
  table_cmd->add_option("--k-lo", k_lo, "First k (table 3)");
  table_cmd->add_option("--k-hi", k_hi, "Last k (table 3)");
  table_cmd->add_option("--lp-limit", table3_options.lp_limit,
                        "Solve the LP only when m*n is at most this");
  table_cmd->add_option("--format", format, "md|csv")
      ->check(CLI::IsMember({"md", "csv"}));
  table_cmd->add_option("-o,--output", output);

  // convert / validate
  CLI::App* convert_cmd = app.add_subcommand("convert", "Rewrite in native format");
  add_input(convert_cmd);
  convert_cmd->add_option("-o,--output", output);
  CLI::App* validate_cmd = app.add_subcommand("validate", "Check an instance");
  add_input(validate_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (greedy_cmd->parsed()) {
      const Instance instance = internal::LoadInstance(input, from);
      const GreedyTrace trace = Greedy(instance, tie);
      if (format == "csv") {
        out << TraceCsv(trace);
      } else {
        out << "m=" << instance.m << "\n"
            << "n=" << instance.n() << "\n"
            << "tie_break=" << TieBreakName(tie) << "\n"
            << "iterations=" << trace.iterations() << "\n"
            << "chosen=" << internal::JoinCounts(trace.chosen, 1) << "\n"
            << "s=" << internal::JoinCounts(trace.s) << "\n"
            << "residuals=" << internal::JoinCounts(trace.residuals) << "\n"
            << "total_weight=" << ToString(trace.total_weight) << "\n"
            << "total_weight_approx="
            << FormatFixed(ToDouble(trace.total_weight), 6) << "\n";
      }
    } else if (bounds_cmd->parsed()) {
      const Instance instance = internal::LoadInstance(input, from);
      const GreedyTrace trace = Greedy(instance, tie);
      std::optional<Cover> opt;
      if (!no_exact && instance.n() <= kAutoExhaustiveSets) {
        const ExactResult exact = ExactOpt(instance);
        if (exact.status == ExactStatus::kProvenOptimal) opt = exact.cover;
      }
      const BoundReport report = MakeBoundReport(instance, trace, opt);
      out << (format == "csv" ? ToCsv(report) : ToKeyValue(report));
    } else if (lp_cmd->parsed()) {
      const Instance instance = internal::LoadInstance(input, from);
      if (format == "lp") {
        out << ToLpFormat(instance);
        return kExitOk;
      }
      const LpOutcome lp = SolveLp(instance, tol);
      if (lp.status != LpStatus::kOptimal) {
        err << "IterationLimit: LP stopped after " << lp.iterations
            << " iterations\n";
        return kExitLimit;
      }
      if (format == "csv") {
        out << LpSolutionCsv(lp);
      } else {
        const GreedyTrace trace = Greedy(instance);
        const Estimate r = REstimate(trace, lp);
        out << "status=optimal\n"
            << "iterations=" << lp.iterations << "\n"
            << "objective=" << FormatFixed(lp.objective, 9) << "\n";
        if (lp.exact_objective) {
          out << "objective_exact=" << ToString(*lp.exact_objective) << "\n";
        }
        out << "greedy_weight=" << ToString(trace.total_weight) << "\n"
            << "R=" << FormatFixed(r.value, 6) << "\n";
        if (r.exact) out << "R_exact=" << ToString(*r.exact) << "\n";
      }
    } else if (exact_cmd->parsed()) {
      const Instance instance = internal::LoadInstance(input, from);
      const ExactResult result = ExactOpt(instance, budget);
      out << ToKeyValue(result);
      if (result.status != ExactStatus::kProvenOptimal) return kExitLimit;
    } else if (gen_cmd->parsed()) {
      Instance instance;
      if (gen_cs->parsed()) {
        instance = GenClassCs(SequenceSpec{sequence},
                              internal::RationalArg(eps_text, "--eps"));
      } else if (gen_gf2->parsed()) {
        instance = GenGf2(k);
      } else {
        random_spec.weight_lo = internal::RationalArg(weight_lo, "--weight-lo");
        random_spec.weight_hi = internal::RationalArg(weight_hi, "--weight-hi");
        instance = GenRandom(random_spec);
      }
      internal::WriteOutput(output, WriteNative(instance) + "\n", out);
    } else if (table_cmd->parsed()) {
      std::string text;
      if (table_id == 3) {
        const auto rows = Table3(k_lo, k_hi, table3_options);
        text = format == "csv" ? Table3Csv(rows) : Table3Markdown(rows);
      } else {
        const std::size_t last = table_m_max.value_or(table_m);
        if (last < table_m) {
          throw Error(ErrorCode::kInvalidSpec, "--m-max must be >= --m");
        }
        std::vector<SequenceStats> rows;
        for (std::size_t m = table_m; m <= last; ++m) {
          rows.push_back(ComputeSequenceStats(m, mode));
        }
        if (table_id == 1) {
          text = format == "csv" ? Table1Csv(rows) : Table1Markdown(rows);
        } else {
          text = format == "csv" ? Table2Csv(rows) : Table2Markdown(rows);
        }
      }
      internal::WriteOutput(output, text, out);
    } else if (convert_cmd->parsed()) {
      const Instance instance = internal::LoadInstance(input, from);
      internal::WriteOutput(output, WriteNative(instance) + "\n", out);
    } else if (validate_cmd->parsed()) {
      const Instance instance = internal::LoadInstance(input, from);
      out << "valid m=" << instance.m << " n=" << instance.n() << "\n";
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
  return kExitOk;
}

}  // namespace cover::cli

#endif  // COVER_CLI_HPP_
