#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "askw/exactalg/rational.hpp"
#include "askw/generators.hpp"
#include "askw/termorder.hpp"

namespace askw::cli {

enum class Format { Json, Table };

struct RunConfig {
  std::string subcommand;
  std::vector<long> p;
  std::vector<long> q;
  std::vector<long> ell;
  Fibre fibre = Fibre::Relative;
  bool oracle = false;
  /// Raw "x1=1,x2=2" text; parsed once the parameters are known.
  std::string spec;
  std::string out;
  Format format = Format::Json;
  TieBreak tie_break = TieBreak::Default;
  std::uint64_t seed = 1;
  bool corrupt_one = false;
  bool timings = false;
  bool all_pairs = false;
};

enum ExitCode : int { kOk = 0, kMathFailure = 1, kUsage = 2, kIo = 3 };

struct CommandResult {
  int exit_code = kOk;
  /// Document or table for stdout / --out.
  std::string output;
  /// One-line notes for stderr.
  std::vector<std::string> diagnostics;
};

/// "x1=1,x_2=-3/2" -> values for x_1..x_k; omitted symbols default to x_s = s.
std::vector<Rational> parse_specialization(const std::string& text, int k);

CommandResult cmd_info(const RunConfig& config);
CommandResult cmd_generators(const RunConfig& config);
CommandResult cmd_certify(const RunConfig& config);
CommandResult cmd_sweep(const RunConfig& config);

CommandResult dispatch(const RunConfig& config);

/// Writes the result (file or stdout, diagnostics to stderr); returns the exit code.
int emit(const RunConfig& config, CommandResult result);

}  // namespace askw::cli
