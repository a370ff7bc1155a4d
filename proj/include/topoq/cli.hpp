#pragma once

// Job specifications and their execution for the topoq command-line tool.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "topoq/io.hpp"

namespace topoq::cli {

using io::Json;

inline constexpr std::size_t kDefaultHspTrials = 32;
/// Decomposition seeds tried after the requested one fails.
inline constexpr std::size_t kIrrepSeedAttempts = 8;

struct JobSpec {
  std::string command;
  Json group;
  std::optional<Json> function;
  std::optional<Json> projectors;
  std::optional<Json> weights;
  std::uint64_t seed = 0;
  std::optional<std::size_t> trials;
  double tol = kDefaultTol;
};

/// Command-line values that take precedence over the document.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<double> tol;
};

bool is_command(std::string_view command);

/// Validates field presence and types. A "command" field in the document must
/// agree with `command`. Throws ValidationError.
JobSpec parse_job(std::string_view command, const Json& doc, const Overrides& overrides = {});

struct RunOutput {
  int exit_code = 0;
  std::string out;  // result document, newline-terminated
  std::string err;  // {"error":{...}} document when exit_code != 0
};

/// Never throws: errors become exit code 1 (input) or 2 (internal).
RunOutput run(const JobSpec& job);

/// Parses `spec_text` as JSON and runs it.
RunOutput run_text(std::string_view command, std::string_view spec_text,
                   const Overrides& overrides = {});

/// compute_irreps with the seed, then seed + 1, ... on DecompositionFailed.
IrrepSet irreps_with_retry(const FiniteGroup& g, std::uint64_t seed);

/// Classical-structure and spider checks on the underlying set, then repnorm,
/// mdecomp, copy-on-leg and the classification of every irrep against every
/// normal subgroup.
Report verify_suite(const FiniteGroup& g, const IrrepSet& irreps, double tol = kDefaultTol);

/// Largest set on which the dense classical-structure checks are run.
inline constexpr std::size_t kVerifySetCap = 12;

}  // namespace topoq::cli
