#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "b3q/json_io.hpp"

namespace b3q::cli {

/// Parsed job description. The JSON file may carry any of:
///   context, X, dim, h, f, variant, words, mode, grid, hints
struct JobConfig {
  ContextPtr ctx = FieldContext::rationals();
  std::optional<ParameterSet> xs;
  std::optional<int> dim;
  int variant = 5;
  RootChoice roots;
  RootHints hints;
  std::vector<std::string> words;
  std::string mode;
  Json grid;
};

/// The context override (if any) is applied before elements are parsed.
JobConfig parse_job(const Json& j, const std::optional<std::string>& context_override = std::nullopt);

/// Exit 0 = every check passed, 1 = a mathematical check failed, 2 = input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace b3q::cli
