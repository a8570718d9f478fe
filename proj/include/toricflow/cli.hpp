#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "toricflow/serialize.hpp"

namespace toricflow::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kHypothesisViolation = 3,
  kBoundExhausted = 4,
};

/// Command-line values that override the job's "options" block.
struct Overrides {
  std::optional<std::string> task;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> root_bound;
  std::optional<unsigned> ext_bound;
  std::optional<unsigned> max_retries;
  std::optional<std::string> emit;  // word file path
};

/// Runs the job's task (analyze, roots, certify, straighten, extend).
int run_job(const Json& job, const Overrides& overrides, std::ostream& out, std::ostream& err);

/// Replays a word file against the job's cone; prints PASS or FAIL.
int run_verify(const Json& job, const Json& word_file, std::ostream& out, std::ostream& err);

}  // namespace toricflow::cli
