#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rocom/document.hpp"

namespace rocom {

struct ExpectationResult {
  std::size_t step = 0;  // 1-based
  std::string what;
  bool passed = false;
  std::string detail;  // observed value on failure
};

/// Output of a scenario run: the interleaved transition log and every
/// expectation outcome, in step order.
struct ScenarioReport {
  std::vector<std::string> lines;
  std::vector<ExpectationResult> expectations;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
  std::string render() const;
};

/// Executes `steps` against `engine`. An action step that fails without a
/// matching `expect-error=` stops the run with Error{StepError} naming the
/// 1-based step and the underlying error code. Malformed steps raise
/// SyntaxError at their position.
ScenarioReport run_scenario(const std::vector<ScenarioStep>& steps, Engine& engine);

}  // namespace rocom
