#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cppgen {

struct CriterionResult {
  int id = 0;                 ///< 1..12 for acceptance criteria, 0 otherwise
  std::string criterion;      ///< short name
  double statistic = 0.0;     ///< worst-case statistic over the sub-checks
  double p_value = 0.0;       ///< smallest p-value, NaN for deterministic checks
  double tolerance = 0.0;     ///< threshold the statistic or p-value is held to
  bool pass = false;
  double seconds = 0.0;       ///< wall time of the check
  std::string detail;         ///< human-readable breakdown
};

/// Bracket evaluator (k, tau) -> ln(1+tau) - sum_{i<k} y^i/i; replaceable
/// so that tests can inject a faulty implementation.
using BracketEvaluator = std::function<double(int k, double tau)>;

struct VerifyOptions {
  std::uint64_t seed = 0;
  bool quick = false;  ///< deterministic checks only
  int threads = 1;
  BracketEvaluator bracket;  ///< defaults to fixed_origin_bracket
};

/// Criterion ids run in quick mode: the deterministic ones.
const std::vector<int>& deterministic_criteria();

/// Runs one acceptance criterion (1..12).
CriterionResult run_criterion(int id, const VerifyOptions& options);

/// Stability of the fixed-origin bracket against a 150-digit evaluation of the
/// direct formula, k = 1..49, tau in {0.01, 1, 1e3}, relative 1e-9.
CriterionResult check_bracket_stability(const BracketEvaluator& bracket);

/// All criteria (or the deterministic subset in quick mode), followed by the
/// bracket stability check.
std::vector<CriterionResult> run_verification(const VerifyOptions& options);

}  // namespace cppgen
