#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cppgen/model.hpp"
#include "cppgen/stat_tests.hpp"

namespace cppgen {

struct LimitCheckConfig {
  OriginCondition regime = InfiniteTime{};  ///< InfiniteTime or PowerPrior
  int n = 2000;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  int replicates = 10000;
  int top_k = 2;        ///< order statistics T_{n,1..top_k} compared
  double box_lo = 1.0;  ///< box (0,1) x (box_lo, box_hi) for the count test
  double box_hi = 2.0;
  int threads = 1;
};

struct NamedTest {
  std::string name;
  TestResult result;
};

struct LimitCheckReport {
  std::vector<NamedTest> tests;
  double box_mean = 0.0;      ///< empirical mean box count (InfiniteTime)
  double box_expected = 0.0;  ///< alpha (1/box_lo - 1/box_hi)
};

/// Samples pi_n = sum_k delta_{(k/n, H*_k)} from the exact sampler with
/// p = n/alpha and compares it with the limit objects:
///  - InfiniteTime: box counts vs Poisson, T_{n,j} vs e_{j-1};
///  - PowerPrior(i): T_or vs InvGamma(i+1, alpha), T_{n,j} vs e_{i+j}.
/// Reference e-samples come from sample_top_atoms on independent streams.
LimitCheckReport empirical_limit_check(const LimitCheckConfig& config);

}  // namespace cppgen
