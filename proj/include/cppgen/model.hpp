#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cppgen/extended_real.hpp"

namespace cppgen {

/// Parameters of the conditioned critical birth-death sample.
struct ModelParams {
  int n = 2;           ///< sample size
  double p = 1.0;      ///< per-lineage sampling rate
  double theta = 0.0;  ///< mutation rate along lineages
  double N = 1.0;      ///< birth-death rate of the forward population
  double alpha = 1.0;  ///< large-sample constant, p = n / alpha

  /// Throws DomainError naming the first violated invariant.
  void validate() const;
  /// validate() plus p < N, required by the forward construction.
  void validate_for_forward() const;
};

/// Origin fixed at backward time t.
struct FixedTime {
  double t;
};
/// Origin infinitely far in the past.
struct InfiniteTime {};
/// Origin drawn from the improper prior x -> x^{-i}.
struct PowerPrior {
  int i;
};

using OriginCondition = std::variant<FixedTime, InfiniteTime, PowerPrior>;

/// Throws DomainError if t <= 0 or i is outside [0, n).
void validate_origin(const OriginCondition& origin, int n);

/// Parse "fixed:<t>", "infinite" or "prior:<i>".
OriginCondition parse_origin(const std::string& text);
std::string describe(const OriginCondition& origin);

/// Coalescent point process of an n-sample.
///
/// depths[q] is the divergence time between individuals q and q+1 (0-based
/// individuals), i.e. the node depth H*_{q+1}. The origin doubles as the
/// length of branch 0.
struct Genealogy {
  ExtendedReal origin;
  std::vector<double> depths;

  int sample_size() const { return static_cast<int>(depths.size()) + 1; }
  /// Length of branch j: the origin for j = 0, otherwise depths[j-1].
  double branch_length(int j) const;
};

/// Site frequency spectrum: xi[k-1] mutations carried by exactly k of n.
struct SiteFrequencySpectrum {
  std::vector<std::uint64_t> xi;
  std::uint64_t S = 0;      ///< polymorphic sites, sum of xi
  std::uint64_t fixed = 0;  ///< carried by all n individuals, not in xi
};

}  // namespace cppgen
