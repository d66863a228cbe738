#pragma once

#include <span>

#include "cppgen/extended_real.hpp"
#include "cppgen/model.hpp"
#include "cppgen/random_stream.hpp"

namespace cppgen {

// Exact sampling of the sample's coalescent point process.
//
// Under a fixed origin t the n-1 node depths are i.i.d. with density
//   p / (1 + p x)^2 * (1 + p t) / (p t)   on (0, t),
// under an infinite origin with density p / (1 + p x)^2 on (0, inf), and
// under the prior x^{-i} the origin is first drawn from its posterior and the
// depths are then drawn as for a fixed origin.

/// Inverse CDF of the fixed-origin depth law; u in [0,1], result in [0,t].
double quantile_depth_fixed_t(double u, double p, double t);
/// Inverse CDF of F(x) = p x / (1 + p x); u in [0,1).
double quantile_depth_infinite(double u, double p);

/// Posterior density of the origin time under prior x^{-i}:
///   h(t) = p n C(n-1,i) (p t)^{n-i-1} / (1 + p t)^{n+1}.
/// Evaluated in log space. Requires 0 <= i < n, t >= 0.
double posterior_density(int n, double p, int i, double t);
/// Posterior CDF, via the regularized incomplete beta function.
double posterior_cdf(int n, double p, int i, double t);

/// Origin time from one uniform: Y = Beta(n-i, i+1) quantile of u, then
/// T = Y / (p (1 - Y)).
double origin_from_uniform(int n, double p, int i, double u);
double sample_origin_posterior(int n, double p, int i, RandomStream& rng);

/// Genealogy from an explicit list of uniforms: n uniforms for a prior
/// (origin first), n-1 otherwise.
Genealogy genealogy_from_uniforms(const ModelParams& params,
                                  const OriginCondition& origin,
                                  std::span<const double> uniforms);
Genealogy sample_genealogy(const ModelParams& params,
                           const OriginCondition& origin, RandomStream& rng);

/// Density of the k-th largest depth T_{n,k} under a fixed origin t.
double order_stat_density_fixed_t(int n, int k, double p, double t, double s);

/// E[T_{n,k}^m]. Closed forms for InfiniteTime (finite iff m <= k-1) and
/// PowerPrior(0) (finite iff m <= k). PowerPrior(i >= 1) is finite iff
/// m <= k + i and FixedTime is always finite; both are integrated
/// numerically to relative 1e-8.
ExtendedReal moment_order_stat(const OriginCondition& regime, int n, int k,
                               int m, double p);

/// The k-th largest of the depths (k = 1 is the time to the MRCA).
double order_statistic(std::span<const double> depths, int k);

}  // namespace cppgen
