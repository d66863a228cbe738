#pragma once

#include "cppgen/extended_real.hpp"
#include "cppgen/model.hpp"

namespace cppgen {

// Expected site frequency spectrum E(xi_k) of an n-sample with mutation rate
// theta along lineages and sampling rate p.

/// Bracket ln(1+tau) - sum_{i<k} (tau/(1+tau))^i / i of the fixed-origin
/// formula, evaluated as the convergent tail sum_{i>=k} y^i/i where the
/// direct difference would cancel.
double fixed_origin_bracket(int k, double tau);
/// Same bracket by direct subtraction.
double fixed_origin_bracket_naive(int k, double tau);

/// Fixed origin t: the closed form in tau = p t with the stable bracket.
double expected_sfs_fixed_closed_form(int n, int k, double theta, double p,
                                      double t);
/// Fixed origin t from the positive series
///   E = theta [ (n-k-1) Q + 2 R ],
///   Q = (Y/p) sum_m 2 (m+1) Y^m / ((k+m)(k+m+1)(k+m+2)),
///   R = (Y/p) sum_m (m+1) Y^m / ((k+m)(k+m+1)),      Y = tau/(1+tau),
/// which has no cancellation and converges fast for small tau.
double expected_sfs_fixed_series(int n, int k, double theta, double p,
                                 double t);
/// Series for tau <= 1, closed form above.
double expected_sfs_fixed(int n, int k, double theta, double p, double t);

/// Log-uniform prior closed form, valid for 1 <= k <= n-3.
double expected_sfs_log_uniform(int n, int k, double theta, double p);

/// E(xi_k) under any origin condition. FixedTime and PowerPrior(0) are closed
/// forms, InfiniteTime is +inf, PowerPrior(1) uses the closed form for
/// k <= n-3 and quadrature for k in {n-2, n-1}. PowerPrior(i >= 2) throws
/// UnsupportedRegime; expected_sfs_quadrature covers it.
ExtendedReal expected_sfs(const OriginCondition& regime, int n, int k,
                          double theta, double p);

/// Mixture of the fixed-origin spectrum over the posterior origin density
/// under prior x^{-i}, integrated in y = pt/(1+pt) to relative 1e-8.
double expected_sfs_quadrature(int i, int n, int k, double theta, double p);

/// Uniform prior via expected inter-coalescence times:
///   theta (2/k) C(n-1,k)^{-1} sum_{j=2}^{n-k+1} C(j,2) C(n-j,k-1) E[D_j],
/// D_j = T_{n,j-1} - T_{n,j} (T_{n,n} = 0) the time with j lineages.
/// Only i = 0 is supported.
double expected_sfs_via_branch_times(int i, int n, int k, double theta,
                                     double p);

/// Expected time with j lineages under prior x^{-i}, from order-statistic
/// means; only i = 0 has all of them finite.
double expected_inter_coalescence_time(int i, int n, int j, double p);

/// Limit of E(xi_k)/E(S) as the fixed origin goes to infinity: 1/(n-1).
double normalized_sfs_limit(int n);

}  // namespace cppgen
