#pragma once

#include "cppgen/extended_real.hpp"

namespace cppgen {

/// H_k = sum_{j=1}^k 1/j, summed in ascending j; H_0 = 0.
double harmonic(int k);

/// Binomial coefficient as a double. Exact 128-bit integer arithmetic for
/// n <= 60, log-gamma above.
double binomial(int n, int k);
double log_binomial(int n, int k);

/// L_k(y) = sum_{i >= k} y^i / i = -ln(1-y) - sum_{i<k} y^i / i, for y in
/// [0,1) and k >= 1. Uses the direct difference when it loses few digits and
/// the convergent tail series otherwise.
///
/// `one_minus_y` must equal 1 - y; it is passed separately so callers working
/// near y = 1 keep full precision.
double log_series_tail(int k, double y, double one_minus_y);
/// The direct form -ln(1-y) - sum_{i<k} y^i/i, cancellation included.
double log_series_tail_naive(int k, double y, double one_minus_y);
/// Tail series only, truncated when a term drops below 1e-18 of the sum.
double log_series_tail_series(int k, double y);

/// I_{k,l}(x) = int_0^x t^{k-l} / (1+t)^k dt for l in {0,1,2}.
/// Requires k >= l, and k >= 1 for l = 1, k >= 2 for l = 2.
double integral_I(int k, int l, double x);
/// Alternating-sum closed forms, evaluated term by term as printed.
double integral_I_raw(int k, int l, double x);

/// J_{k,l}(x) = int_x^inf t^{k-l} / (1+t)^k dt; +inf unless l >= 2.
/// Requires k >= l.
ExtendedReal integral_J(int k, int l, double x);

}  // namespace cppgen
