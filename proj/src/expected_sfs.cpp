#include "cppgen/expected_sfs.hpp"

#include <cmath>
#include <string>

#include "cppgen/errors.hpp"
#include "cppgen/numeric.hpp"
#include "cppgen/quadrature.hpp"
#include "cppgen/sampler.hpp"

namespace cppgen {

namespace {

constexpr double kSeriesRelTol = 1e-18;
constexpr double kQuadratureRelTol = 1e-8;
// Below this tau the closed form cancels ~1/tau^2 digits; the series takes
// over and needs at most ~60 terms.
constexpr double kSeriesTauLimit = 1.0;

void check_nk(int n, int k) {
  if (n < 2) throw DomainError("expected SFS: n >= 2 required");
  if (k < 1 || k > n - 1) {
    throw DomainError("expected SFS: 1 <= k <= n-1 required");
  }
}

void check_rates(double theta, double p) {
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw DomainError("expected SFS: theta >= 0 required");
  }
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError("expected SFS: p > 0 required");
  }
}

// p E / theta in terms of y = tau/(1+tau) and 1-y; closed form.
double fixed_closed_unit(int n, int k, double y, double one_minus_y) {
  const double tau = y / one_minus_y;
  const double bracket = log_series_tail(k, y, one_minus_y);
  const double nk1 = n - k - 1.0;
  // (1+tau)^{k-1}/tau^{k+1} [2tau^2 - 2(n-2k-1)tau - (n-k-1)(k+1)]
  //   = y^{1-k} [2 - 2(n-2k-1)/tau - (n-k-1)(k+1)/tau^2]
  const double poly = 2.0 - 2.0 * (n - 2.0 * k - 1.0) / tau -
                      nk1 * (k + 1.0) / (tau * tau);
  return (n - 3.0 * k - 1.0) / k + nk1 * (k + 1.0) / (k * tau) +
         std::pow(y, 1 - k) * poly * bracket;
}

double fixed_series_unit(int n, int k, double y) {
  double q = 0.0;
  double r = 0.0;
  double ym = 1.0;
  for (long m = 0;; ++m) {
    const double a = static_cast<double>(k + m);
    const double r_term = (m + 1.0) * ym / (a * (a + 1.0));
    const double q_term = 2.0 * r_term / (a + 2.0);
    q += q_term;
    r += r_term;
    if (r_term <= kSeriesRelTol * r || ym == 0.0) break;
    ym *= y;
  }
  return y * ((n - k - 1.0) * q + 2.0 * r);
}

double fixed_unit(int n, int k, double y, double one_minus_y) {
  if (y <= 0.0) return 0.0;
  if (y <= kSeriesTauLimit * one_minus_y) return fixed_series_unit(n, k, y);
  return fixed_closed_unit(n, k, y, one_minus_y);
}

}  // namespace

double fixed_origin_bracket(int k, double tau) {
  if (!(tau > 0.0)) throw DomainError("fixed_origin_bracket: tau > 0");
  return log_series_tail(k, tau / (1.0 + tau), 1.0 / (1.0 + tau));
}

double fixed_origin_bracket_naive(int k, double tau) {
  if (!(tau > 0.0)) throw DomainError("fixed_origin_bracket_naive: tau > 0");
  return log_series_tail_naive(k, tau / (1.0 + tau), 1.0 / (1.0 + tau));
}

double expected_sfs_fixed_closed_form(int n, int k, double theta, double p,
                                      double t) {
  check_nk(n, k);
  check_rates(theta, p);
  if (!(t > 0.0)) throw DomainError("expected SFS: t > 0 required");
  const double tau = p * t;
  return theta * (fixed_closed_unit(n, k, tau / (1.0 + tau), 1.0 / (1.0 + tau)) / p);
}

double expected_sfs_fixed_series(int n, int k, double theta, double p,
                                 double t) {
  check_nk(n, k);
  check_rates(theta, p);
  if (!(t > 0.0)) throw DomainError("expected SFS: t > 0 required");
  const double tau = p * t;
  return theta * (fixed_series_unit(n, k, tau / (1.0 + tau)) / p);
}

double expected_sfs_fixed(int n, int k, double theta, double p, double t) {
  check_nk(n, k);
  check_rates(theta, p);
  if (!(t > 0.0)) throw DomainError("expected SFS: t > 0 required");
  const double tau = p * t;
  return theta * (fixed_unit(n, k, tau / (1.0 + tau), 1.0 / (1.0 + tau)) / p);
}

double expected_sfs_log_uniform(int n, int k, double theta, double p) {
  check_nk(n, k);
  check_rates(theta, p);
  if (k > n - 3) {
    throw DomainError("log-uniform closed form requires k <= n-3");
  }
  const double dn = n;
  const double dk = k;
  const double front = dn * (dn - 1.0) / ((dn - dk) * (dn - dk - 2.0));
  const double inner = (dn + dk - 2.0) / dk -
                       2.0 * (dn - 1.0) / (dn - dk - 1.0) *
                           (harmonic(n - 1) - harmonic(k));
  return theta * (front * inner / p);
}

ExtendedReal expected_sfs(const OriginCondition& regime, int n, int k,
                          double theta, double p) {
  check_nk(n, k);
  check_rates(theta, p);
  validate_origin(regime, n);
  if (const auto* f = std::get_if<FixedTime>(&regime)) {
    return ExtendedReal::finite(expected_sfs_fixed(n, k, theta, p, f->t));
  }
  if (std::holds_alternative<InfiniteTime>(regime)) {
    return ExtendedReal::infinity();
  }
  const int i = std::get<PowerPrior>(regime).i;
  if (i == 0) return ExtendedReal::finite(theta * (n / (k * p)));
  if (i == 1) {
    if (k <= n - 3) {
      return ExtendedReal::finite(expected_sfs_log_uniform(n, k, theta, p));
    }
    return ExtendedReal::finite(expected_sfs_quadrature(1, n, k, theta, p));
  }
  throw UnsupportedRegime("no closed-form expected SFS for prior index " +
                          std::to_string(i) +
                          "; use the quadrature evaluator");
}

double expected_sfs_quadrature(int i, int n, int k, double theta, double p) {
  check_nk(n, k);
  check_rates(theta, p);
  if (i < 0 || i >= n) {
    throw DomainError("expected_sfs_quadrature: 0 <= i < n required");
  }
  if (theta == 0.0) return 0.0;
  // h_n^(i)(t) dt = Beta(n-i, i+1) density in y = pt/(1+pt)
  const double log_norm = std::log(static_cast<double>(n)) + log_binomial(n - 1, i);
  auto f = [=](double y, double one_minus_y) {
    if (y <= 0.0) return 0.0;
    const double w = std::exp(log_norm + (n - i - 1) * std::log(y) +
                              i * std::log(one_minus_y));
    if (w == 0.0) return 0.0;
    return w * fixed_unit(n, k, y, one_minus_y);
  };
  return theta * (integrate_unit_interval(f, kQuadratureRelTol).value / p);
}

double expected_inter_coalescence_time(int i, int n, int j, double p) {
  if (j < 2 || j > n) {
    throw DomainError("inter-coalescence time: 2 <= j <= n required");
  }
  const OriginCondition regime = PowerPrior{i};
  const double upper = moment_order_stat(regime, n, j - 1, 1, p).value();
  const double lower = j == n ? 0.0 : moment_order_stat(regime, n, j, 1, p).value();
  return upper - lower;
}

double expected_sfs_via_branch_times(int i, int n, int k, double theta,
                                     double p) {
  check_nk(n, k);
  check_rates(theta, p);
  if (i != 0) {
    throw UnsupportedRegime(
        "branch-time route needs all first moments finite: only i = 0");
  }
  double sum = 0.0;
  for (int j = 2; j <= n - k + 1; ++j) {
    sum += binomial(j, 2) * binomial(n - j, k - 1) *
           expected_inter_coalescence_time(i, n, j, p);
  }
  return theta * (2.0 / k / binomial(n - 1, k) * sum);
}

double normalized_sfs_limit(int n) {
  if (n < 2) throw DomainError("normalized_sfs_limit: n >= 2 required");
  return 1.0 / (n - 1);
}

}  // namespace cppgen
