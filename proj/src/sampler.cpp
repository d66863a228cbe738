#include "cppgen/sampler.hpp"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <functional>
#include <vector>

#include "cppgen/errors.hpp"
#include "cppgen/numeric.hpp"
#include "cppgen/quadrature.hpp"

namespace cppgen {

namespace {

constexpr double kMomentRelTol = 1e-8;

void check_posterior_args(int n, int i) {
  if (n < 1) throw DomainError("posterior: n >= 1 required");
  if (i < 0 || i >= n) throw DomainError("posterior: 0 <= i < n required");
}

void check_unit(double u, const char* who) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw DomainError(std::string(who) + ": u must lie in [0,1]");
  }
}

// log of the Beta(a, b) normalizing constant 1/B(a,b)
double log_inv_beta(int a, int b) {
  return std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
}

// E[(Y B / (1 - Y B))^m] with B ~ Beta(n-k, k), given 1 - Y accurately.
double fixed_moment_unit(int n, int k, int m, double y, double one_minus_y) {
  const int a = n - k;
  const int b = k;
  const double log_norm = log_inv_beta(a, b);
  auto f = [=](double s, double one_minus_s) {
    if (s <= 0.0) return 0.0;
    const double one_minus_ys = one_minus_y + y * one_minus_s;
    const double log_val = m * (std::log(y * s) - std::log(one_minus_ys)) +
                           (a - 1) * std::log(s) +
                           (b - 1) * std::log(one_minus_s) + log_norm;
    return std::exp(log_val);
  };
  return integrate_unit_interval(f, kMomentRelTol * 0.1).value;
}

}  // namespace

double quantile_depth_fixed_t(double u, double p, double t) {
  check_unit(u, "quantile_depth_fixed_t");
  if (!(p > 0.0) || !(t > 0.0)) {
    throw DomainError("quantile_depth_fixed_t: p > 0 and t > 0 required");
  }
  const double pt = p * t;
  const double v = u * pt / (1.0 + pt);
  // 1 - v computed as ((1 - u) pt + 1) / (1 + pt) to keep precision near u = 1
  const double one_minus_v = ((1.0 - u) * pt + 1.0) / (1.0 + pt);
  return std::min(v / (p * one_minus_v), t);
}

double quantile_depth_infinite(double u, double p) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw DomainError("quantile_depth_infinite: u must lie in [0,1)");
  }
  if (!(p > 0.0)) throw DomainError("quantile_depth_infinite: p > 0 required");
  return u / (p * (1.0 - u));
}

double posterior_density(int n, double p, int i, double t) {
  check_posterior_args(n, i);
  if (!(t >= 0.0)) throw DomainError("posterior_density: t >= 0 required");
  const double pt = p * t;
  const int power = n - i - 1;
  if (pt == 0.0) {
    return power == 0 ? p * n * binomial(n - 1, i) : 0.0;
  }
  if (std::isinf(pt)) return 0.0;
  const double log_h = std::log(p) + std::log(static_cast<double>(n)) +
                       log_binomial(n - 1, i) + power * std::log(pt) -
                       (n + 1) * std::log1p(pt);
  return std::exp(log_h);
}

double posterior_cdf(int n, double p, int i, double t) {
  check_posterior_args(n, i);
  if (!(t > 0.0)) return 0.0;
  if (std::isinf(t)) return 1.0;
  const double pt = p * t;
  return boost::math::ibeta(n - i, i + 1, pt / (1.0 + pt));
}

double origin_from_uniform(int n, double p, int i, double u) {
  check_posterior_args(n, i);
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("origin_from_uniform: u must lie in (0,1)");
  }
  double one_minus_y = 0.0;
  const double y = boost::math::ibeta_inv(n - i, i + 1, u, &one_minus_y);
  return y / (p * one_minus_y);
}

double sample_origin_posterior(int n, double p, int i, RandomStream& rng) {
  return origin_from_uniform(n, p, i, rng.uniform());
}

Genealogy genealogy_from_uniforms(const ModelParams& params,
                                  const OriginCondition& origin,
                                  std::span<const double> uniforms) {
  params.validate();
  validate_origin(origin, params.n);
  const auto depth_count = static_cast<std::size_t>(params.n - 1);
  const bool prior = std::holds_alternative<PowerPrior>(origin);
  const std::size_t needed = depth_count + (prior ? 1 : 0);
  if (uniforms.size() != needed) {
    throw DomainError("genealogy_from_uniforms: expected " +
                      std::to_string(needed) + " uniforms");
  }
  Genealogy g;
  g.depths.resize(depth_count);
  if (std::holds_alternative<InfiniteTime>(origin)) {
    g.origin = ExtendedReal::infinity();
    for (std::size_t q = 0; q < depth_count; ++q) {
      g.depths[q] = quantile_depth_infinite(uniforms[q], params.p);
    }
    return g;
  }
  double t = 0.0;
  std::span<const double> rest = uniforms;
  if (prior) {
    t = origin_from_uniform(params.n, params.p, std::get<PowerPrior>(origin).i,
                            uniforms[0]);
    rest = uniforms.subspan(1);
  } else {
    t = std::get<FixedTime>(origin).t;
  }
  g.origin = ExtendedReal::finite(t);
  for (std::size_t q = 0; q < depth_count; ++q) {
    g.depths[q] = quantile_depth_fixed_t(rest[q], params.p, t);
  }
  return g;
}

Genealogy sample_genealogy(const ModelParams& params,
                           const OriginCondition& origin, RandomStream& rng) {
  const bool prior = std::holds_alternative<PowerPrior>(origin);
  std::vector<double> u(static_cast<std::size_t>(params.n - 1 + (prior ? 1 : 0)));
  for (auto& x : u) x = rng.uniform();
  return genealogy_from_uniforms(params, origin, u);
}

double order_stat_density_fixed_t(int n, int k, double p, double t, double s) {
  if (k < 1 || k > n - 1) {
    throw DomainError("order_stat_density_fixed_t: 1 <= k <= n-1 required");
  }
  if (!(s >= 0.0)) throw DomainError("order_stat_density_fixed_t: s >= 0");
  if (s > t) return 0.0;
  const double ps = p * s;
  const double pt = p * t;
  if (ps == 0.0 && n - k - 1 > 0) return 0.0;
  if (ps == pt && k - 1 > 0) return 0.0;
  double log_f = std::log(p) + std::log(static_cast<double>(n - k)) +
                 log_binomial(n - 1, n - k) - n * std::log1p(ps) +
                 (n - k) * std::log1p(pt) - (n - 1) * std::log(pt);
  if (n - k - 1 > 0) log_f += (n - k - 1) * std::log(ps);
  if (k - 1 > 0) log_f += (k - 1) * std::log(pt - ps);
  return std::exp(log_f);
}

ExtendedReal moment_order_stat(const OriginCondition& regime, int n, int k,
                               int m, double p) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw DomainError("moment_order_stat: 1 <= k <= n-1 required");
  }
  if (m < 0) throw DomainError("moment_order_stat: m >= 0 required");
  if (!(p > 0.0)) throw DomainError("moment_order_stat: p > 0 required");
  validate_origin(regime, n);
  if (m == 0) return ExtendedReal::finite(1.0);

  if (std::holds_alternative<InfiniteTime>(regime)) {
    if (m > k - 1) return ExtendedReal::infinity();
    return ExtendedReal::finite(
        std::exp(log_binomial(n - k + m - 1, m) - log_binomial(k - 1, m)) /
        std::pow(p, m));
  }
  if (const auto* f = std::get_if<FixedTime>(&regime)) {
    const double pt = p * f->t;
    return ExtendedReal::finite(
        fixed_moment_unit(n, k, m, pt / (1.0 + pt), 1.0 / (1.0 + pt)) /
        std::pow(p, m));
  }
  const int i = std::get<PowerPrior>(regime).i;
  if (m > k + i) return ExtendedReal::infinity();
  if (i == 0) {
    return ExtendedReal::finite(
        std::exp(log_binomial(n - k + m - 1, m) - log_binomial(k, m)) /
        std::pow(p, m));
  }
  // T_{n,k} = U/(p(1-U)) with U = Y B, Y ~ Beta(n-i, i+1) the posterior of
  // pT/(1+pT) and B ~ Beta(n-k, k) independent. Integrating against the
  // density of U keeps every integrand free of interior peaks:
  //   g(u) = C D u^{n-k-1} (1-u)^{k+i} int_0^1 v^{k-1} (1-v)^i y^{-i} dv,
  //   y = u + (1-u) v.
  const double log_norm = log_inv_beta(n - i, i + 1) + log_inv_beta(n - k, k);
  auto outer = [=](double u, double one_minus_u) {
    if (u <= 0.0) return 0.0;
    auto inner = [=](double v, double one_minus_v) {
      if (v <= 0.0) return 0.0;
      const double y = u + one_minus_u * v;
      return std::exp((k - 1) * std::log(v) + i * (std::log(one_minus_v) - std::log(y)));
    };
    double inner_value = 0.0;
    double log_scale = 0.0;
    if (u >= 0.5 || k - 1 >= i) {
      inner_value = integrate_unit_interval(inner, kMomentRelTol * 0.1).value;
    } else {
      // When u is small and k <= i the integrand varies on the scale v ~ u
      // and grows like u^{k-i}. Substituting v = u r on [0, u] and
      // v = u e^z on [u, 1] gives two O(1) integrands without peaks.
      log_scale = (k - i) * std::log(u);
      const double log_u = std::log(u);
      inner_value = integrate_unit_interval(
                        [&](double r, double) {
                          if (r <= 0.0) return 0.0;
                          return std::exp((k - 1) * std::log(r) +
                                          i * (std::log1p(-u * r) -
                                               std::log1p(one_minus_u * r)));
                        },
                        kMomentRelTol * 0.1)
                        .value;
      inner_value += integrate_interval(
                         [&](double z) {
                           const double er = std::exp(z);
                           const double one_minus_v = -std::expm1(log_u + z);
                           if (one_minus_v <= 0.0) return 0.0;
                           return std::exp(k * z + i * (std::log(one_minus_v) -
                                                        std::log1p(one_minus_u * er)));
                         },
                         0.0, -log_u, kMomentRelTol * 0.1)
                         .value;
    }
    const double log_val = m * (std::log(u) - std::log(one_minus_u)) +
                           (n - k - 1) * std::log(u) +
                           (k + i) * std::log(one_minus_u) + log_norm + log_scale;
    return std::exp(log_val) * inner_value;
  };
  const double value = integrate_unit_interval(outer, kMomentRelTol).value;
  return ExtendedReal::finite(value / std::pow(p, m));
}

double order_statistic(std::span<const double> depths, int k) {
  if (k < 1 || k > static_cast<int>(depths.size())) {
    throw DomainError("order_statistic: 1 <= k <= size required");
  }
  std::vector<double> v(depths.begin(), depths.end());
  std::nth_element(v.begin(), v.begin() + (k - 1), v.end(), std::greater<>());
  return v[static_cast<std::size_t>(k - 1)];
}

}  // namespace cppgen
