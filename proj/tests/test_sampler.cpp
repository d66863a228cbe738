#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "cppgen/errors.hpp"
#include "cppgen/random_stream.hpp"
#include "cppgen/sampler.hpp"
#include "cppgen/stat_tests.hpp"
#include "oracles.hpp"

using namespace cppgen;

namespace {

ModelParams params_np(int n, double p) {
  ModelParams m;
  m.n = n;
  m.p = p;
  return m;
}

// Root of a monotone function by bisection on [lo, hi].
double bisect(const std::function<double(double)>& f, double target, double lo, double hi) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// CDF values of a density at sorted sample points, accumulated panel by panel
// with adaptive quadrature.
std::map<double, double> cumulative_cdf(std::vector<double> xs,
                                        const std::function<double(double)>& density) {
  std::sort(xs.begin(), xs.end());
  std::map<double, double> out;
  double acc = 0.0, prev = 0.0;
  for (double x : xs) {
    if (x > prev) acc += oracle::integrate(density, prev, x, 1e-10, 3);
    prev = std::max(prev, x);
    out[x] = acc;
  }
  return out;
}

}  // namespace

TEST(Quantile, FixedOriginExamples) {
  EXPECT_NEAR(quantile_depth_fixed_t(0.5, 1.0, 1.0), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(quantile_depth_fixed_t(1.0, 2.0, 3.0), 3.0);
  EXPECT_EQ(quantile_depth_fixed_t(0.0, 2.0, 3.0), 0.0);
  EXPECT_THROW(quantile_depth_fixed_t(1.5, 1.0, 1.0), DomainError);
  EXPECT_THROW(quantile_depth_fixed_t(-0.1, 1.0, 1.0), DomainError);
}

TEST(Quantile, InfiniteOriginExamples) {
  EXPECT_NEAR(quantile_depth_infinite(0.5, 1.0), 1.0, 1e-15);
  EXPECT_EQ(quantile_depth_infinite(0.0, 3.7), 0.0);
  EXPECT_NEAR(quantile_depth_infinite(0.9, 2.0), 4.5, 1e-13);
  EXPECT_THROW(quantile_depth_infinite(1.0, 1.0), DomainError);
}

TEST(Quantile, InvertsAnalyticCdf) {
  for (double p : {0.3, 1.0, 7.0}) {
    for (double t : {0.1, 2.0, 50.0}) {
      for (double u : {0.01, 0.2, 0.5, 0.8, 0.999}) {
        EXPECT_NEAR(oracle::depth_cdf_fixed(quantile_depth_fixed_t(u, p, t), p, t), u, 1e-12);
      }
    }
    for (double u : {0.01, 0.5, 0.999}) {
      EXPECT_NEAR(oracle::depth_cdf_infinite(quantile_depth_infinite(u, p), p), u, 1e-12);
    }
  }
}

TEST(Posterior, DensityExamples) {
  EXPECT_EQ(posterior_density(2, 1.0, 0, 0.0), 0.0);
  EXPECT_NEAR(posterior_density(2, 1.0, 1, 0.0), 2.0, 1e-15);
  for (double t : {0.1, 1.0, 4.5, 30.0}) {
    EXPECT_NEAR(posterior_density(10, 1.3, 2, t), oracle::posterior_density(10, 1.3, 2, t),
                1e-12 * oracle::posterior_density(10, 1.3, 2, t));
  }
  EXPECT_THROW(posterior_density(5, 1.0, 5, 1.0), DomainError);
}

TEST(Posterior, DensityNormalized) {
  for (auto [n, i] : {std::pair{5, 0}, {5, 1}, {5, 4}, {200, 3}}) {
    const double total = oracle::integrate(
        [n = n, i = i](double t) { return posterior_density(n, 1.0, i, t); }, 0.0, oracle::inf(),
        1e-11);
    EXPECT_NEAR(total, 1.0, 1e-8) << n << ' ' << i;
  }
}

TEST(Posterior, DensityModeMatchesFormula) {
  // argmax of h_10^(0) is pt = (n-i-1)/(i+2) = 4.5
  const double mode = bisect(
      [](double t) {
        const double h = 1e-6;
        return -(posterior_density(10, 1.0, 0, t + h) - posterior_density(10, 1.0, 0, t - h));
      },
      0.0, 1.0, 20.0);
  EXPECT_NEAR(mode, 4.5, 1e-5);
}

TEST(Posterior, CdfMatchesQuadrature) {
  for (auto [n, i] : {std::pair{3, 0}, {5, 2}, {10, 1}}) {
    for (double t : {0.2, 1.0, 5.0, 40.0}) {
      EXPECT_NEAR(posterior_cdf(n, 1.0, i, t), oracle::posterior_cdf(n, 1.0, i, t), 1e-10);
    }
  }
}

TEST(Posterior, BetaTransformMatchesNumericInversion) {
  for (auto [n, i] : {std::pair{3, 0}, {5, 2}, {10, 1}}) {
    for (double u : {0.05, 0.3, 0.5, 0.9, 0.99}) {
      const double t_ref = bisect(
          [n = n, i = i](double t) { return oracle::posterior_cdf(n, 1.0, i, t); }, u, 0.0, 1e6);
      EXPECT_NEAR(origin_from_uniform(n, 1.0, i, u), t_ref, 1e-7 * std::max(1.0, t_ref))
          << n << ' ' << i << ' ' << u;
    }
  }
  EXPECT_NEAR(origin_from_uniform(1, 1.0, 0, 0.5), 1.0, 1e-14);
}

TEST(Posterior, SamplesPassKs) {
  for (auto [n, i] : {std::pair{10, 0}, {10, 1}, {5, 4}}) {
    RandomStream rng(100 + static_cast<std::uint64_t>(n * 10 + i));
    std::vector<double> t(100000);
    for (auto& v : t) v = sample_origin_posterior(n, 1.0, i, rng);
    const auto cdf = cumulative_cdf(
        t, [n = n, i = i](double s) { return oracle::posterior_density(n, 1.0, i, s); });
    const TestResult r = ks_test(t, [&](double x) { return cdf.at(x); });
    EXPECT_GT(r.p_value, 0.01) << n << ' ' << i;
  }
}

TEST(SampleGenealogy, UniformBudgetAndDeterminism) {
  const auto params = params_np(6, 1.5);
  for (const OriginCondition origin :
       {OriginCondition{FixedTime{2.0}}, OriginCondition{InfiniteTime{}},
        OriginCondition{PowerPrior{2}}}) {
    const std::size_t used = std::holds_alternative<PowerPrior>(origin) ? 6 : 5;
    RandomStream a(77), b(77);
    const Genealogy g = sample_genealogy(params, origin, a);
    std::vector<double> u(used);
    for (auto& v : u) v = b.uniform();
    const Genealogy h = genealogy_from_uniforms(params, origin, u);
    EXPECT_EQ(g.depths, h.depths);
    EXPECT_EQ(g.origin, h.origin);
    EXPECT_EQ(a.uniform(), b.uniform()) << "stream consumption differs";
    EXPECT_EQ(g.depths.size(), 5u);
  }
}

TEST(SampleGenealogy, InvariantsPerRegime) {
  const auto params = params_np(8, 1.0);
  RandomStream rng(5);
  for (int r = 0; r < 2000; ++r) {
    const Genealogy f = sample_genealogy(params, FixedTime{2.0}, rng);
    EXPECT_EQ(f.origin.value(), 2.0);
    for (double h : f.depths) {
      EXPECT_GT(h, 0.0);
      EXPECT_LE(h, 2.0);
    }
    const Genealogy inf = sample_genealogy(params, InfiniteTime{}, rng);
    EXPECT_TRUE(inf.origin.is_infinite());
    const Genealogy pr = sample_genealogy(params, PowerPrior{1}, rng);
    for (double h : pr.depths) EXPECT_LE(h, pr.origin.value());
  }
}

TEST(SampleGenealogy, TwoSampleFixedOriginKs) {
  const auto params = params_np(2, 1.0);
  RandomStream rng(8);
  std::vector<double> d(50000);
  for (auto& v : d) v = sample_genealogy(params, FixedTime{3.0}, rng).depths[0];
  EXPECT_GT(ks_test(d, [](double x) { return oracle::depth_cdf_fixed(x, 1.0, 3.0); }).p_value,
            0.01);
}

TEST(SampleGenealogy, InfiniteOriginMedianIsOne) {
  const auto params = params_np(2, 1.0);
  RandomStream rng(9);
  std::vector<double> d(50000);
  for (auto& v : d) v = sample_genealogy(params, InfiniteTime{}, rng).depths[0];
  std::nth_element(d.begin(), d.begin() + 25000, d.end());
  EXPECT_NEAR(d[25000], 1.0, 0.03);
  EXPECT_GT(ks_test(d, [](double x) { return oracle::depth_cdf_infinite(x, 1.0); }).p_value, 0.01);
}

TEST(SampleGenealogy, UniformPriorDepthMarginalMatchesMixture) {
  const int n = 5;
  const auto params = params_np(n, 1.0);
  RandomStream rng(10);
  std::vector<double> d(5000);
  for (auto& v : d) v = sample_genealogy(params, PowerPrior{0}, rng).depths[2];
  auto mixture = [n](double x) {
    return oracle::integrate(
        [=](double t) {
          return t <= 0.0 ? 0.0
                          : oracle::depth_cdf_fixed(x, 1.0, t) * oracle::posterior_density(n, 1.0, 0, t);
        },
        0.0, oracle::inf(), 1e-9);
  };
  EXPECT_GT(ks_test(d, mixture).p_value, 0.01);
}

TEST(SampleGenealogy, FixedOriginDepthsIndependent) {
  const auto params = params_np(4, 1.0);
  const double t = 2.0;
  RandomStream rng(11);
  const std::size_t reps = 100000;
  std::vector<std::uint64_t> b1(reps), b2(reps), b3(reps);
  auto bin = [t](double x) {
    return static_cast<std::uint64_t>(std::min(9.0, std::floor(10.0 * oracle::depth_cdf_fixed(x, 1.0, t))));
  };
  for (std::size_t r = 0; r < reps; ++r) {
    const Genealogy g = sample_genealogy(params, FixedTime{t}, rng);
    b1[r] = bin(g.depths[0]);
    b2[r] = bin(g.depths[1]);
    b3[r] = bin(g.depths[2]);
  }
  // three pairs, Bonferroni at 0.01
  EXPECT_GT(chi_square_independence(b1, b2).p_value, 0.01 / 3);
  EXPECT_GT(chi_square_independence(b1, b3).p_value, 0.01 / 3);
  EXPECT_GT(chi_square_independence(b2, b3).p_value, 0.01 / 3);
}

TEST(OrderStatDensity, SupportReductionAndNormalization) {
  EXPECT_EQ(order_stat_density_fixed_t(6, 3, 1.0, 2.0, 2.5), 0.0);
  // n = 2: the single-depth density p/(1+ps)^2 (1+pt)/(pt)
  for (double s : {0.1, 0.7, 1.9}) {
    EXPECT_NEAR(order_stat_density_fixed_t(2, 1, 1.0, 2.0, s), 1.0 / std::pow(1.0 + s, 2) * 3.0 / 2.0,
                1e-14);
  }
  const double total = oracle::integrate(
      [](double s) { return order_stat_density_fixed_t(6, 3, 1.0, 2.0, s); }, 0.0, 2.0);
  EXPECT_NEAR(total, 1.0, 1e-10);
  EXPECT_THROW(order_stat_density_fixed_t(6, 6, 1.0, 2.0, 1.0), DomainError);
}

TEST(OrderStatDensity, MatchesEmpiricalOrderStatistic) {
  const auto params = params_np(6, 1.0);
  RandomStream rng(12);
  std::vector<double> x(20000);
  for (auto& v : x) v = order_statistic(sample_genealogy(params, FixedTime{2.0}, rng).depths, 3);
  const auto cdf = cumulative_cdf(
      x, [](double s) { return order_stat_density_fixed_t(6, 3, 1.0, 2.0, s); });
  EXPECT_GT(ks_test(x, [&](double v) { return cdf.at(v); }).p_value, 0.01);
}

TEST(Moments, DocumentedValues) {
  EXPECT_NEAR(moment_order_stat(InfiniteTime{}, 10, 2, 1, 1.0).value(), 8.0, 1e-12);
  EXPECT_TRUE(moment_order_stat(InfiniteTime{}, 10, 1, 1, 1.0).is_infinite());
  EXPECT_NEAR(moment_order_stat(PowerPrior{0}, 10, 1, 1, 1.0).value(), 9.0, 1e-12);
  EXPECT_NEAR(moment_order_stat(InfiniteTime{}, 10, 4, 1, 1.0).value(), 2.0, 1e-12);
  EXPECT_EQ(moment_order_stat(InfiniteTime{}, 10, 4, 0, 1.0).value(), 1.0);
  EXPECT_THROW(moment_order_stat(InfiniteTime{}, 10, 10, 1, 1.0), DomainError);
}

TEST(Moments, FinitenessBoundaries) {
  for (int k = 1; k <= 9; ++k) {
    for (int m = 1; m <= 12; ++m) {
      EXPECT_EQ(moment_order_stat(InfiniteTime{}, 10, k, m, 1.0).is_finite(), m <= k - 1);
      EXPECT_EQ(moment_order_stat(PowerPrior{0}, 10, k, m, 1.0).is_finite(), m <= k);
    }
  }
  for (int k = 1; k <= 4; ++k) {
    for (int m = k + 1; m <= k + 3; ++m) {
      EXPECT_EQ(moment_order_stat(PowerPrior{2}, 6, k, m, 1.0).is_finite(), m <= k + 2);
    }
  }
}

TEST(Moments, ShiftIdentityUniformPriorVsInfiniteOrigin) {
  // E_n^(0)(T_{n,k}^m) = E_{n+1}^(inf)(T_{n+1,k+1}^m) where finite
  for (int n = 3; n <= 15; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      for (int m = 1; m <= k; ++m) {
        const double a = moment_order_stat(PowerPrior{0}, n, k, m, 1.7).value();
        const double b = moment_order_stat(InfiniteTime{}, n + 1, k + 1, m, 1.7).value();
        EXPECT_NEAR(a, b, 1e-12 * a) << n << ' ' << k << ' ' << m;
      }
    }
  }
}

TEST(Moments, FixedOriginMatchesDensityQuadrature) {
  for (auto [k, m] : {std::pair{1, 1}, {3, 2}, {5, 1}}) {
    const double ref = oracle::integrate(
        [k = k, m = m](double s) { return std::pow(s, m) * order_stat_density_fixed_t(6, k, 1.0, 2.0, s); },
        0.0, 2.0);
    EXPECT_NEAR(moment_order_stat(FixedTime{2.0}, 6, k, m, 1.0).value(), ref, 1e-8 * ref);
  }
}

TEST(Moments, PriorMixtureMatchesNestedQuadrature) {
  const int n = 6;
  auto fixed_moment = [n](int k, int m, double t) {
    return oracle::integrate(
        [=](double s) { return std::pow(s, m) * order_stat_density_fixed_t(n, k, 1.0, t, s); }, 0.0, t,
        1e-10);
  };
  for (auto [i, k, m] : {std::tuple{1, 1, 1}, {1, 2, 3}, {2, 1, 2}, {0, 2, 2}}) {
    const double ref = oracle::integrate(
        [&, i = i, k = k, m = m](double t) {
          return t <= 0.0 ? 0.0 : fixed_moment(k, m, t) * oracle::posterior_density(n, 1.0, i, t);
        },
        0.0, oracle::inf(), 1e-8);
    const double v = moment_order_stat(PowerPrior{i}, n, k, m, 1.0).value();
    EXPECT_NEAR(v, ref, 1e-6 * ref) << i << ' ' << k << ' ' << m;
  }
}

TEST(Moments, MonteCarloWhereVarianceFinite) {
  const int n = 10;
  const auto params = params_np(n, 1.0);
  for (auto [k, m] : {std::pair{4, 1}, {5, 2}, {7, 3}}) {
    RandomStream rng(static_cast<std::uint64_t>(1000 + 10 * k + m));
    const int reps = 100000;
    double s = 0.0, ss = 0.0;
    for (int r = 0; r < reps; ++r) {
      const double x = std::pow(order_statistic(sample_genealogy(params, InfiniteTime{}, rng).depths, k), m);
      s += x;
      ss += x * x;
    }
    const double mean = s / reps;
    const double se = std::sqrt((ss / reps - mean * mean) / (reps - 1));
    const double f = moment_order_stat(InfiniteTime{}, n, k, m, 1.0).value();
    EXPECT_LT(std::fabs(mean - f), 4.0 * se) << k << ' ' << m;
  }
}

TEST(OrderStatistic, KthLargest) {
  const std::vector<double> d = {0.5, 3.0, 1.0, 2.0};
  EXPECT_EQ(order_statistic(d, 1), 3.0);
  EXPECT_EQ(order_statistic(d, 2), 2.0);
  EXPECT_EQ(order_statistic(d, 4), 0.5);
  EXPECT_THROW(order_statistic(d, 5), DomainError);
}
