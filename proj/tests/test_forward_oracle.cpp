#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "cppgen/errors.hpp"
#include "cppgen/forward_oracle.hpp"
#include "cppgen/random_stream.hpp"
#include "cppgen/sampler.hpp"
#include "cppgen/stat_tests.hpp"
#include "oracles.hpp"

using namespace cppgen;

namespace {

// k-th largest depth of each genealogy in a batch from the forward oracle.
std::vector<double> forward_order_stats(double N, double p, double t, int n, int k,
                                        int count, std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int r = 0; r < count; ++r) {
    const Genealogy g = sample_conditioned_genealogy(N, p, t, n, rng);
    out.push_back(order_statistic(g.depths, k));
  }
  return out;
}

}  // namespace

TEST(PopulationCpp, DepthsStayBelowOrigin) {
  RandomStream rng(1);
  for (int r = 0; r < 2000; ++r) {
    const PopulationCPP pop = simulate_population_cpp(3.0, 1.5, rng);
    ASSERT_EQ(pop.depths.size() + 1, pop.pop_size);
    for (double h : pop.depths) {
      EXPECT_GT(h, 0.0);
      EXPECT_LE(h, 1.5);
    }
  }
}

TEST(PopulationCpp, MeanSizeAndSingletonProbability) {
  const double N = 2.0, t = 3.0;
  const int runs = 100000;
  RandomStream rng(2);
  double sum = 0.0, sum_sq = 0.0;
  int singletons = 0;
  for (int r = 0; r < runs; ++r) {
    const double size = static_cast<double>(simulate_population_cpp(N, t, rng).pop_size);
    sum += size;
    sum_sq += size * size;
    if (size == 1.0) ++singletons;
  }
  const double mean = sum / runs;
  const double se = std::sqrt((sum_sq / runs - mean * mean) / runs);
  EXPECT_LT(std::abs(mean - (1.0 + N * t)), 4.0 * se);

  const double q = 1.0 / (1.0 + N * t);
  const double q_hat = static_cast<double>(singletons) / runs;
  EXPECT_LT(std::abs(q_hat - q), 4.0 * std::sqrt(q * (1.0 - q) / runs));
}

TEST(Geometric, MeanAndSupport) {
  RandomStream rng(3);
  const double s = 0.2;
  const int runs = 100000;
  double sum = 0.0;
  for (int r = 0; r < runs; ++r) {
    const std::uint64_t g = sample_geometric(s, rng);
    ASSERT_GE(g, 1u);
    sum += static_cast<double>(g);
  }
  const double se = std::sqrt((1.0 - s) / (s * s) / runs);
  EXPECT_LT(std::abs(sum / runs - 1.0 / s), 4.0 * se);
  EXPECT_EQ(sample_geometric(1.0, rng), 1u);
}

TEST(ForwardOracle, AcceptanceProbabilityExample) {
  EXPECT_NEAR(forward_acceptance_probability(5.0, 1.0, 2.0, 4),
              (11.0 / 10.0) * (1.0 / 3.0) * std::pow(2.0 / 3.0, 4), 1e-15);
  EXPECT_NEAR(forward_acceptance_probability(5.0, 1.0, 2.0, 4), 0.0724, 5e-5);
}

TEST(ForwardOracle, EmpiricalAcceptanceRateMatches) {
  RandomStream rng(4);
  AcceptanceTelemetry tel;
  for (int r = 0; r < 3000; ++r) {
    sample_conditioned_genealogy(5.0, 1.0, 2.0, 4, rng, kDefaultMaxAttempts, &tel);
  }
  ASSERT_EQ(tel.accepted, 3000u);
  const double q = forward_acceptance_probability(5.0, 1.0, 2.0, 4);
  const double attempts = static_cast<double>(tel.attempts);
  EXPECT_LT(std::abs(tel.rate() - q), 4.0 * std::sqrt(q * (1.0 - q) / attempts));
}

TEST(ForwardOracle, GenealogyShape) {
  RandomStream rng(5);
  for (int r = 0; r < 200; ++r) {
    const Genealogy g = sample_conditioned_genealogy(5.0, 1.0, 2.0, 4, rng);
    ASSERT_EQ(g.sample_size(), 4);
    ASSERT_TRUE(g.origin.is_finite());
    EXPECT_EQ(g.origin.value(), 2.0);
    for (double h : g.depths) {
      EXPECT_GT(h, 0.0);
      EXPECT_LE(h, 2.0);
    }
  }
}

TEST(ForwardOracle, AttemptsExhaustedReportsRate) {
  RandomStream rng(6);
  // n = 40 at pt = 0.1 is accepted with probability ~1e-43.
  try {
    sample_conditioned_genealogy(5.0, 1.0, 0.1, 40, rng, 1000);
    FAIL() << "expected AttemptsExhausted";
  } catch (const AttemptsExhausted& e) {
    EXPECT_NE(std::string(e.what()).find("acceptance rate"), std::string::npos);
  }
}

TEST(ForwardOracle, RejectsInvalidParameters) {
  RandomStream rng(7);
  EXPECT_THROW(sample_conditioned_genealogy(1.0, 2.0, 1.0, 3, rng), DomainError);
  EXPECT_THROW(sample_conditioned_genealogy(5.0, 1.0, 1.0, 1, rng), DomainError);
  EXPECT_THROW(sample_conditioned_genealogy(5.0, 1.0, -1.0, 3, rng), DomainError);
}

TEST(ForwardOracle, MarginalsMatchFixedOriginLaw) {
  // Pooled node depths are i.i.d. with the fixed-origin law.
  RandomStream rng(8);
  std::vector<double> pooled;
  for (int r = 0; r < 2000; ++r) {
    const Genealogy g = sample_conditioned_genealogy(5.0, 1.0, 2.0, 4, rng);
    pooled.insert(pooled.end(), g.depths.begin(), g.depths.end());
  }
  const TestResult res =
      ks_test(pooled, [](double x) { return oracle::depth_cdf_fixed(x, 1.0, 2.0); });
  EXPECT_GT(res.p_value, 0.01);
}

TEST(ForwardOracle, OrderStatisticsMatchExactSampler) {
  const int count = 5000;
  ModelParams params;
  params.n = 4;
  params.p = 1.0;
  for (int k = 1; k <= 3; ++k) {
    const std::vector<double> fwd = forward_order_stats(5.0, 1.0, 2.0, 4, k, count, 100 + k);
    RandomStream rng(200 + k);
    std::vector<double> exact;
    for (int r = 0; r < count; ++r) {
      exact.push_back(order_statistic(sample_genealogy(params, FixedTime{2.0}, rng).depths, k));
    }
    EXPECT_GT(two_sample_ks(fwd, exact).p_value, 0.01 / 3.0) << "k=" << k;
  }
}

TEST(ForwardOracle, IndependentOfN) {
  const int count = 3000;
  std::vector<std::vector<double>> tmrca;
  for (double N : {2.0, 5.0, 20.0}) {
    tmrca.push_back(forward_order_stats(N, 1.0, 2.0, 4, 1, count, static_cast<std::uint64_t>(N * 10)));
  }
  EXPECT_GT(two_sample_ks(tmrca[0], tmrca[1]).p_value, 0.01);
  EXPECT_GT(two_sample_ks(tmrca[0], tmrca[2]).p_value, 0.01);
  EXPECT_GT(two_sample_ks(tmrca[1], tmrca[2]).p_value, 0.01);
}

TEST(DivergenceMatrix, Example) {
  const std::vector<double> depths{2.0, 1.0};
  const DivergenceMatrix d(depths);
  ASSERT_EQ(d.size(), 3);
  EXPECT_EQ(d(0, 2), 2.0);
  EXPECT_EQ(d(1, 2), 1.0);
  EXPECT_EQ(d(0, 1), 2.0);
  EXPECT_EQ(d(2, 2), 0.0);
  EXPECT_EQ(d(2, 0), 2.0);
}

TEST(DivergenceMatrix, BruteForceAndUltrametric) {
  RandomStream rng(9);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> depths(5);
    for (double& h : depths) h = rng.uniform();
    const DivergenceMatrix d(depths);
    ASSERT_EQ(d.size(), 6);
    for (int i = 0; i < 6; ++i) {
      EXPECT_EQ(d(i, i), 0.0);
      for (int j = i + 1; j < 6; ++j) {
        double brute = 0.0;
        for (int q = i; q < j; ++q) brute = std::max(brute, depths[static_cast<std::size_t>(q)]);
        EXPECT_EQ(d(i, j), brute);
        EXPECT_EQ(d(j, i), brute);
      }
    }
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) EXPECT_LE(d(i, k), std::max(d(i, j), d(j, k)));
  }
}
