#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cppgen/model.hpp"
#include "cppgen/random_stream.hpp"

namespace cppgen {

// Independent forward construction of the conditioned sample genealogy:
// population node depths, Bernoulli(p/N) sampling encoded by geometric gaps,
// and rejection on the sample size. Used as ground truth for the sampler.

/// Coalescent point process of a whole population founded at time t.
/// depths holds the draws at or below t; pop_size counts every draw
/// including the stopping draw above t, and equals the number of extant
/// individuals.
struct PopulationCPP {
  std::vector<double> depths;
  std::uint64_t pop_size = 0;
};

/// Draws H = U / (N (1 - U)) until one exceeds t. Throws std::runtime_error
/// past 10^9 draws.
PopulationCPP simulate_population_cpp(double N, double t, RandomStream& rng);

/// Geometric number of trials to first success, by inversion.
std::uint64_t sample_geometric(double success_probability, RandomStream& rng);

/// Running acceptance counts for the rejection sampler.
struct AcceptanceTelemetry {
  std::uint64_t attempts = 0;
  std::uint64_t accepted = 0;
  double rate() const {
    return attempts == 0 ? 0.0
                         : static_cast<double>(accepted) /
                               static_cast<double>(attempts);
  }
};

inline constexpr std::uint64_t kDefaultMaxAttempts = 10'000'000;

/// Repeats population simulation plus sampling until exactly n individuals
/// are sampled, then reads off the sample's node depths as block maxima.
/// Throws AttemptsExhausted after max_attempts rejections.
Genealogy sample_conditioned_genealogy(
    double N, double p, double t, int n, RandomStream& rng,
    std::uint64_t max_attempts = kDefaultMaxAttempts,
    AcceptanceTelemetry* telemetry = nullptr);

/// Probability that one attempt is accepted:
/// ((1+Nt)/(Nt)) (1/(1+pt)) (pt/(1+pt))^n.
double forward_acceptance_probability(double N, double p, double t, int n);

/// Pairwise divergence times of the sample: D(i,j) = max(depths[i..j-1])
/// for i < j, symmetric, zero diagonal.
class DivergenceMatrix {
 public:
  explicit DivergenceMatrix(std::span<const double> depths);

  int size() const { return size_; }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
                 static_cast<std::size_t>(j)];
  }

 private:
  int size_;
  std::vector<double> data_;
};

inline DivergenceMatrix divergence_matrix(std::span<const double> depths) {
  return DivergenceMatrix(depths);
}

}  // namespace cppgen
