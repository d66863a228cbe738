#include "cppgen/forward_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cppgen/errors.hpp"
#include "cppgen/format.hpp"

namespace cppgen {

namespace {
constexpr std::uint64_t kMaxPopulationDraws = 1'000'000'000;
}

PopulationCPP simulate_population_cpp(double N, double t, RandomStream& rng) {
  if (!(N > 0.0) || !(t > 0.0)) {
    throw DomainError("simulate_population_cpp: N > 0 and t > 0 required");
  }
  PopulationCPP pop;
  while (true) {
    const double u = rng.uniform();
    const double h = u / (N * (1.0 - u));
    ++pop.pop_size;
    if (h > t) break;
    pop.depths.push_back(h);
    if (pop.pop_size >= kMaxPopulationDraws) {
      throw std::runtime_error("simulate_population_cpp: exceeded 1e9 draws");
    }
  }
  return pop;
}

std::uint64_t sample_geometric(double q, RandomStream& rng) {
  if (!(q > 0.0 && q <= 1.0)) {
    throw DomainError("sample_geometric: success probability in (0,1]");
  }
  if (q == 1.0) return 1;
  const double g = std::ceil(std::log(rng.uniform()) / std::log1p(-q));
  return g < 1.0 ? 1 : static_cast<std::uint64_t>(g);
}

double forward_acceptance_probability(double N, double p, double t, int n) {
  const double Nt = N * t;
  const double pt = p * t;
  return (1.0 + Nt) / Nt / (1.0 + pt) * std::pow(pt / (1.0 + pt), n);
}

Genealogy sample_conditioned_genealogy(double N, double p, double t, int n,
                                       RandomStream& rng,
                                       std::uint64_t max_attempts,
                                       AcceptanceTelemetry* telemetry) {
  if (n < 2) throw DomainError("sample_conditioned_genealogy: n >= 2 required");
  if (!(p > 0.0 && p < N)) {
    throw DomainError("sample_conditioned_genealogy: 0 < p < N required");
  }
  if (!(t > 0.0)) throw DomainError("sample_conditioned_genealogy: t > 0");
  const double q = p / N;
  std::vector<std::uint64_t> idx(static_cast<std::size_t>(n + 1));
  for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    if (telemetry != nullptr) ++telemetry->attempts;
    const PopulationCPP pop = simulate_population_cpp(N, t, rng);
    // idx[j-1] = I_j, the label (1-based) of the j-th sampled individual
    std::uint64_t pos = 0;
    for (auto& v : idx) {
      pos += sample_geometric(q, rng);
      v = pos;
    }
    const std::uint64_t I_n = idx[static_cast<std::size_t>(n - 1)];
    const std::uint64_t I_n1 = idx[static_cast<std::size_t>(n)];
    if (!(I_n <= pop.pop_size && pop.pop_size < I_n1)) continue;

    if (telemetry != nullptr) ++telemetry->accepted;
    // Population depth H_a (1-based, stored at a-1) separates individuals a
    // and a+1, so the divergence of I_j and I_{j+1} is max H_{I_j..I_{j+1}-1}.
    Genealogy g;
    g.origin = ExtendedReal::finite(t);
    g.depths.resize(static_cast<std::size_t>(n - 1));
    for (int j = 1; j <= n - 1; ++j) {
      const std::uint64_t lo = idx[static_cast<std::size_t>(j - 1)];
      const std::uint64_t hi = idx[static_cast<std::size_t>(j)];
      double m = 0.0;
      for (std::uint64_t a = lo; a < hi; ++a) {
        m = std::max(m, pop.depths[static_cast<std::size_t>(a - 1)]);
      }
      g.depths[static_cast<std::size_t>(j - 1)] = m;
    }
    return g;
  }
  const double rate = telemetry != nullptr ? telemetry->rate() : 0.0;
  throw AttemptsExhausted(
      "sample_conditioned_genealogy: no acceptance in " +
          std::to_string(max_attempts) +
          " attempts (empirical acceptance rate " + format_double(rate) +
          ", expected " +
          format_double(forward_acceptance_probability(N, p, t, n)) + ")",
      max_attempts, rate);
}

DivergenceMatrix::DivergenceMatrix(std::span<const double> depths)
    : size_(static_cast<int>(depths.size()) + 1),
      data_(static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_),
            0.0) {
  const auto n = static_cast<std::size_t>(size_);
  for (std::size_t i = 0; i < n; ++i) {
    double m = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      m = std::max(m, depths[j - 1]);
      data_[i * n + j] = m;
      data_[j * n + i] = m;
    }
  }
}

}  // namespace cppgen
