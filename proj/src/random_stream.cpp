#include "cppgen/random_stream.hpp"

#include <boost/random/poisson_distribution.hpp>
#include <cmath>

#include "cppgen/errors.hpp"

namespace cppgen {

namespace {

constexpr double kPoissonChunk = 30.0;
// Above this mean, chunked inversion costs O(mean); switch to the
// transformed-rejection sampler (PTRS) of Boost.Random.
constexpr double kPoissonInversionLimit = 1000.0;

std::uint64_t poisson_inversion(double mean, double u) {
  double pk = std::exp(-mean);
  double cdf = pk;
  std::uint64_t k = 0;
  while (u > cdf) {
    ++k;
    pk *= mean / static_cast<double>(k);
    const double next = cdf + pk;
    if (next == cdf) break;  // remaining mass below double resolution
    cdf = next;
  }
  return k;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RandomStream RandomStream::split(std::uint64_t root_seed, std::uint64_t index) {
  return RandomStream(splitmix64(root_seed ^ splitmix64(index + 0x9E3779B97F4A7C15ULL)));
}

double RandomStream::exponential(double rate) {
  return -std::log(uniform()) / rate;
}

std::uint64_t RandomStream::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw DomainError("poisson: finite mean >= 0 required");
  }
  if (mean > kPoissonInversionLimit) {
    boost::random::poisson_distribution<std::uint64_t, double> dist(mean);
    return dist(engine_);
  }
  std::uint64_t total = 0;
  double remaining = mean;
  while (remaining > 0.0) {
    const double chunk = remaining > kPoissonChunk ? kPoissonChunk : remaining;
    total += poisson_inversion(chunk, uniform());
    remaining -= chunk;
  }
  return total;
}

}  // namespace cppgen
