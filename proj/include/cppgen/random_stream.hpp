#pragma once

#include <cstdint>
#include <random>

namespace cppgen {

/// Deterministic source of uniforms on the open interval (0,1).
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the
/// standard; uniforms are built from the top 53 bits as (m + 1/2) 2^-53, so a
/// given seed yields the same doubles on every conforming platform.
///
/// Independent streams are derived with split(): the child seed is
/// splitmix64(root ^ splitmix64(index + 0x9E3779B97F4A7C15)). Replicate r of
/// a run seeded with s uses split(s, r), so results do not depend on how
/// replicates are scheduled across threads.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  static RandomStream split(std::uint64_t root_seed, std::uint64_t index);

  /// Uniform on (0,1), never exactly 0 or 1.
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Exponential with the given rate, by inversion.
  double exponential(double rate);

  /// Poisson(mean) by inversion of one uniform per chunk of mean <= 30;
  /// larger means are summed from independent chunks.
  std::uint64_t poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace cppgen
