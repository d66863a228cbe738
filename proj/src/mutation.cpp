#include "cppgen/mutation.hpp"

#include <algorithm>
#include <cmath>

#include "cppgen/errors.hpp"

namespace cppgen {

MutationPlacement place_mutations(const Genealogy& g, double theta,
                                  RandomStream& rng) {
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw DomainError("place_mutations: theta >= 0 required");
  }
  MutationPlacement out;
  out.root_branch_skipped = g.origin.is_infinite();
  if (theta == 0.0) return out;
  const int n = g.sample_size();
  for (int j = out.root_branch_skipped ? 1 : 0; j < n; ++j) {
    const double length = g.branch_length(j);
    const std::uint64_t count = rng.poisson(theta * length);
    const std::size_t begin = out.events.size();
    for (std::uint64_t c = 0; c < count; ++c) {
      out.events.push_back({j, length * rng.uniform()});
    }
    std::sort(out.events.begin() + static_cast<std::ptrdiff_t>(begin),
              out.events.end(),
              [](const MutationEvent& a, const MutationEvent& b) {
                return a.time < b.time;
              });
  }
  return out;
}

int carrier_count(const Genealogy& g, const MutationEvent& ev) {
  const int n = g.sample_size();
  if (ev.branch < 0 || ev.branch >= n) {
    throw DomainError("carrier_count: branch out of range");
  }
  int r = 1;
  while (ev.branch + r <= n - 1 &&
         g.depths[static_cast<std::size_t>(ev.branch + r - 1)] < ev.time) {
    ++r;
  }
  return r;
}

SiteFrequencySpectrum compute_sfs(const Genealogy& g,
                                  const std::vector<MutationEvent>& events) {
  const int n = g.sample_size();
  SiteFrequencySpectrum sfs;
  sfs.xi.assign(static_cast<std::size_t>(n - 1), 0);
  for (const auto& ev : events) {
    const int k = carrier_count(g, ev);
    if (k == n) {
      ++sfs.fixed;
    } else {
      ++sfs.xi[static_cast<std::size_t>(k - 1)];
      ++sfs.S;
    }
  }
  return sfs;
}

}  // namespace cppgen
