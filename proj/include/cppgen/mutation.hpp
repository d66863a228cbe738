#pragma once

#include <cstdint>
#include <vector>

#include "cppgen/model.hpp"
#include "cppgen/random_stream.hpp"

namespace cppgen {

/// A mutation on branch j at backward time `time` < length of branch j.
struct MutationEvent {
  int branch = 0;
  double time = 0.0;
};

struct MutationPlacement {
  std::vector<MutationEvent> events;
  /// Set when the origin is infinite: branch 0 carries a.s. infinitely many
  /// mutations, so it is skipped and mutations shared by all n are undefined.
  bool root_branch_skipped = false;
};

/// Poisson(theta * L_j) events on each finite branch j, at times uniform on
/// (0, L_j), sorted by branch then time.
MutationPlacement place_mutations(const Genealogy& g, double theta,
                                  RandomStream& rng);

/// Number of individuals carrying the event: j, j+1, ... as long as the
/// node depths to the right of j stay below the mutation time.
int carrier_count(const Genealogy& g, const MutationEvent& ev);

/// Tally of carrier counts; mutations carried by all n go to `fixed`.
SiteFrequencySpectrum compute_sfs(const Genealogy& g,
                                  const std::vector<MutationEvent>& events);

}  // namespace cppgen
