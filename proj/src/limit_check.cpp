#include "cppgen/limit_check.hpp"

#include <algorithm>
#include <functional>

#include "cppgen/errors.hpp"
#include "cppgen/parallel.hpp"
#include "cppgen/point_measure.hpp"
#include "cppgen/random_stream.hpp"
#include "cppgen/sampler.hpp"

namespace cppgen {

namespace {

// Offset separating the reference streams from the sampler streams.
constexpr std::uint64_t kReferenceStreamSalt = 0x9e3779b97f4a7c15ULL;

}  // namespace

LimitCheckReport empirical_limit_check(const LimitCheckConfig& config) {
  if (std::holds_alternative<FixedTime>(config.regime)) {
    throw UnsupportedRegime("limit check needs InfiniteTime or PowerPrior");
  }
  if (config.replicates < 1) throw DomainError("replicates >= 1 required");
  if (config.top_k < 1 || config.top_k > config.n - 1) {
    throw DomainError("limit check: 1 <= top_k <= n-1 required");
  }
  if (!(config.box_lo > 0.0) || !(config.box_lo < config.box_hi)) {
    throw DomainError("limit check: 0 < box_lo < box_hi required");
  }
  ModelParams params;
  params.n = config.n;
  params.alpha = config.alpha;
  params.p = config.n / config.alpha;
  params.validate();
  validate_origin(config.regime, config.n);

  const auto* prior = std::get_if<PowerPrior>(&config.regime);
  const int offset = prior ? prior->i : -1;  // T_{n,j} <-> e_{offset+j}
  const int k = config.top_k;
  const auto reps = static_cast<std::size_t>(config.replicates);

  std::vector<std::uint64_t> box(reps);
  std::vector<double> origin(reps);
  std::vector<std::vector<double>> order(static_cast<std::size_t>(k),
                                         std::vector<double>(reps));
  std::vector<std::vector<double>> reference(static_cast<std::size_t>(k),
                                             std::vector<double>(reps));

  parallel_for(reps, config.threads, [&](std::size_t r) {
    RandomStream rng = RandomStream::split(config.seed, r);
    const Genealogy g = sample_genealogy(params, config.regime, rng);
    std::uint64_t c = 0;
    for (double h : g.depths) {
      if (h > config.box_lo && h < config.box_hi) ++c;
    }
    box[r] = c;
    if (g.origin.is_finite()) origin[r] = g.origin.value();
    std::vector<double> d = g.depths;
    std::partial_sort(d.begin(), d.begin() + k, d.end(), std::greater<>());
    for (int j = 0; j < k; ++j) order[static_cast<std::size_t>(j)][r] = d[static_cast<std::size_t>(j)];

    RandomStream ref = RandomStream::split(config.seed ^ kReferenceStreamSalt, r);
    const std::vector<double> top = sample_top_atoms(config.alpha, offset + 1 + k, ref);
    for (int j = 0; j < k; ++j) {
      reference[static_cast<std::size_t>(j)][r] = top[static_cast<std::size_t>(offset + 1 + j)];
    }
  });

  LimitCheckReport report;
  report.box_expected = config.alpha * (1.0 / config.box_lo - 1.0 / config.box_hi);
  if (!prior) {
    double sum = 0.0;
    for (auto c : box) sum += static_cast<double>(c);
    report.box_mean = sum / static_cast<double>(reps);
    report.tests.push_back(
        {"box_count_vs_poisson", chi_square_poisson_test(box, report.box_expected)});
  } else {
    const int i = prior->i;
    const double alpha = config.alpha;
    report.tests.push_back(
        {"origin_vs_inv_gamma",
         ks_test(origin, [i, alpha](double t) { return inv_gamma_cdf(i, alpha, t); })});
  }
  for (int j = 0; j < k; ++j) {
    report.tests.push_back(
        {"T_n" + std::to_string(j + 1) + "_vs_e" + std::to_string(offset + 1 + j),
         two_sample_ks(order[static_cast<std::size_t>(j)],
                       reference[static_cast<std::size_t>(j)])});
  }
  return report;
}

}  // namespace cppgen
