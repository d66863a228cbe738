// cppgen: simulate sample genealogies of a critical birth-death population,
// tabulate expected site frequency spectra, emit figure data and run the
// acceptance suite.
//
// CSV columns
//   simulate:             replicate,origin,H1,...,H{n-1}
//   simulate --mutations: replicate,branch,time,carriers
//   sfs --mode expected:  k,expected,method
//   sfs --mode mc:        k,mean,se,root_branch_skipped
//   fig:                  series,k,value
// verify writes a JSON report: [{criterion, statistic, p_value, tolerance, pass, ...}]

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cppgen/errors.hpp"
#include "cppgen/expected_sfs.hpp"
#include "cppgen/format.hpp"
#include "cppgen/forward_oracle.hpp"
#include "cppgen/model.hpp"
#include "cppgen/mutation.hpp"
#include "cppgen/parallel.hpp"
#include "cppgen/random_stream.hpp"
#include "cppgen/sampler.hpp"
#include "cppgen/verify.hpp"

using namespace cppgen;

namespace {

// Output sink: a file when a path is given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    if (file_) {
      file_->close();
      if (!*file_) throw std::runtime_error("write failed");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct Common {
  int n = 10;
  double p = 1.0;
  double theta = 1.0;
  std::string origin = "fixed:1";
  std::optional<int> prior;
  std::uint64_t seed = 0;
  int replicates = 1000;
  std::optional<int> threads;
  std::string output;
};

OriginCondition resolve_origin(const Common& c) {
  if (c.prior) return PowerPrior{*c.prior};
  return parse_origin(c.origin);
}

ModelParams make_params(const Common& c) {
  ModelParams params;
  params.n = c.n;
  params.p = c.p;
  params.theta = c.theta;
  params.validate();
  return params;
}

// ---------------------------------------------------------------- simulate

struct SimulateConfig {
  Common common;
  std::string engine = "exact";
  double N = 5.0;
  std::string mutations;
};

int cmd_simulate(const SimulateConfig& cfg) {
  ModelParams params = make_params(cfg.common);
  const OriginCondition origin = resolve_origin(cfg.common);
  validate_origin(origin, params.n);
  const bool forward = cfg.engine == "forward";
  if (forward) {
    params.N = cfg.N;
    params.validate_for_forward();
    if (!std::holds_alternative<FixedTime>(origin)) {
      throw DomainError("the forward engine needs a fixed origin (fixed:<t>)");
    }
  }
  const bool with_mutations = !cfg.mutations.empty();
  const auto reps = static_cast<std::size_t>(cfg.common.replicates);
  std::vector<Genealogy> genealogies(reps);
  std::vector<MutationPlacement> placements(with_mutations ? reps : 0);
  const int threads = resolve_threads(cfg.common.threads);
  parallel_for(reps, threads, [&](std::size_t r) {
    RandomStream rng = RandomStream::split(cfg.common.seed, r);
    if (forward) {
      genealogies[r] = sample_conditioned_genealogy(
          params.N, params.p, std::get<FixedTime>(origin).t, params.n, rng);
    } else {
      genealogies[r] = sample_genealogy(params, origin, rng);
    }
    if (with_mutations) placements[r] = place_mutations(genealogies[r], params.theta, rng);
  });

  Output out(cfg.common.output);
  auto& os = out.stream();
  os << "replicate,origin";
  for (int j = 1; j < params.n; ++j) os << ",H" << j;
  os << '\n';
  for (std::size_t r = 0; r < reps; ++r) {
    os << r << ',' << to_string(genealogies[r].origin);
    for (double h : genealogies[r].depths) os << ',' << format_double(h);
    os << '\n';
  }
  out.close();

  if (with_mutations) {
    Output mut(cfg.mutations);
    auto& ms = mut.stream();
    ms << "replicate,branch,time,carriers\n";
    for (std::size_t r = 0; r < reps; ++r) {
      for (const auto& ev : placements[r].events) {
        ms << r << ',' << ev.branch << ',' << format_double(ev.time) << ','
           << carrier_count(genealogies[r], ev) << '\n';
      }
    }
    mut.close();
  }
  return 0;
}

// --------------------------------------------------------------------- sfs

struct SfsConfig {
  Common common;
  std::string mode = "expected";
};

int cmd_sfs(const SfsConfig& cfg) {
  const ModelParams params = make_params(cfg.common);
  const OriginCondition origin = resolve_origin(cfg.common);
  validate_origin(origin, params.n);
  Output out(cfg.common.output);
  auto& os = out.stream();
  const int n = params.n;

  if (cfg.mode == "expected") {
    os << "k,expected,method\n";
    for (int k = 1; k <= n - 1; ++k) {
      std::string value;
      std::string method = "closed_form";
      try {
        value = to_string(expected_sfs(origin, n, k, params.theta, params.p));
        if (const auto* pr = std::get_if<PowerPrior>(&origin);
            pr && pr->i == 1 && k > n - 3) {
          method = "quadrature";
        }
      } catch (const UnsupportedRegime&) {
        const int i = std::get<PowerPrior>(origin).i;
        value = format_double(expected_sfs_quadrature(i, n, k, params.theta, params.p));
        method = "quadrature";
      }
      os << k << ',' << value << ',' << method << '\n';
    }
    out.close();
    return 0;
  }

  // Monte Carlo: per-replicate spectra, then column means and standard errors.
  const auto reps = static_cast<std::size_t>(cfg.common.replicates);
  if (reps < 2) throw DomainError("mc mode needs at least 2 replicates");
  std::vector<std::vector<double>> xi(static_cast<std::size_t>(n - 1),
                                      std::vector<double>(reps));
  bool skipped = false;
  const int threads = resolve_threads(cfg.common.threads);
  std::vector<char> skipped_by(reps, 0);
  parallel_for(reps, threads, [&](std::size_t r) {
    RandomStream rng = RandomStream::split(cfg.common.seed, r);
    const Genealogy g = sample_genealogy(params, origin, rng);
    const auto placed = place_mutations(g, params.theta, rng);
    skipped_by[r] = placed.root_branch_skipped ? 1 : 0;
    const auto sfs = compute_sfs(g, placed.events);
    for (std::size_t k = 0; k < sfs.xi.size(); ++k) xi[k][r] = static_cast<double>(sfs.xi[k]);
  });
  for (char s : skipped_by) skipped = skipped || s != 0;
  os << "k,mean,se,root_branch_skipped\n";
  for (int k = 1; k <= n - 1; ++k) {
    const auto& col = xi[static_cast<std::size_t>(k - 1)];
    double sum = 0.0;
    for (double v : col) sum += v;
    const double mean = sum / static_cast<double>(reps);
    double ss = 0.0;
    for (double v : col) ss += (v - mean) * (v - mean);
    const double se = std::sqrt(ss / static_cast<double>(reps - 1) / static_cast<double>(reps));
    os << k << ',' << format_double(mean) << ',' << format_double(se) << ','
       << (skipped ? 1 : 0) << '\n';
  }
  out.close();
  return 0;
}

// --------------------------------------------------------------------- fig

struct FigConfig {
  std::string figure = "spt";
  int n = 10;
  std::string output;
};

void emit_normalized(std::ostream& os, const std::string& series,
                     const std::vector<double>& e) {
  double s = 0.0;
  for (double v : e) s += v;
  for (std::size_t k = 0; k < e.size(); ++k) {
    os << series << ',' << k + 1 << ',' << format_double(e[k] / s) << '\n';
  }
}

int cmd_fig(const FigConfig& cfg) {
  if (cfg.n < 4) throw DomainError("fig: n >= 4 required");
  Output out(cfg.output);
  auto& os = out.stream();
  const int n = cfg.n;
  os << "series,k,value\n";
  if (cfg.figure == "spt") {
    for (double tau : {1.0, 10.0, 100.0, 1000.0}) {
      std::vector<double> e;
      for (int k = 1; k <= n - 1; ++k) e.push_back(expected_sfs_fixed(n, k, 1.0, 1.0, tau));
      emit_normalized(os, "tau=" + format_double(tau), e);
    }
  } else {
    for (int i : {0, 1}) {
      std::vector<double> e;
      for (int k = 1; k <= n - 1; ++k) {
        e.push_back(expected_sfs(PowerPrior{i}, n, k, 1.0, 1.0).value());
      }
      emit_normalized(os, "prior=" + std::to_string(i), e);
    }
  }
  for (int k = 1; k <= n - 1; ++k) {
    os << "reference," << k << ',' << format_double(normalized_sfs_limit(n)) << '\n';
  }
  out.close();
  return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyConfig {
  bool quick = false;
  std::uint64_t seed = 0;
  std::string report;
  std::optional<int> threads;
};

nlohmann::json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

int cmd_verify(const VerifyConfig& cfg) {
  VerifyOptions options;
  options.seed = cfg.seed;
  options.quick = cfg.quick;
  options.threads = resolve_threads(cfg.threads);
  nlohmann::json report = nlohmann::json::array();
  bool all = true;
  auto record = [&](const CriterionResult& r) {
    all = all && r.pass;
    const std::string label = r.id > 0 ? "criterion " + std::to_string(r.id) : "check";
    std::printf("%-4s %-12s %-34s stat=%-12.6g tol=%-9.3g %s\n", r.pass ? "PASS" : "FAIL",
                label.c_str(), r.criterion.c_str(), r.statistic, r.tolerance,
                r.detail.c_str());
    std::fflush(stdout);
    report.push_back({{"id", r.id},
                      {"criterion", r.criterion},
                      {"statistic", number_or_null(r.statistic)},
                      {"p_value", number_or_null(r.p_value)},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass},
                      {"seconds", r.seconds},
                      {"detail", r.detail}});
  };
  if (cfg.quick) {
    for (int id : deterministic_criteria()) record(run_criterion(id, options));
  } else {
    for (int id = 1; id <= 12; ++id) record(run_criterion(id, options));
  }
  record(check_bracket_stability(options.bracket));
  std::printf("%s%s\n", all ? "all checks passed" : "some checks FAILED",
              cfg.quick ? " (quick mode: deterministic checks only)" : "");
  if (!cfg.report.empty()) {
    Output out(cfg.report);
    out.stream() << report.dump(2) << '\n';
    out.close();
  }
  return all ? 0 : 1;
}

void add_common(CLI::App* app, Common& c, bool with_replicates) {
  app->add_option("--n", c.n, "Sample size (>= 2)");
  app->add_option("--p", c.p, "Per-lineage sampling rate (> 0)");
  app->add_option("--theta", c.theta, "Mutation rate along lineages (>= 0)");
  auto* o = app->add_option("--origin", c.origin, "fixed:<t> | infinite | prior:<i>");
  app->add_option("--prior", c.prior, "Prior index i (origin prior x^-i); same as --origin prior:<i>")
      ->excludes(o);
  if (with_replicates) {
    app->add_option("--replicates", c.replicates, "Number of replicates (>= 1)")
        ->check(CLI::PositiveNumber);
    app->add_option("--seed", c.seed, "64-bit seed");
    app->add_option("--threads", c.threads,
                    "Worker threads (default: CPPGEN_THREADS, else 1)");
  }
  app->add_option("--output,-o", c.output, "Output CSV path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sample genealogies and site frequency spectra of critical birth-death populations"};
  app.require_subcommand(1);

  SimulateConfig sim;
  auto* simulate = app.add_subcommand("simulate", "Sample genealogies (CSV: replicate,origin,H1..H{n-1})");
  add_common(simulate, sim.common, true);
  simulate->add_option("--engine", sim.engine, "exact | forward")
      ->check(CLI::IsMember({"exact", "forward"}));
  simulate->add_option("--N", sim.N, "Birth-death rate of the forward population (> p)");
  simulate->add_option("--mutations", sim.mutations,
                       "Also place mutations; CSV replicate,branch,time,carriers");

  SfsConfig sfs;
  auto* sfs_cmd = app.add_subcommand("sfs", "Expected (k,expected,method) or Monte Carlo (k,mean,se,root_branch_skipped) SFS");
  add_common(sfs_cmd, sfs.common, true);
  sfs_cmd->add_option("--mode", sfs.mode, "expected | mc")->check(CLI::IsMember({"expected", "mc"}));

  FigConfig fig;
  auto* fig_cmd = app.add_subcommand("fig", "Normalized expected SFS series (CSV: series,k,value)");
  fig_cmd->add_option("--figure", fig.figure, "spt (fixed origin) | spp (priors)")
      ->check(CLI::IsMember({"spt", "spp"}));
  fig_cmd->add_option("--n", fig.n, "Sample size");
  fig_cmd->add_option("--output,-o", fig.output, "Output CSV path (default stdout)");

  VerifyConfig ver;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite; exit 0 iff all checks pass");
  verify->add_flag("--quick", ver.quick, "Deterministic checks only");
  verify->add_option("--seed", ver.seed, "64-bit seed (default 0)");
  verify->add_option("--report", ver.report, "JSON report path");
  verify->add_option("--threads", ver.threads, "Worker threads (default: CPPGEN_THREADS, else 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return cmd_simulate(sim);
    if (*sfs_cmd) return cmd_sfs(sfs);
    if (*fig_cmd) return cmd_fig(fig);
    if (*verify) return cmd_verify(ver);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
