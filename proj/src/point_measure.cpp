#include "cppgen/point_measure.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>

#include "cppgen/errors.hpp"

namespace cppgen {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha > 0 required");
  }
}

bool atom_greater(const Atom& a, const Atom& b) {
  if (a.x != b.x) return a.x > b.x;
  return a.l > b.l;
}

}  // namespace

double default_truncation(double alpha) {
  check_alpha(alpha);
  return 1e-3 * alpha;
}

double inv_gamma_cdf(int i, double alpha, double t) {
  check_alpha(alpha);
  if (i < 0) throw DomainError("inv_gamma_cdf: i >= 0 required");
  if (!(t > 0.0)) throw DomainError("inv_gamma_cdf: t > 0 required");
  if (std::isinf(t)) return 1.0;
  return boost::math::gamma_q(i + 1.0, alpha / t);
}

double inv_gamma_pdf(int i, double alpha, double t) {
  check_alpha(alpha);
  if (i < 0) throw DomainError("inv_gamma_pdf: i >= 0 required");
  if (!(t > 0.0)) return 0.0;
  const double log_pdf = (i + 1.0) * std::log(alpha) - alpha / t -
                         std::lgamma(i + 1.0) - (i + 2.0) * std::log(t);
  return std::exp(log_pdf);
}

std::vector<double> sample_top_atoms(double alpha, int count,
                                     RandomStream& rng) {
  check_alpha(alpha);
  if (count < 1) throw DomainError("sample_top_atoms: count >= 1 required");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  double sum = 0.0;
  for (int k = 0; k < count; ++k) {
    sum += rng.exponential(alpha);
    out.push_back(1.0 / sum);
  }
  return out;
}

PointMeasure2D sample_ppm(double alpha, double x_min, double x_max,
                          RandomStream& rng) {
  check_alpha(alpha);
  if (!(x_min > 0.0) || !(x_min < x_max)) {
    throw DomainError("sample_ppm: 0 < x_min < x_max required");
  }
  PointMeasure2D m;
  m.truncation = x_min;
  const double inv_lo = 1.0 / x_min;
  const double inv_hi = std::isinf(x_max) ? 0.0 : 1.0 / x_max;
  const double width = inv_lo - inv_hi;
  const std::uint64_t count = rng.poisson(alpha * width);
  m.atoms.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t a = 0; a < count; ++a) {
    const double l = rng.uniform();
    // inverse CDF of the density proportional to x^{-2} on (x_min, x_max)
    const double x = 1.0 / (inv_lo - rng.uniform() * width);
    m.atoms.push_back({l, std::clamp(x, x_min, x_max)});
  }
  return m;
}

PointMeasure2D sample_pi(double alpha, double x_min, int top_count,
                         RandomStream& rng) {
  check_alpha(alpha);
  if (!(x_min > 0.0)) throw DomainError("sample_pi: x_min > 0 required");
  if (top_count < 0) throw DomainError("sample_pi: top_count >= 0 required");
  if (top_count == 0) {
    return sample_ppm(alpha, x_min, std::numeric_limits<double>::infinity(),
                      rng);
  }
  const std::vector<double> top = sample_top_atoms(alpha, top_count, rng);
  PointMeasure2D m;
  m.truncation = x_min;
  for (double x : top) {
    if (x > x_min) m.atoms.push_back({rng.uniform(), x});
  }
  if (top.back() > x_min) {
    PointMeasure2D body = sample_ppm(alpha, x_min, top.back(), rng);
    m.atoms.insert(m.atoms.end(), body.atoms.begin(), body.atoms.end());
  }
  return m;
}

std::pair<LimitOrigin, PointMeasure2D> sample_cox(int i, double alpha,
                                                  double x_min,
                                                  RandomStream& rng) {
  check_alpha(alpha);
  if (i < 0) throw DomainError("sample_cox: i >= 0 required");
  if (!(x_min > 0.0)) throw DomainError("sample_cox: x_min > 0 required");
  double sum = 0.0;
  for (int j = 0; j <= i; ++j) sum += rng.exponential(alpha);
  const LimitOrigin origin{i, 1.0 / sum};
  if (origin.value <= x_min) return {origin, PointMeasure2D{{}, x_min}};
  return {origin, sample_ppm(alpha, x_min, origin.value, rng)};
}

PointMeasure2D remove_largest_atoms(const PointMeasure2D& m, int count) {
  if (count < 0) throw DomainError("remove_largest_atoms: count >= 0");
  if (static_cast<std::size_t>(count) > m.atoms.size()) {
    throw InsufficientAtoms("remove_largest_atoms: measure has " +
                            std::to_string(m.atoms.size()) +
                            " atoms, asked to remove " + std::to_string(count));
  }
  PointMeasure2D out = m;
  if (count == 0) return out;
  std::partial_sort(out.atoms.begin(), out.atoms.begin() + count,
                    out.atoms.end(), atom_greater);
  out.atoms.erase(out.atoms.begin(), out.atoms.begin() + count);
  return out;
}

double largest_atom(const PointMeasure2D& m) {
  double best = m.truncation;
  for (const Atom& a : m.atoms) best = std::max(best, a.x);
  return best;
}

std::uint64_t box_count(const PointMeasure2D& m, double l_lo, double l_hi,
                        double x_lo, double x_hi) {
  std::uint64_t c = 0;
  for (const Atom& a : m.atoms) {
    if (a.l > l_lo && a.l < l_hi && a.x > x_lo && a.x < x_hi) ++c;
  }
  return c;
}

}  // namespace cppgen
