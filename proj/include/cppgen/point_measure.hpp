#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cppgen/random_stream.hpp"

namespace cppgen {

// Large-sample limit objects: the Poisson point measure pi on (0,1) x (0,inf)
// with intensity alpha dl x^{-2} dx, its restrictions pi^t to x < t, and the
// Cox measures pi^(i) obtained by randomizing t with the law of
// e_i = 1/(rho_0 + ... + rho_i), rho_j i.i.d. exponential with rate alpha.

struct Atom {
  double l = 0.0;  ///< position in (0,1)
  double x = 0.0;  ///< height (depth), > truncation
};

struct PointMeasure2D {
  std::vector<Atom> atoms;
  double truncation = 0.0;  ///< atoms with x <= truncation are not represented
};

struct LimitOrigin {
  int i = 0;
  double value = 0.0;
};

/// Default truncation for full-measure simulation: 1e-3 * alpha.
double default_truncation(double alpha);

/// P(e_i <= t) = Q(i+1, alpha/t), the upper regularized gamma function.
double inv_gamma_cdf(int i, double alpha, double t);
/// alpha^{i+1} e^{-alpha/t} / (i! t^{i+2}).
double inv_gamma_pdf(int i, double alpha, double t);

/// The `count` largest heights of pi in decreasing order:
/// T_k = 1/(rho_0 + ... + rho_{k-1}).
std::vector<double> sample_top_atoms(double alpha, int count, RandomStream& rng);

/// Poisson measure on (0,1) x (x_min, x_max); x_max may be +inf.
PointMeasure2D sample_ppm(double alpha, double x_min, double x_max,
                          RandomStream& rng);

/// pi truncated at x_min, built from `top_count` exactly sampled top atoms
/// plus the Poisson body below the last of them (restriction property).
PointMeasure2D sample_pi(double alpha, double x_min, int top_count,
                         RandomStream& rng);

/// Cox pair (T^(i), pi^(i)): T^(i) = e_i, then a Poisson measure on
/// (0,1) x (x_min, T^(i)). The upper bound is T^(i) itself, which is what
/// makes pi^(i) equal in law to pi with its i+1 largest atoms removed.
std::pair<LimitOrigin, PointMeasure2D> sample_cox(int i, double alpha,
                                                  double x_min,
                                                  RandomStream& rng);

/// Removes the `count` atoms with largest x (ties: larger l first).
PointMeasure2D remove_largest_atoms(const PointMeasure2D& m, int count);

/// Largest x among the atoms, or the truncation level when empty.
double largest_atom(const PointMeasure2D& m);

/// Number of atoms in (l_lo, l_hi) x (x_lo, x_hi).
std::uint64_t box_count(const PointMeasure2D& m, double l_lo, double l_hi,
                        double x_lo, double x_hi);

}  // namespace cppgen
