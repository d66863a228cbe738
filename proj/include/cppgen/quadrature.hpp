#pragma once

#include <functional>

namespace cppgen {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  ///< estimated absolute error
};

/// Integrand on (0,1) receiving y and 1-y, the latter accurate near y = 1.
using UnitIntegrand = std::function<double(double y, double one_minus_y)>;

/// Double-exponential (tanh-sinh) quadrature over (0,1); tolerates
/// integrable endpoint singularities. Throws ConvergenceFailure when the
/// error estimate exceeds rel_tol relative to the integral of |f|.
QuadratureResult integrate_unit_interval(const UnitIntegrand& f,
                                         double rel_tol);

/// Same over a finite interval (a, b).
QuadratureResult integrate_interval(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol);

}  // namespace cppgen
