#include "cppgen/quadrature.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "cppgen/errors.hpp"
#include "cppgen/format.hpp"

namespace cppgen {

namespace {

// Accept when the estimate is within this multiple of the requested tolerance;
// tanh-sinh error estimates are conservative by roughly an order of magnitude.
constexpr double kSlack = 10.0;

template <class F>
QuadratureResult run(F&& f, double a, double b, double rel_tol) {
  // integrate() is not const-qualified in this Boost version
  static boost::math::quadrature::tanh_sinh<double> integrator(15);
  double error = 0.0;
  double l1 = 0.0;
  double value = 0.0;
  try {
    value = integrator.integrate(f, a, b, rel_tol, &error, &l1);
  } catch (const std::exception& e) {
    throw ConvergenceFailure(std::string("quadrature failed: ") + e.what(),
                             std::numeric_limits<double>::infinity());
  }
  if (!std::isfinite(value)) {
    throw ConvergenceFailure("quadrature produced a non-finite value",
                             std::numeric_limits<double>::infinity());
  }
  const double scale = std::max(std::fabs(l1), 1e-300);
  if (error > kSlack * rel_tol * scale) {
    throw ConvergenceFailure(
        "quadrature did not converge: achieved relative error " +
            format_double(error / scale),
        error / scale);
  }
  return {value, error};
}

}  // namespace

QuadratureResult integrate_unit_interval(const UnitIntegrand& f,
                                         double rel_tol) {
  auto g = [&f](double y, double yc) {
    // yc is the signed distance to the nearer endpoint
    const double one_minus_y = yc > 0.0 ? yc : 1.0 - y;
    return f(y, one_minus_y);
  };
  return run(g, 0.0, 1.0, rel_tol);
}

QuadratureResult integrate_interval(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol) {
  auto g = [&f](double x) { return f(x); };
  return run(g, a, b, rel_tol);
}

}  // namespace cppgen
