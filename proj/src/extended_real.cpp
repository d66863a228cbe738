#include "cppgen/extended_real.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cppgen/errors.hpp"
#include "cppgen/format.hpp"

namespace cppgen {

ExtendedReal ExtendedReal::finite(double value) {
  if (std::isnan(value) || value < 0.0) {
    throw DomainError("ExtendedReal: finite values must be >= 0");
  }
  if (std::isinf(value)) return infinity();
  return ExtendedReal(value, false);
}

double ExtendedReal::value() const {
  if (infinite_) throw std::logic_error("ExtendedReal: value is infinite");
  return value_;
}

double ExtendedReal::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

std::string to_string(const ExtendedReal& x) {
  return x.is_infinite() ? std::string("inf") : format_double(x.value());
}

}  // namespace cppgen
