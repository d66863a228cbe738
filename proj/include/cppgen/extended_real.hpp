#pragma once

#include <string>

namespace cppgen {

/// Nonnegative real number or +infinity.
///
/// Infinite expectations and moments are legitimate results here, so they are
/// represented explicitly rather than through sentinel values.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;

  /// Throws DomainError for negative or NaN values.
  static ExtendedReal finite(double value);
  static constexpr ExtendedReal infinity() { return ExtendedReal(0.0, true); }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }

  /// Finite value; throws std::logic_error when infinite.
  double value() const;
  /// Finite value, or +inf as an IEEE double.
  double to_double() const;

  friend constexpr bool operator==(const ExtendedReal&,
                                   const ExtendedReal&) = default;

 private:
  constexpr ExtendedReal(double v, bool inf) : value_(v), infinite_(inf) {}

  double value_ = 0.0;
  bool infinite_ = false;
};

/// "inf" or the value printed with 17 significant digits.
std::string to_string(const ExtendedReal& x);

}  // namespace cppgen
