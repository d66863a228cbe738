#pragma once

#include <string>

namespace cppgen {

/// Round-trip serialization: 17 significant digits, "inf"/"-inf"/"nan".
std::string format_double(double x);

}  // namespace cppgen
