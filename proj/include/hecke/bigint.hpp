#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

// Arbitrary-precision integer used for polynomial coefficients and module
// dimensions. Header-only, no fast machine-word path: exactness first.
using Int = boost::multiprecision::cpp_int;

} // namespace hecke
