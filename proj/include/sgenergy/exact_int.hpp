#pragma once
// Exact integer type used for polynomial coefficients and counts.

#include <boost/multiprecision/cpp_int.hpp>

namespace sgenergy {

using Int = boost::multiprecision::cpp_int;

}  // namespace sgenergy
