#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ordfree {

// Exact arbitrary-precision integer. Word exponents and ring coefficients
// both grow without bound under repeated products.
using BigInt = boost::multiprecision::cpp_int;

inline bool is_odd(const BigInt& n) { return n % 2 != 0; }

}  // namespace ordfree
