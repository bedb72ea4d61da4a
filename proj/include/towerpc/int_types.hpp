#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace towerpc {

// All exponent arithmetic is arbitrary precision: collection can grow
// exponents through conjugation chains, and a silent overflow would corrupt
// normal forms.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_even(const Int& x) { return x % 2 == 0; }

// x mod 2 in {0,1}, independent of the sign of x.
inline Int mod2(const Int& x) { return ((x % 2) + 2) % 2; }

}  // namespace towerpc
