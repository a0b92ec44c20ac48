#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qsl {

// Arbitrary-precision integers and rationals back every exact computation in
// the toolkit; no floating point enters the symbolic or rational paths.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }
inline double to_double(const Int& z) { return z.template convert_to<double>(); }

}  // namespace qsl
