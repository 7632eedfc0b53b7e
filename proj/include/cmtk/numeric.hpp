#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace cmtk {

// All lattice arithmetic is exact; no modular shortcuts, no floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

/// Floor division (quotient rounded toward -infinity). cpp_int's operator/
/// truncates toward zero, which is the wrong reduction for HNF pivots.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

/// Least n >= 0 with a <= n*b, for a >= 0, b >= 1.
inline Int ceil_div(const Int& a, const Int& b) { return floor_div(a + b - 1, b); }

inline Int numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rat& r) { return boost::multiprecision::denominator(r); }

} // namespace cmtk
