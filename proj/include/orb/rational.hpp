#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace orb {

// Arbitrary-precision rational scalar.  Always stored reduced with a
// positive denominator; rref pivots on cyclotomic matrices can blow up
// coefficients well past 64 bits.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

inline Rational rat(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// Floor of a rational, as an Integer.
inline Integer rfloor(const Rational& r) {
    Integer q = num(r) / den(r);
    if (num(r) < 0 && q * den(r) != num(r)) --q;
    return q;
}

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline std::string to_string(const Rational& r) {
    return is_integer(r) ? num(r).str() : num(r).str() + "/" + den(r).str();
}

}  // namespace orb
