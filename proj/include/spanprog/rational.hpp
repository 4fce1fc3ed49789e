#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace spanprog {

// Exact rational coefficient type. Always stored in lowest terms with a
// positive denominator (cpp_rational canonicalizes on construction).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "p/q" for non-integers, plain "p" otherwise.
std::string to_string(const Rational& r);

// Floating-point rendering at 12 significant digits, used by all reports.
std::string format_double(double x);

}  // namespace spanprog
