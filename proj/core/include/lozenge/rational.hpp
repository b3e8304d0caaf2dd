#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lozenge {

// All arithmetic in this library is exact. Counts are arbitrary-precision
// integers and weights/values are arbitrary-precision rationals; no floating
// point is used anywhere outside of SVG coordinate output.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Lowest terms, leading '-', "p/q" only when q != 1.
std::string to_string(const Rat& r);

// Accepts "p" or "p/q" with optional leading '-'. Throws std::invalid_argument.
Rat parse_rational(const std::string& s);

Int factorial(int n);

// Binomial coefficient extended to rational (or negative) top argument:
// C(t, k) = t(t-1)...(t-k+1) / k!  for k >= 0, and 0 for k < 0.
// This is the polynomial extension in t; for integer 0 <= t it agrees with
// the usual lattice-path count, including C(t, k) = 0 for k > t.
Rat binomial_ext(const Rat& top, int k);

}  // namespace lozenge
