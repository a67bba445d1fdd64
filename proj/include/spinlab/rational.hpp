#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Renders a rational as "p/q" in lowest terms, denominator always present
// (so integers print as "7/1").
std::string to_frac(const Rat& r);

// Parses "p/q" or a plain integer.  Throws std::invalid_argument on junk.
Rat parse_rat(const std::string& s);

Rat rat_pow(const Rat& base, unsigned long e);

Int binomial(unsigned n, unsigned k);

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

}  // namespace spinlab
