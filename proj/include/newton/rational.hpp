#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace newton {

// All geometry runs on exact rationals over arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Lowest-terms decimal-free rendering: "p" or "p/q".
inline std::string to_fraction_string(const Rat& r) { return r.str(); }

// Lossy; only the OBJ export is allowed to use this.
inline double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace newton
