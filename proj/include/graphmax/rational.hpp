#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "graphmax/errors.hpp"

namespace graphmax {

// Exact arithmetic for p=1 norms and covering indices. Denominators grow past
// 64 bits already for paths with a few dozen vertices, so this is arbitrary
// precision.
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

// "3/4" for proper fractions, "2" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p/q" or a plain integer literal.
Rat parse_rat(const std::string& text);

using RatVec = std::vector<Rat>;  // index 0 unused; vertices are 1-based
using DblVec = std::vector<double>;

}  // namespace graphmax
