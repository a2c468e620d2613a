#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace alcove {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals, no floating point. Floors of rationals feed case splits, so
// rounding direction matters.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Mathematical floor: rat_floor(-1/2) == -1, not 0.
inline Int rat_floor(const Rat& q) {
  Int n = numerator(q);
  Int d = denominator(q);  // canonical: d > 0
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

inline std::string rat_str(const Rat& q) { return q.str(); }

inline long long to_ll(const Int& n) { return n.convert_to<long long>(); }

// Raised when a theorem's hypothesis (genus or characteristic bound) fails.
struct HypothesisError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace alcove
