#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace genassoc {

// All lattice arithmetic runs on arbitrary-precision integers; polytope
// data (support values, vertex coordinates) on exact rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Integer coordinate vector of a lattice element in the simple-root basis.
using RootVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Canonical rational string: "p/q", or just "p" when q == 1.
std::string rat_str(const Rat& r);

/// Parses "p" or "p/q" (optional sign, q > 0 after normalization).
/// Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

/// "[a,b,c]" without spaces.
std::string vec_str(const RootVec& v);

/// Parses "[a,b,...]" (whitespace tolerated). Throws std::invalid_argument
/// on malformed input or wrong length (expected_len >= 0 enforces arity).
RootVec parse_vec(const std::string& s, int expected_len = -1);

/// Fixed-point decimal rendering of an exact rational, `digits` places after
/// the point, computed by integer long division (half-away-from-zero at the
/// last digit). Deterministic across platforms.
std::string rat_decimal(const Rat& r, int digits);

inline Int vec_height(const RootVec& v) {
  Int h = 0;
  for (const Int& c : v) h += c;
  return h;
}

}  // namespace genassoc
