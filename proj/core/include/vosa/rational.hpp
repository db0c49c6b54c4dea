#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

// Boost 1.74 declares rational == integer as a template that C++20
// rewritten-comparison rules turn into infinite recursion.  Exact-match
// overloads win overload resolution and sidestep it.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator!=(const rational<std::int64_t>& a, std::int64_t b) { return !(a == b); }
inline bool operator!=(int b, const rational<std::int64_t>& a) { return !(a == b); }
inline bool operator!=(std::int64_t b, const rational<std::int64_t>& a) { return !(a == b); }
}  // namespace boost

namespace vosa {

using Rational = boost::rational<std::int64_t>;
using RVec = std::vector<Rational>;

// Resolution of every q-exponent in the library: exponents are stored as
// integer multiples of 1/kQRes.
inline constexpr int kQRes = 24;

// Converts a rational q-exponent to units of 1/24; throws
// std::domain_error("denominator overflow") if 24*r is not an integer.
int to_q24(const Rational& r);
inline Rational from_q24(int v) { return Rational(v, kQRes); }

std::string to_string(const Rational& r);

Rational dot(const RVec& a, const RVec& b);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace vosa
