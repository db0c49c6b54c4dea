#pragma once

// Helpers shared by the bulk checks and the elliptic genus.

#include "vosa/bulk.hpp"

#include <map>
#include <string>

namespace vosa::detail {

// Characters of the sides of a decomposition at one truncation, memoized
// by side label.  `twisted` applies exp(pi i J_0) through the marking.
class SideCharacters {
 public:
  SideCharacters(const BulkDecomposition& b, const Rational& trunc) : b_(b), trunc_(trunc) {}
  const JacobiSeries& get(const BulkSide& s, bool left, bool twisted);

 private:
  const BulkDecomposition& b_;
  Rational trunc_;
  std::map<std::string, JacobiSeries> cache_;
};

// exp(-pi i (v'.v' + v''.v'') / 2) as a power of zeta_24.
int rr_phase(const BulkDecomposition& b);

// Scalar on the supertrace of a summand: its sign, and rr_phase on R-R
// summands of supersymmetric examples.
CycNum supertrace_scalar(const BulkDecomposition& b, const BulkSummand& s);

std::string series_key(const JacobiSeries& s);

}  // namespace vosa::detail
