#pragma once

#include "vosa/codes.hpp"
#include "vosa/lattice.hpp"
#include "vosa/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vosa {

// lambda -> (-1)^(E(lambda) - offset), where E is factor * lambda.lambda
// (norm parity), 2 lambda.w (linear), or 0 (trivial).  The exponent must be
// an integer on every point it is applied to.
struct SignCharacter {
  enum class Kind { kTrivial, kNormParity, kLinear };
  Kind kind = Kind::kTrivial;
  Rational factor = 1;
  RVec w;
  Rational offset = 0;

  static SignCharacter trivial() { return {}; }
  static SignCharacter norm_parity(const Rational& factor = 1, const Rational& offset = 0);
  static SignCharacter linear(RVec w, const Rational& offset = 0);
  int operator()(const RVec& x) const;
  std::string describe() const;
};

// z-grade of lambda is lambda.v, stored with exponent lambda.v * zscale.
struct Marking {
  RVec v;
  int zscale = 6;
};

// Sum over lambda in c with lambda.lambda / 2 < trunc of
// sign(lambda) q^(lambda.lambda/2) z^(lambda.v).
JacobiSeries theta(const Coset& c, const std::optional<Marking>& m, const SignCharacter& s,
                   const Rational& trunc);
JacobiSeries theta(const std::vector<Coset>& parts, const std::optional<Marking>& m, const SignCharacter& s,
                   const Rational& trunc);

// Image of a coset of a lattice in the discriminant group of a sublattice
// with an orthogonal basis b_i: the label of x has entries x.b_i modulo
// b_i.b_i.
struct GlueImage {
  std::vector<int> moduli;
  std::vector<Word> labels;  // sorted
  std::int64_t index = 0;    // [lattice : sub]
};
GlueImage glue_image(const Coset& big, const Lattice& sub);

}  // namespace vosa
