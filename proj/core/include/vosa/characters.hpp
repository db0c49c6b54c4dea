#pragma once

#include "vosa/lattice.hpp"
#include "vosa/series.hpp"
#include "vosa/theta.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace vosa {

enum class Twist { kNS, kR };

// Untwisted (NS) or canonically twisted (R) sector, with a trace (+1) or
// supertrace (-1).
struct SectorLabel {
  Twist twist = Twist::kNS;
  int sign = 1;
  std::string name() const;
};

// s * q^(-rank/24) prod (1 - q^n)^(-rank), truncated at trunc.  The input
// must be known up to trunc + rank/24.
JacobiSeries divide_by_eta_power(const JacobiSeries& s, int rank, const Rational& trunc);

// theta(c, marking, sign) / eta^rank with the sign applied only for the
// supertrace.
JacobiSeries lattice_vosa_character(const Coset& c, const SectorLabel& sector, const SignCharacter& parity,
                                    const std::optional<Marking>& marking, const Rational& trunc);

// n free fermions.  NS for any n whose vacuum exponent -n/48 lies in
// (1/24)Z; R only for even n.
JacobiSeries fermion_character(int n, const SectorLabel& sector, const Rational& trunc);

// The c = 1 N=2 building block with U(1) charges in Z + s/6, including the
// phase exp(pi i (k + s/6)); z exponents are stored times 6.
JacobiSeries n2_f(int s, const Rational& trunc);

// Level-1 affine sl2 character of highest weight j in {0, 1}, graded by
// z^(J_0) with J_0 = 2 m on the A1 coset vector m (1, 1).
JacobiSeries sl2_level1_character(int j, const Rational& trunc);

struct FlowCharacterReport {
  int j = 0;
  int ell = 0;
  int target_j = 0;
  int y_exponent = 0;  // level bookkeeping, equal on both sides
  bool pass = false;
  std::optional<std::pair<Rational, int>> first_mismatch;
  Rational trunc;
};
// Substitutes (y, z, q) -> (y z^ell q^(ell^2/4), z q^(ell/2), q) into the
// level-1 character of weight j and compares with the character of weight
// j (ell even) or 1 - j (ell odd).
FlowCharacterReport spectral_flow_character_check(int j, int ell, const Rational& trunc);

nlohmann::json character_json(const JacobiSeries& s, const SectorLabel& sector, const std::string& parity);

}  // namespace vosa
