#pragma once

#include "vosa/rational.hpp"
#include "vosa/series.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace vosa {

// NS partition function of a self-dual c = 12 VOSA with d weight-1/2
// states: q^(-1/2) prod_{k>=1} (1 + q^(k-1/2))^24 + d - 24.  Throws
// std::invalid_argument("d out of range") outside 0..24.
JacobiSeries znsns_c12(int d, const Rational& trunc);

// Theta of D4 at (tau + 1) / 2: 1 - 24 q^(1/2) + ...
JacobiSeries signed_d4_theta(const Rational& trunc);

// Coefficients of the weight-2 matching in units of <u, u'>: C and D of
// C q^(-1/2) + D + ..., and the Killing form kappa(u, u').
struct Weight2Match {
  int d = 0;
  Rational c_coeff, d_coeff, kappa_coeff;
  Rational trunc;
};
// Matches -2C q d/dq Z + D theta against kappa q^(1/2) - E_2 Z / 12
// through q^(1/2) and solves for (C, D, kappa).  Throws
// std::domain_error("matching failed") when the system is singular or
// trunc < 1.
Weight2Match weight2_match(int d, const Rational& trunc = Rational(3, 2));

enum class Family { kA, kB, kC, kD, kE6, kE7, kE8, kF4, kG2 };

struct SimpleType {
  Family family = Family::kA;
  int rank = 1;
  int dual_coxeter = 2;
  std::string name() const;
};
bool operator==(const SimpleType& a, const SimpleType& b);

// Dual Coxeter number from the closed forms (A_n: n+1, B_n: 2n-1,
// C_n: n+1, D_n: 2n-2, E6: 12, E7: 18, E8: 30, F4: 9, G2: 4).
int dual_coxeter(Family f, int rank);
// Simple Lie algebras of rank <= max_rank, one entry per isomorphism class:
// A_n (n >= 1), B_n (n >= 2), C_n (n >= 3), D_n (n >= 4), then the
// exceptional ones.
std::vector<SimpleType> simple_types(int max_rank);

struct ScanHit {
  int d = 0;
  SimpleType type;
  int level = 1;
};
// All (d, type, level) with 0 <= d < 24, rank <= 12 - d/2 and
// dual Coxeter number = (22 + d) * level.
std::vector<ScanHit> enumerate_solutions();
std::vector<ScanHit> enumerate_solutions(int d);

void to_json(nlohmann::json& j, const Weight2Match& m);
void to_json(nlohmann::json& j, const ScanHit& h);

}  // namespace vosa
