#pragma once

#include "vosa/characters.hpp"
#include "vosa/codes.hpp"
#include "vosa/cyclotomic.hpp"
#include "vosa/lattice.hpp"
#include "vosa/numeric.hpp"
#include "vosa/series.hpp"
#include "vosa/theta.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace vosa {

enum class BulkSector { kNSNS, kNSR, kRNS, kRR };
std::string sector_name(BulkSector s);

// One tensor factor of a summand: the module of a lattice VOSA attached to
// a coset.  `word` records the code label when the example is built from
// a code (empty otherwise).
struct BulkSide {
  std::string label;
  Coset coset;
  Word word;
};

struct BulkSummand {
  BulkSide left, right;
  BulkSector sector = BulkSector::kNSNS;
  // Extra factor on the supertrace of this summand.
  int sign = 1;
};

// A union of cosets in an ambient space together with isometric maps onto
// the left and right ambient spaces.  left_map has one row per left
// ambient coordinate; left_map^T left_map + right_map^T right_map must be
// the identity.
struct BulkTarget {
  std::string label;
  std::vector<Coset> cosets;
  RMat left_map, right_map;
};

struct BulkDecomposition {
  std::string example;
  int n = 0;
  std::string left_vosa, right_vosa;
  int central_charge = 0;  // c' = c''
  // Supersymmetric examples grade (-1)^F by exp(pi i (J'_0 + J''_0)) with
  // J_0 read off the markings, times exp(-pi i (v'.v' + v''.v'') / 2) on
  // the R-R sector (exp(-pi i c / 3) for N=2 markings).
  // Bosonic examples have no R-R summands; their R-R entries repeat the
  // NS-NS ones and the supertrace only sees the summand signs.
  bool supersymmetric = false;
  // The markings are N=2 U(1) gradings (v.v = c/3) when n2_structure.
  std::optional<Marking> left_marking, right_marking;
  bool n2_structure = false;
  std::vector<BulkSummand> summands;
  std::optional<BulkTarget> ns_target, rr_target;
  // Even (or at least integral) lattice whose VOSA is the right factor,
  // used for the S-matrix reality test.
  Lattice right_lattice;

  std::size_t count(BulkSector s) const;
};

// Known examples: diagD, diagA1, diagVL, diagF, torusD, tetrahedralK3,
// golayD12, gepner16.  n is ignored by the last three.  Throws
// std::invalid_argument("unknown example") otherwise.
BulkDecomposition build_bulk(const std::string& example, int n = 1);
std::vector<std::string> bulk_examples();
// Left and right factors exchanged.
BulkDecomposition swapped(const BulkDecomposition& b);

// ---- exact decomposition check -------------------------------------------

struct Bidegree {
  Rational left, right;
};
struct DecompositionReport {
  std::string example;
  BulkSector sector = BulkSector::kNSNS;
  Rational trunc;
  std::size_t points = 0;  // target vectors counted
  bool pass = false;
  std::optional<Bidegree> first_mismatch;
  std::int64_t summand_count = 0, target_count = 0;  // at the mismatch
};
// Compares sum over summands theta_left(q') theta_right(q'') with the
// bigraded theta series of the target, for all bidegrees (a, b) with
// a, b < trunc.  Throws std::invalid_argument("no target") when the
// decomposition has none for this sector.
DecompositionReport verify_decomposition(const BulkDecomposition& b, BulkSector sector, const Rational& trunc);

// ---- partition vector and modularity -------------------------------------

// Entries Z^+_{NS-NS}, Z^-_{NS-NS}, Z^+_{R-R}, Z^-_{R-R}; each is a sum of
// (holomorphic series, series evaluated antiholomorphically) products.
struct PartitionVector {
  std::array<std::vector<std::pair<JacobiSeries, JacobiSeries>>, 4> entries;
  Rational trunc;
};
PartitionVector partition_vector(const BulkDecomposition& b, const Rational& trunc);

struct VectorValue {
  std::array<Complex, 4> value;
  double tail_bound = 0.0;
};
// Evaluates the four entries at (u, tau), the right factors at
// (-conj u, -conj tau).
VectorValue evaluate(const PartitionVector& z, const EvalPoint& p, double tol);

// The 4x4 matrices acting on the partition vector.
using IntMat4 = std::array<std::array<int, 4>, 4>;
IntMat4 bold_s();
IntMat4 bold_t();
IntMat4 multiply(const IntMat4& a, const IntMat4& b);

struct ModularOptions {
  Rational trunc = 6;
  double tol = 1e-6;
  Rational max_trunc = 30;
  std::vector<EvalPoint> points;  // empty: i, exp(i pi / 3), 0.3 + 0.9i at u = 0
};
struct ModularReport {
  std::string example;
  std::string check;  // "S" or "T"
  double residual = 0.0;
  double tail_bound = 0.0;
  Rational trunc;  // truncation finally used
  bool pass = false;
  std::optional<std::string> first_mismatch;
};
std::vector<EvalPoint> default_points();
// S: max over points and entries of |mult * (S Z(u/tau, -1/tau)) - Z(u, tau)|,
// mult = exp(-pi i (v'.v' u^2/tau - v''.v'' conj(u)^2/conj(tau))) for the
// markings v', v'' (1 without markings).  T likewise with
// T Z(u, tau + 1).  Raises the truncation until the tails are below tol.
ModularReport modular_check(const BulkDecomposition& b, const ModularOptions& opts = {});
ModularReport modular_t_check(const BulkDecomposition& b, const ModularOptions& opts = {});
// T acts on each product term by the phase exp(2 pi i (a - b)) for
// exponents a, b; checks the T relation term by term without numerics.
ModularReport exact_t_check(const BulkDecomposition& b, const Rational& trunc);

// ---- lattice S-matrix and the hypothesis check ---------------------------

struct LatticeSMatrix {
  std::vector<RVec> classes;  // representatives of L*/L
  std::size_t order = 0;
  // Full matrix only for order <= 256.
  std::optional<std::vector<std::vector<CycNum>>> matrix;
  bool real = false;
  bool unitary = false;
};
// S_{g,d} = |L*/L|^(-1/2) exp(-2 pi i g.d) for an integral lattice.  Throws
// std::domain_error("discriminant too large") above 10^4 classes and
// std::domain_error("unsupported") when a pairing or the normalization
// leaves Q(zeta_24).
LatticeSMatrix lattice_smatrix(const Lattice& l);

struct HypothesisReport {
  std::string example;
  std::size_t even_summands = 0, odd_summands = 0, mixed_summands = 0;
  // Classes of L'_0 - L''_0 - (c' - c'')/24 mod 1 seen on even and odd
  // NS-NS states and on R-R states, in units of 1/24.
  std::vector<int> even_classes, odd_classes, rr_classes;
  bool congruences_hold = false;
  bool right_s_real = false;
  // Smallest N with N (L'_0 - L''_0) integral on every summand; T^N then
  // fixes the partition vector.
  int t_period = 1;
  // "potential" when the congruences hold and the right S-matrix is real,
  // "quasi-potential" otherwise (T^N and the lattice S-matrices still
  // generate a finite-index invariance), "none" when the supertrace phase
  // is not a sign.
  std::string verdict;
  std::optional<std::string> first_violation;
};
HypothesisReport hypothesis_check(const BulkDecomposition& b);

// ---- N=2 checks -----------------------------------------------------------

// Spectral flow by half a unit on one side: z -> z q^(1/2), times
// z^(c/6) q^(c/24).  The source must be known well beyond the target
// truncation; the result is truncated where it is reliable.
JacobiSeries flow_half(const JacobiSeries& s, const Marking& m, int central_charge);

struct FlowSymmetryReport {
  std::string example;
  Rational trunc;
  bool pass = false;
  std::optional<std::string> first_mismatch;
};
FlowSymmetryReport spectral_flow_symmetry_check(const BulkDecomposition& b, const Rational& trunc);

struct GenusReport {
  std::string example;
  JacobiSeries genus;
  bool holomorphic = false;
  bool z1_constant = false;
  std::optional<CycNum> z1_value;
  Rational index;
  bool elliptic_shift = false;
  // Only decided for index 1 (multiple of phi_{0,1}) and the zero series.
  std::optional<bool> matches_weak_jacobi;
  std::optional<std::string> first_mismatch;
};
// E(u, tau) = supertrace over the R-R sector with the right factor at
// z'' = 1.  When the right q'' dependence does not cancel, holomorphic is
// false and genus holds only the q''^0 part.
GenusReport elliptic_genus(const BulkDecomposition& b, const Rational& trunc);
// 4 sum_i theta_i(z)^2 / theta_i(0)^2 over i = 2, 3, 4.
JacobiSeries phi01(const Rational& trunc);

void to_json(nlohmann::json& j, const DecompositionReport& r);
void to_json(nlohmann::json& j, const ModularReport& r);
void to_json(nlohmann::json& j, const HypothesisReport& r);
void to_json(nlohmann::json& j, const FlowSymmetryReport& r);
void to_json(nlohmann::json& j, const GenusReport& r);

}  // namespace vosa
