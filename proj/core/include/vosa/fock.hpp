#pragma once

#include "vosa/cyclotomic.hpp"
#include "vosa/n4.hpp"
#include "vosa/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vosa {

enum class Fermion { kB, kC };

// Fock space of six b/c pairs ({b_{i,r}, c_{j,s}} = delta_ij delta_{r+s,0})
// spanned by states of level <= cutoff.  A state is a set of creation
// modes, stored as a bit mask; the canonical product applies creators in
// increasing bit order, highest bit leftmost.
class FockSpace {
 public:
  static constexpr int kSpecies = 6;
  static constexpr std::size_t kMaxDimension = 1000000;

  // cutoff must be a nonnegative multiple of 1/2.  Throws
  // std::domain_error("cutoff too large") past the dimension guard.
  explicit FockSpace(const Rational& cutoff);

  Rational cutoff() const { return Rational(twice_cutoff_, 2); }
  int twice_cutoff() const { return twice_cutoff_; }
  std::size_t dimension() const { return states_.size(); }
  std::uint64_t state(std::size_t i) const { return states_[i]; }
  int twice_level(std::size_t i) const { return levels_[i]; }
  std::optional<std::size_t> index_of(std::uint64_t mask) const;
  std::string describe(std::size_t i) const;

  // Bit of the creator type_{species, -r}; -1 if r is past the cutoff.
  int creator_bit(Fermion type, int species, int twice_r) const;
  // Applies one mode (twice_r > 0 annihilates, < 0 creates) to a mask.
  // Returns the sign (0 when the result vanishes or leaves the space).
  int apply_mode(Fermion type, int species, int twice_r, std::uint64_t& mask) const;
  int twice_level_of(std::uint64_t mask) const;

 private:
  int twice_cutoff_;
  int creators_;
  std::vector<std::uint64_t> states_;
  std::vector<int> levels_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

FockSpace build_fock(const Rational& cutoff);

// Generating-function count of the Fock basis: coefficient sum of
// prod_r (1 + x^r)^12 over r in 1/2 + Z, 0 < r <= cutoff, up to x^cutoff.
std::size_t fock_dimension_count(const Rational& cutoff);

// Sparse operator that lowers the level by the mode index.  Column j holds
// the image of basis state j, sorted by row.
struct ModeMatrix {
  std::string label;
  int twice_index = 0;
  bool odd = false;
  std::vector<std::vector<std::pair<std::size_t, CycNum>>> cols;

  static ModeMatrix zero(const FockSpace& f, int twice_index, bool odd, std::string label = "0");
  static ModeMatrix identity(const FockSpace& f, const CycNum& scale = CycNum(1));
  CycNum entry(std::size_t row, std::size_t col) const;
  ModeMatrix& operator+=(const ModeMatrix& o);
  ModeMatrix scaled(const CycNum& s) const;
  bool is_zero() const;
};
// (a b) v = a (b v).
ModeMatrix compose(const ModeMatrix& a, const ModeMatrix& b);
// a b - (-1)^{|a||b|} b a
ModeMatrix graded_commutator(const ModeMatrix& a, const ModeMatrix& b);
ModeMatrix operator+(ModeMatrix a, const ModeMatrix& b);
ModeMatrix operator-(ModeMatrix a, const ModeMatrix& b);

// A single fermion mode type_{species, r}, species in 1..6.
ModeMatrix fermion_mode(const FockSpace& f, Fermion type, int species, int twice_r);

struct FieldFactor {
  Fermion type = Fermion::kB;
  int species = 1;
  int derivatives = 0;  // 0 or 1
};
struct FieldMonomial {
  CycNum coeff = CycNum(1);
  std::vector<FieldFactor> factors;  // one to three fermions
};
using Field = std::vector<FieldMonomial>;

// Mode n of a normal-ordered field: sum over p + q + ... = n of the
// normal-ordered product of fermion modes (annihilators moved right with
// the Koszul sign), restricted to modes that can act below the cutoff.
// Throws std::invalid_argument("unsupported field") for other shapes.
ModeMatrix composite_mode(const FockSpace& f, const Field& field, int twice_n, const std::string& label = "");

Field field_h();  // :b1 c1: + :b2 c2:
Field field_e();  // :b1 b2:
Field field_f();  // :c1 c2:
// Odd currents of charge sign: a charged fermion of the first two pairs
// times a complex boson built from the U(1) currents j_a = :b_a c_a: of
// pairs 3..6 (Z1 = j3 + i j4, Z2 = j5 + i j6, up to scale):
//   G^{+,1} = b1 conj(Z1) + b2 conj(Z2),  G^{+,2} = b1 Z2 - b2 Z1,
//   G^{-,1} = c1 conj(Z2) - c2 conj(Z1),  G^{-,2} = c1 Z1 + c2 Z2.
Field field_g(int sign, int x);
// Single cubic monomials :b1 b3 b5:, :c2 b3 b5:, :c1 c3 c5:, :b2 c3 c5:.
// They do not close into the N=4 algebra (see the tests); kept for
// comparison.
Field field_g_cubic(int sign, int x);
// Standard quadratic Virasoro field of the six b/c pairs, c = 6.
Field field_virasoro();

enum class RelationSet { kSl2Level1, kN4c6 };

struct RelationFailure {
  std::string relation;
  std::string state;
  CycNum lhs, rhs;
};
struct RelationReport {
  RelationSet set = RelationSet::kSl2Level1;
  Rational cutoff;
  std::size_t relations = 0;
  std::size_t safe_states = 0;  // counted at depth 1
  // Fitted scalars of the realization, e.g. "J-" -> -1.
  std::map<std::string, CycNum> normalization;
  std::optional<RelationFailure> first_failure;
  bool pass() const { return !first_failure.has_value(); }
};

// Builds both sides of every bracket among generator modes with
// |index| <= 1 and compares them on states with level + 1 <= cutoff.
RelationReport verify_relations(const Rational& cutoff, RelationSet set);
// Same, with the odd currents supplied by the caller.
RelationReport verify_relations(const Rational& cutoff, RelationSet set,
                                const std::function<Field(int sign, int x)>& odd_fields);

void to_json(nlohmann::json& j, const ModeMatrix& m);

}  // namespace vosa
