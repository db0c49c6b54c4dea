#pragma once

#include "vosa/cyclotomic.hpp"
#include "vosa/rational.hpp"

#include <nlohmann/json.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vosa {

// Structure constant of the small N=4 algebra, i in 1..3, a, b in 0..3.
// Throws std::out_of_range for bad indices.
Rational alpha(int i, int a, int b);

enum class ModeKind { kL, kG, kJ };

// A single generator mode.  The mode index is stored doubled so that the
// half-integral G indices stay integral.
struct Mode {
  ModeKind kind = ModeKind::kL;
  int upper = 0;  // a in 0..3 for G, i in 1..3 for J, unused for L
  int twice_index = 0;

  static Mode L(int m) { return {ModeKind::kL, 0, 2 * m}; }
  static Mode J(int i, int m) { return {ModeKind::kJ, i, 2 * m}; }
  // r given doubled: G(a, 1) is G^a_{1/2}.
  static Mode G(int a, int twice_r) { return {ModeKind::kG, a, twice_r}; }

  Rational index() const { return Rational(twice_index, 2); }
  bool odd() const { return kind == ModeKind::kG; }
  bool valid() const;
  std::string name() const;
  auto operator<=>(const Mode&) const = default;
};

// Monomial c^p k^q in the formal central charge and level.
using CentralMonomial = std::pair<int, int>;

// Finite linear combination of modes plus a polynomial in c and k.
class ModeTerm {
 public:
  ModeTerm() = default;
  static ModeTerm mode(const Mode& m, const CycNum& coeff = CycNum(1));
  static ModeTerm scalar(const CycNum& coeff, int c_power = 0, int k_power = 0);

  const std::map<Mode, CycNum>& modes() const { return modes_; }
  const std::map<CentralMonomial, CycNum>& central() const { return central_; }
  bool is_zero() const { return modes_.empty() && central_.empty(); }
  CycNum coeff(const Mode& m) const;
  CycNum central_coeff(int c_power, int k_power) const;

  ModeTerm& operator+=(const ModeTerm& o);
  ModeTerm& operator-=(const ModeTerm& o);
  friend ModeTerm operator+(ModeTerm a, const ModeTerm& b) { return a += b; }
  friend ModeTerm operator-(ModeTerm a, const ModeTerm& b) { return a -= b; }
  friend ModeTerm operator*(const CycNum& s, const ModeTerm& a);
  ModeTerm operator-() const { return CycNum(-1) * *this; }
  bool operator==(const ModeTerm& o) const { return modes_ == o.modes_ && central_ == o.central_; }

  // Replaces c by 6k.
  ModeTerm with_c_equal_6k() const;
  // Substitutes numeric values for c and k in the central part.
  ModeTerm specialized(const Rational& c, const Rational& k) const;
  std::string to_string() const;

 private:
  void add_mode(const Mode& m, const CycNum& c);
  void add_central(const CentralMonomial& key, const CycNum& c);
  std::map<Mode, CycNum> modes_;
  std::map<CentralMonomial, CycNum> central_;
};

// Graded commutator: anticommutator iff both modes are odd.
ModeTerm bracket(const Mode& x, const Mode& y);
// Bilinear extension; central parts bracket to zero.
ModeTerm bracket(const ModeTerm& x, const ModeTerm& y);

// Alternative bases for the currents and the odd generators.
ModeTerm j_cartan(int m);               // J = -2i J^1
ModeTerm j_raise(int sign, int m);      // J^+ (sign = +1) or J^- (sign = -1)
ModeTerm g_charged(int sign, int x, int twice_r);  // G^{+-, x}_r

// Basis modes with |index| <= window.
std::vector<Mode> mode_basis(int window);

struct JacobiResidual {
  Mode x, y, z;
  ModeTerm residual;
};
struct JacobiReport {
  int window = 0;
  std::size_t triples = 0;
  std::optional<JacobiResidual> first_failure;
  bool pass() const { return !first_failure.has_value(); }
};
// Graded Jacobi identity [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]] for
// every ordered triple of basis modes in the window, with c = 6k.
JacobiReport jacobi_check(int window);
ModeTerm jacobi_residual(const Mode& x, const Mode& y, const Mode& z);

// Spectral flow on L, J^1, J^2, J^3 (equivalently L, J, J^+, J^-) with the
// level kept formal.  Throws std::invalid_argument("unsupported mode") for
// odd modes.
ModeTerm spectral_flow(int ell, const ModeTerm& x);

struct LemmaReport {
  ModeTerm square;               // (G^{+,1}_{-1/2} + G^{-,2}_{1/2})^2
  // Each charged odd mode is a sum of two generators with unit-modulus
  // coefficients, so its anticommutator with its conjugate is twice that of
  // a single generator.  Rescaling both summands by 1/sqrt(2) halves the
  // square; this is the result in the generators' own normalization.
  ModeTerm normalized_square;
  ModeTerm flowed_shifted;       // 2 sigma^{-1}(L_0 - c/24) with c = 6k
  bool only_l0_j0 = false;       // no other modes and no central remainder
  // square = multiple * (2L_0 - J_0) when such a rational multiple exists.
  std::optional<Rational> multiple;
  int sign_vs_2l0_minus_j0 = 0;  // sign of multiple, 0 if none
  bool equals_flowed = false;
};
LemmaReport lemma_g0_square();

void to_json(nlohmann::json& j, const ModeTerm& t);

}  // namespace vosa
