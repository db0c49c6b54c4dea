#pragma once

#include "vosa/cyclotomic.hpp"
#include "vosa/rational.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace vosa {

// One stored coefficient: c * z^(z / zscale) * q^(q / 24).
struct SeriesTerm {
  int q = 0;
  int z = 0;
  CycNum c;
};

// Truncated Laurent series in q (exponents in (1/24)Z, bounded below) and
// z (exponents in (1/zscale)Z).  Every coefficient with q-exponent below
// trunc is exact; nothing at or above trunc is known.  Terms are kept
// sorted by (q, z) with zero coefficients removed.
class JacobiSeries {
 public:
  JacobiSeries() = default;
  JacobiSeries(int trunc24, int zscale) : trunc_(trunc24), zscale_(zscale) {}

  static JacobiSeries zero(const Rational& trunc, int zscale = 1);
  static JacobiSeries constant(const CycNum& c, const Rational& trunc);
  static JacobiSeries monomial(const CycNum& c, const Rational& qexp, int zexp,
                               const Rational& trunc, int zscale = 1);
  // Merges duplicate keys, drops zeros and anything at or beyond trunc.
  static JacobiSeries from_terms(std::vector<SeriesTerm> terms, int trunc24, int zscale = 1);

  const std::vector<SeriesTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int trunc24() const { return trunc_; }
  Rational trunc() const { return from_q24(trunc_); }
  int zscale() const { return zscale_; }
  // Least common denominator of all stored q-exponents and trunc.
  int qden() const;
  // Smallest stored q-exponent (units of 1/24); trunc for the zero series.
  int valuation24() const;
  Rational valuation() const { return from_q24(valuation24()); }

  CycNum coeff24(int q24, int z) const;
  CycNum coeff(const Rational& q, int z) const { return coeff24(to_q24(q), z); }
  // Coefficients at a fixed q-level, as (z, c) pairs.
  std::vector<std::pair<int, CycNum>> level(int q24) const;

  // Re-expresses z exponents over a finer denominator (multiple of zscale).
  JacobiSeries with_zscale(int s) const;
  // Reduces zscale to the smallest value compatible with the exponents.
  JacobiSeries normalized_zscale() const;
  JacobiSeries truncated(const Rational& t) const;
  JacobiSeries truncated24(int t) const;
  // Substitutes z = 1.
  JacobiSeries specialize_z1() const;
  // Substitutes z -> -z when every z exponent is an integer, and more
  // generally z^(a) -> exp(pi i a) z^(a) for a in (1/12)Z.
  JacobiSeries twist_z_sign() const;
  JacobiSeries conj_coeffs() const;

  JacobiSeries operator-() const;
  JacobiSeries& operator+=(const JacobiSeries& o);
  JacobiSeries& operator-=(const JacobiSeries& o);
  friend JacobiSeries operator+(JacobiSeries a, const JacobiSeries& b) { return a += b; }
  friend JacobiSeries operator-(JacobiSeries a, const JacobiSeries& b) { return a -= b; }
  friend JacobiSeries operator*(const JacobiSeries& a, const JacobiSeries& b);
  friend JacobiSeries operator*(const JacobiSeries& a, const CycNum& c);
  friend JacobiSeries operator*(const CycNum& c, const JacobiSeries& a) { return a * c; }

  // Multiplies by c * q^(q24/24) * z^(z/zscale) exactly (trunc shifts too).
  JacobiSeries shifted(int q24, int z, const CycNum& c = CycNum(1)) const;
  // e >= 0, or e < 0 for a series whose lowest q-level is one monomial.
  JacobiSeries pow(int e) const;
  JacobiSeries inverse() const;
  // Multiplies each coefficient by its q-exponent.
  JacobiSeries qderiv() const;
  // q -> q^r for positive rational r.
  JacobiSeries scale_q(const Rational& r) const;
  // z -> z * q^a on every term.  The caller bounds the growth of z
  // exponents beyond trunc by |zexp| <= sqrt(4 * index * (qexp + offset)),
  // which is what a marked lattice character satisfies with index =
  // marking norm / 2 and offset = central charge / 24.  The returned
  // truncation is lowered accordingly.
  JacobiSeries substitute_z_shift(const Rational& a, const Rational& index,
                                  const Rational& offset) const;

  // Exact equality of stored data (terms, trunc, zscale after
  // normalization).
  bool operator==(const JacobiSeries& o) const;
  // True if both series agree on every coefficient below min(trunc).
  bool agrees_with(const JacobiSeries& o) const;
  // First (q24, z) where the two series differ below min(trunc), if any.
  std::optional<std::pair<int, int>> first_difference(const JacobiSeries& o) const;

  std::string to_string(int max_terms = 40) const;

 private:
  std::vector<SeriesTerm> terms_;
  int trunc_ = 0;
  int zscale_ = 1;
};

enum class ArithKind { kAdd, kMul, kPow, kQDeriv, kScalar };
using ArithOperand = std::variant<JacobiSeries, CycNum, int>;
// Single entry point for the arithmetic family; the operand kind must
// match the operation (series for add/mul, integer for pow, number for
// scalar, ignored for qderiv).
JacobiSeries series_arith(ArithKind kind, const JacobiSeries& a, const ArithOperand& b);

// eta(r tau) = q^(r/24) prod (1 - q^(r n)); r in {1/2, 1, 2, 3}.
JacobiSeries eta_scaled(const Rational& r, const Rational& trunc);
// prod_{n>=1} (1 - q^n)^e for any integer e, without the q^(1/24) prefactor.
JacobiSeries euler_power(int e, const Rational& trunc);
// 1 - 24 sum sigma_1(n) q^n.
JacobiSeries eisenstein_e2(const Rational& trunc);

void to_json(nlohmann::json& j, const JacobiSeries& s);
JacobiSeries series_from_json(const nlohmann::json& j, int zscale = 1);

}  // namespace vosa
