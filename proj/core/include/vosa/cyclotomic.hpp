#pragma once

#include "vosa/rational.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <complex>
#include <cstdint>
#include <string>

namespace vosa {

// Element of Q(zeta) with zeta = exp(2 pi i / 24), stored as
// (a_0 + a_1 zeta + ... + a_7 zeta^7) / den in the power basis.  The
// minimal polynomial of zeta is x^8 - x^4 + 1.  All arithmetic is exact;
// intermediate products that leave the int64 range raise
// std::overflow_error("coefficient overflow").
class CycNum {
 public:
  static constexpr int kDegree = 8;
  static constexpr int kOrder = 24;

  CycNum() = default;
  CycNum(std::int64_t v);  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& r);  // NOLINT(google-explicit-constructor)
  CycNum(const std::array<std::int64_t, kDegree>& num, std::int64_t den);

  static CycNum zeta(int k);  // exp(2 pi i k / 24)
  static CycNum imag_unit() { return zeta(6); }
  static CycNum sqrt2();
  static CycNum sqrt3();

  const std::array<std::int64_t, kDegree>& numerators() const { return num_; }
  std::int64_t denominator() const { return den_; }
  Rational coeff(int k) const { return Rational(num_[k], den_); }

  bool is_zero() const;
  bool is_rational() const;
  // Valid only when is_rational().
  Rational rational_value() const { return Rational(num_[0], den_); }

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  // Field automorphism zeta -> zeta^a for a coprime to 24.
  CycNum galois(int a) const;
  CycNum conj() const { return galois(23); }
  // Throws std::domain_error("division by zero") for 0.
  CycNum inverse() const;
  CycNum pow(int e) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  void normalize();
  std::array<std::int64_t, kDegree> num_{};
  std::int64_t den_ = 1;
};

void to_json(nlohmann::json& j, const CycNum& c);
void from_json(const nlohmann::json& j, CycNum& c);

}  // namespace vosa
