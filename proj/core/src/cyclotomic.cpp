#include "vosa/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace vosa {
namespace {

using i128 = __int128;
constexpr int kD = CycNum::kDegree;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("coefficient overflow");
  return static_cast<std::int64_t>(v);
}

// Reduces a polynomial of degree < 2*kD - 1 modulo x^8 - x^4 + 1 in place.
void reduce(std::array<i128, 2 * kD - 1>& p) {
  for (int d = 2 * kD - 2; d >= kD; --d) {
    p[d - 4] += p[d];
    p[d - 8] -= p[d];
    p[d] = 0;
  }
}

CycNum from_wide(const std::array<i128, 2 * kD - 1>& p, i128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  i128 g = den;
  for (int k = 0; k < kD; ++k) g = gcd128(g, p[k]);
  if (den < 0) g = -g;
  std::array<std::int64_t, kD> out{};
  for (int k = 0; k < kD; ++k) out[k] = narrow(p[k] / g);
  return CycNum(out, narrow(den / g));
}

}  // namespace

CycNum::CycNum(std::int64_t v) { num_[0] = v; }

CycNum::CycNum(const Rational& r) {
  num_[0] = r.numerator();
  den_ = r.denominator();
}

CycNum::CycNum(const std::array<std::int64_t, kDegree>& num, std::int64_t den)
    : num_(num), den_(den) {
  if (den == 0) throw std::domain_error("division by zero");
  normalize();
}

void CycNum::normalize() {
  i128 g = den_;
  for (auto a : num_) g = gcd128(g, a);
  if (den_ < 0) g = -g;
  if (g != 1) {
    for (auto& a : num_) a = narrow(a / g);
    den_ = narrow(den_ / g);
  }
}

CycNum CycNum::zeta(int k) {
  k %= kOrder;
  if (k < 0) k += kOrder;
  std::array<i128, 2 * kD - 1> p{};
  // zeta^k for k < 15 fits the wide buffer directly; higher powers use
  // zeta^12 = -1.
  int sign = 1;
  if (k >= 12) {
    k -= 12;
    sign = -1;
  }
  p[k] = sign;
  reduce(p);
  return from_wide(p, 1);
}

CycNum CycNum::sqrt2() { return zeta(3) + zeta(21); }
CycNum CycNum::sqrt3() { return zeta(2) + zeta(22); }

bool CycNum::is_zero() const {
  for (auto a : num_)
    if (a != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (int k = 1; k < kD; ++k)
    if (num_[k] != 0) return false;
  return true;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& a : r.num_) {
    if (a == INT64_MIN) throw std::overflow_error("coefficient overflow");
    a = -a;
  }
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == 1 && o.den_ == 1 && is_rational() && o.is_rational()) {
    std::int64_t v;
    if (__builtin_add_overflow(num_[0], o.num_[0], &v)) throw std::overflow_error("coefficient overflow");
    num_[0] = v;
    return *this;
  }
  std::array<i128, 2 * kD - 1> p{};
  if (den_ == o.den_) {
    for (int k = 0; k < kD; ++k) p[k] = static_cast<i128>(num_[k]) + o.num_[k];
    return *this = from_wide(p, den_);
  }
  for (int k = 0; k < kD; ++k)
    p[k] = static_cast<i128>(num_[k]) * o.den_ + static_cast<i128>(o.num_[k]) * den_;
  return *this = from_wide(p, static_cast<i128>(den_) * o.den_);
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (den_ == 1 && o.den_ == 1 && is_rational() && o.is_rational()) {
    std::int64_t v;
    if (__builtin_mul_overflow(num_[0], o.num_[0], &v)) throw std::overflow_error("coefficient overflow");
    num_[0] = v;
    return *this;
  }
  std::array<i128, 2 * kD - 1> p{};
  if (o.is_rational()) {
    for (int k = 0; k < kD; ++k) p[k] = static_cast<i128>(num_[k]) * o.num_[0];
  } else if (is_rational()) {
    for (int k = 0; k < kD; ++k) p[k] = static_cast<i128>(o.num_[k]) * num_[0];
  } else {
    for (int a = 0; a < kD; ++a) {
      if (num_[a] == 0) continue;
      for (int b = 0; b < kD; ++b) p[a + b] += static_cast<i128>(num_[a]) * o.num_[b];
    }
    reduce(p);
  }
  return *this = from_wide(p, static_cast<i128>(den_) * o.den_);
}

CycNum CycNum::galois(int a) const {
  a %= kOrder;
  if (a < 0) a += kOrder;
  if (std::gcd(a, kOrder) != 1) throw std::invalid_argument("not a Galois exponent");
  CycNum r;
  r.den_ = 1;
  for (int k = 0; k < kD; ++k) {
    if (num_[k] == 0) continue;
    r += CycNum(num_[k]) * zeta(a * k);
  }
  r *= CycNum(Rational(1, den_));
  return r;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return CycNum(Rational(den_, 1) / num_[0]);
  CycNum others(1);
  for (int a : {5, 7, 11, 13, 17, 19, 23}) others *= galois(a);
  CycNum norm = others * *this;
  if (!norm.is_rational()) throw std::logic_error("norm not rational");
  return others * CycNum(Rational(1) / norm.rational_value());
}

CycNum CycNum::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> s = 0;
  for (int k = 0; k < kD; ++k) {
    if (num_[k] == 0) continue;
    double ang = 2.0 * std::numbers::pi * k / kOrder;
    s += static_cast<double>(num_[k]) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s / static_cast<double>(den_);
}

std::string CycNum::to_string() const {
  if (is_rational()) return vosa::to_string(rational_value());
  std::string s = "(";
  bool first = true;
  for (int k = 0; k < kD; ++k) {
    if (num_[k] == 0) continue;
    if (!first) s += num_[k] < 0 ? " - " : " + ";
    else if (num_[k] < 0) s += "-";
    first = false;
    std::int64_t a = num_[k] < 0 ? -num_[k] : num_[k];
    if (k == 0) s += std::to_string(a);
    else {
      if (a != 1) s += std::to_string(a) + "*";
      s += "w";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  s += ")";
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

void to_json(nlohmann::json& j, const CycNum& c) {
  j = nlohmann::json::array();
  for (int k = 0; k < CycNum::kDegree; ++k) {
    Rational r = c.coeff(k);
    j.push_back({r.numerator(), r.denominator()});
  }
}

void from_json(const nlohmann::json& j, CycNum& c) {
  if (!j.is_array() || j.size() != CycNum::kDegree) throw std::invalid_argument("bad cyclotomic json");
  std::array<Rational, CycNum::kDegree> parts;
  std::int64_t den = 1;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& e = j.at(k);
    parts[k] = Rational(e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>());
    den = lcm64(den, parts[k].denominator());
  }
  std::array<std::int64_t, CycNum::kDegree> num{};
  for (std::size_t k = 0; k < parts.size(); ++k)
    num[k] = parts[k].numerator() * (den / parts[k].denominator());
  c = CycNum(num, den);
}

}  // namespace vosa
