#include "vosa/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace vosa {

int to_q24(const Rational& r) {
  if (kQRes % r.denominator() != 0) throw std::domain_error("denominator overflow");
  std::int64_t v = r.numerator() * (kQRes / r.denominator());
  if (v > (1 << 28) || v < -(1 << 28)) throw std::overflow_error("exponent out of range");
  return static_cast<int>(v);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace vosa
