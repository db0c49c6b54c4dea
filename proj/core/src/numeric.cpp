#include "vosa/numeric.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace vosa {

NumericValue eval_with_bound(const JacobiSeries& s, const EvalPoint& p, bool antiholomorphic) {
  Complex u = antiholomorphic ? -std::conj(p.u) : p.u;
  Complex tau = antiholomorphic ? -std::conj(p.tau) : p.tau;
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  const double zs = s.zscale();

  Complex total = 0.0;
  // Per unit q-interval: sum of |c| |z^a| (the q factor left out).
  std::map<long, double> block;
  for (const auto& t : s.terms()) {
    double qexp = t.q / static_cast<double>(kQRes);
    Complex zfac = std::exp(two_pi_i * u * (t.z / zs));
    Complex qfac = std::exp(two_pi_i * tau * qexp);
    Complex c = t.c.to_complex();
    total += c * zfac * qfac;
    block[static_cast<long>(std::floor(qexp))] += std::abs(c) * std::abs(zfac);
  }

  double T = s.trunc24() / static_cast<double>(kQRes);
  double absq = std::exp(-2.0 * std::numbers::pi * tau.imag());
  NumericValue out{total, 0.0};
  if (block.empty()) {
    // Nothing known below trunc: treat the tail as a unit-size block.
    block[static_cast<long>(std::floor(T)) - 1] = 1.0;
  }
  auto last = std::prev(block.end());
  double m = last->second;
  double growth = 0.0;
  for (auto it = last; it != block.begin();) {
    auto prev = std::prev(it);
    if (prev->second > 0.0) {
      double gap = static_cast<double>(it->first - prev->first);
      growth = std::max(growth, std::pow(it->second / prev->second, 1.0 / gap));
    }
    it = prev;
    if (std::distance(it, last) >= 2) break;
  }
  double r = std::max(2.0, 2.0 * growth);
  // The last block may sit below T - 1 (sparse series); carry it forward.
  double lag = std::max(0.0, T - 1.0 - static_cast<double>(last->first));
  m *= std::pow(r, std::ceil(lag));
  if (r * absq >= 1.0) {
    out.tail_bound = std::numeric_limits<double>::infinity();
    return out;
  }
  out.tail_bound = m * r * std::pow(absq, T) / (1.0 - r * absq);
  return out;
}

NumericValue eval_numeric(const JacobiSeries& s, const EvalPoint& p, const EvalOptions& opts) {
  if (p.tau.imag() < opts.im_floor) throw std::domain_error("point below imaginary floor");
  NumericValue v = eval_with_bound(s, p, opts.antiholomorphic);
  if (!(v.tail_bound <= opts.tol)) throw std::domain_error("insufficient truncation");
  return v;
}

}  // namespace vosa
