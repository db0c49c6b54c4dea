#pragma once

#include "vosa/series.hpp"

#include <complex>

namespace vosa {

using Complex = std::complex<double>;

struct EvalPoint {
  Complex u;
  Complex tau;
};

struct NumericValue {
  Complex value;
  double tail_bound = 0.0;  // majorant for the omitted terms at and beyond trunc
};

struct EvalOptions {
  double tol = 1e-6;
  double im_floor = 0.5;
  // Evaluate at (-conj(u), -conj(tau)), which realizes an antiholomorphic
  // factor from its holomorphic series.
  bool antiholomorphic = false;
};

// Evaluates sum c z^l q^n at the point.  Throws
// std::domain_error("insufficient truncation") when the tail bound exceeds
// opts.tol and std::domain_error("point below imaginary floor") when
// Im(tau) < opts.im_floor.
NumericValue eval_numeric(const JacobiSeries& s, const EvalPoint& p, const EvalOptions& opts = {});

// Same evaluation without the tolerance check (the bound is still
// reported; it is +infinity when no geometric majorant exists).
NumericValue eval_with_bound(const JacobiSeries& s, const EvalPoint& p, bool antiholomorphic = false);

}  // namespace vosa
