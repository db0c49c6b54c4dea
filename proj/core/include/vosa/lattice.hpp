#pragma once

#include "vosa/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace vosa {

using RMat = std::vector<RVec>;

// A full-rank lattice inside its rational span, given by basis rows in a
// rational ambient space.
class Lattice {
 public:
  Lattice() = default;
  // Rows must be linearly independent.
  static Lattice from_basis(RMat rows);
  // Any finite generating set; reduced to a basis by integer row reduction.
  static Lattice from_generators(const RMat& gens);

  int rank() const { return static_cast<int>(basis_.size()); }
  int dim() const { return basis_.empty() ? 0 : static_cast<int>(basis_[0].size()); }
  const RMat& basis() const { return basis_; }
  RMat gram() const;
  Rational determinant() const;
  bool is_integral() const;
  bool is_even() const;
  // Coordinates in the basis if x lies in the rational span.
  bool span_coordinates(const RVec& x, RVec& coords) const;
  bool contains(const RVec& x) const;
  bool contains(const Lattice& sub) const;

 private:
  RMat basis_;
};

Lattice direct_sum(const Lattice& a, const Lattice& b);

// L + shift.
struct Coset {
  Lattice lattice;
  RVec shift;

  bool contains(const RVec& x) const;
};

Coset direct_sum(const Coset& a, const Coset& b);
Coset lattice_coset(const Lattice& l);

// Builds the named lattice or coset.  Accepted names: "Z^n", "D_n",
// "D_n+[i]" (i in 0..3), "D_n+" (n divisible by 4), "A1^n", "sqrt3Z^n",
// "E8".  A1 and sqrt3Z are realized as (1,1) and (1,1,1) blocks.
Coset make_lattice(const std::string& spec);

// The glue vector [i] of D_n.
RVec d_glue(int n, int i);
// A1^{2n} inside D_{2n}: rows e_i + e_{n+i} for i <= n, then e_i - e_{n+i}.
Lattice a1_in_d(int n);

// Symmetric rational matrix on the ambient space, restricted to a coset:
// value on the point y/den is y^T m y / den.
struct IntQuadForm {
  std::vector<std::vector<std::int64_t>> m;
  std::int64_t den = 1;
  Rational eval(const std::vector<std::int64_t>& y) const;
  std::int64_t raw(const std::vector<std::int64_t>& y) const;
};
struct IntLinForm {
  std::vector<std::int64_t> c;
  std::int64_t den = 1;
  Rational eval(const std::vector<std::int64_t>& y) const;
  std::int64_t raw(const std::vector<std::int64_t>& y) const;
};

// Exact enumeration of coset points by norm.  A point is stored as the
// integer vector y with x = sum_i (y_i / yden) b_i.
class CosetPoints {
 public:
  explicit CosetPoints(const Coset& c);

  int rank() const { return rank_; }
  std::int64_t yden() const { return yden_; }
  // Norm x.x.
  const IntQuadForm& norm() const { return norm_; }
  // x^T m x for an ambient symmetric matrix m.
  IntQuadForm quad(const RMat& m) const;
  // x.v
  IntLinForm lin(const RVec& v) const;
  RVec point(const std::vector<std::int64_t>& y) const;
  // Calls f on every point with norm <= max_norm (Fincke-Pohst search with
  // an exact final test).
  void for_each(const Rational& max_norm, const std::function<void(const std::vector<std::int64_t>&)>& f) const;

 private:
  Coset coset_;
  int rank_ = 0;
  std::int64_t yden_ = 1;
  std::vector<std::int64_t> yshift_;  // yden * shift coordinates
  IntQuadForm norm_;
  std::vector<std::vector<double>> chol_;  // upper factor with unit diagonal
  std::vector<double> diag_;
};

// All points of c with norm <= max_norm, sorted.
std::vector<RVec> short_vectors(const Coset& c, const Rational& max_norm);

void to_json(nlohmann::json& j, const Lattice& l);
void to_json(nlohmann::json& j, const Coset& c);

}  // namespace vosa
