#include "vosa/classify.hpp"

#include "vosa/characters.hpp"
#include "vosa/theta.hpp"

#include <array>
#include <stdexcept>

namespace vosa {

JacobiSeries znsns_c12(int d, const Rational& trunc) {
  if (d < 0 || d > 24) throw std::invalid_argument("d out of range");
  return fermion_character(24, SectorLabel{Twist::kNS, 1}, trunc) + JacobiSeries::constant(CycNum(d - 24), trunc);
}

JacobiSeries signed_d4_theta(const Rational& trunc) {
  // Sum of (-1)^(x.x/2) q^(x.x/4) over D4.
  return theta(make_lattice("D_4"), std::nullopt, SignCharacter::norm_parity(Rational(1, 2)), 2 * trunc)
      .scale_q(Rational(1, 2))
      .truncated(trunc);
}

namespace {

// Solves a 3x3 rational system in place; false when singular.
bool solve3(std::array<std::array<Rational, 4>, 3>& m) {
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    while (piv < 3 && m[piv][col] == 0) ++piv;
    if (piv == 3) return false;
    std::swap(m[piv], m[col]);
    for (int j = 3; j >= col; --j) m[col][j] /= m[col][col];
    for (int r = 0; r < 3; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = col; j < 4; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return true;
}

Rational rational_coeff(const JacobiSeries& s, int q24) {
  CycNum c = s.coeff24(q24, 0);
  if (!c.is_rational()) throw std::logic_error("non-rational coefficient");
  return c.rational_value();
}

}  // namespace

Weight2Match weight2_match(int d, const Rational& trunc) {
  if (d < 0 || d >= 24) throw std::invalid_argument("d out of range");
  if (trunc < 1) throw std::domain_error("matching failed");
  const JacobiSeries z = znsns_c12(d, trunc);
  const JacobiSeries c_part = CycNum(-2) * z.qderiv();
  const JacobiSeries d_part = signed_d4_theta(trunc);
  // The trace term is kappa q^(1/2) + O(q); only exponents below 1 are
  // known on both sides.
  const JacobiSeries kappa_part = JacobiSeries::monomial(CycNum(1), Rational(1, 2), 0, trunc);
  const JacobiSeries rhs = CycNum(Rational(-1, 12)) * (eisenstein_e2(trunc) * z);

  // Rows: q^(-1/2), q^0, q^(1/2); unknowns C, D, kappa.
  std::array<std::array<Rational, 4>, 3> m{};
  const int exps[3] = {-12, 0, 12};
  for (int r = 0; r < 3; ++r) {
    m[r][0] = rational_coeff(c_part, exps[r]);
    m[r][1] = rational_coeff(d_part, exps[r]);
    m[r][2] = -rational_coeff(kappa_part, exps[r]);
    m[r][3] = rational_coeff(rhs, exps[r]);
  }
  if (!solve3(m)) throw std::domain_error("matching failed");
  return {d, m[0][3], m[1][3], m[2][3], trunc};
}

// ---- dual Coxeter scan ---------------------------------------------------

int dual_coxeter(Family f, int rank) {
  switch (f) {
    case Family::kA:
      return rank + 1;
    case Family::kB:
      return 2 * rank - 1;
    case Family::kC:
      return rank + 1;
    case Family::kD:
      return 2 * rank - 2;
    case Family::kE6:
      return 12;
    case Family::kE7:
      return 18;
    case Family::kE8:
      return 30;
    case Family::kF4:
      return 9;
    case Family::kG2:
      return 4;
  }
  return 0;
}

std::string SimpleType::name() const {
  switch (family) {
    case Family::kA:
      return "A" + std::to_string(rank);
    case Family::kB:
      return "B" + std::to_string(rank);
    case Family::kC:
      return "C" + std::to_string(rank);
    case Family::kD:
      return "D" + std::to_string(rank);
    case Family::kE6:
      return "E6";
    case Family::kE7:
      return "E7";
    case Family::kE8:
      return "E8";
    case Family::kF4:
      return "F4";
    case Family::kG2:
      return "G2";
  }
  return "?";
}

bool operator==(const SimpleType& a, const SimpleType& b) {
  return a.family == b.family && a.rank == b.rank && a.dual_coxeter == b.dual_coxeter;
}

std::vector<SimpleType> simple_types(int max_rank) {
  std::vector<SimpleType> out;
  auto add = [&](Family f, int rank) {
    if (rank <= max_rank) out.push_back({f, rank, dual_coxeter(f, rank)});
  };
  // B1 = C1 = A1, C2 = B2, D2 = A1 + A1 (not simple), D3 = A3.
  for (int n = 1; n <= max_rank; ++n) add(Family::kA, n);
  for (int n = 2; n <= max_rank; ++n) add(Family::kB, n);
  for (int n = 3; n <= max_rank; ++n) add(Family::kC, n);
  for (int n = 4; n <= max_rank; ++n) add(Family::kD, n);
  add(Family::kE6, 6);
  add(Family::kE7, 7);
  add(Family::kE8, 8);
  add(Family::kF4, 4);
  add(Family::kG2, 2);
  return out;
}

std::vector<ScanHit> enumerate_solutions(int d) {
  if (d < 0 || d >= 24) throw std::invalid_argument("d out of range");
  std::vector<ScanHit> hits;
  // rank <= 12 - d/2
  const int budget = (24 - d) / 2;
  for (const auto& t : simple_types(budget)) {
    const int h = 22 + d;
    if (t.dual_coxeter % h == 0) hits.push_back({d, t, t.dual_coxeter / h});
  }
  return hits;
}

std::vector<ScanHit> enumerate_solutions() {
  std::vector<ScanHit> hits;
  for (int d = 0; d < 24; ++d)
    for (auto& h : enumerate_solutions(d)) hits.push_back(h);
  return hits;
}

void to_json(nlohmann::json& j, const Weight2Match& m) {
  j = {{"d", m.d},
       {"C", to_string(m.c_coeff)},
       {"D", to_string(m.d_coeff)},
       {"kappa", to_string(m.kappa_coeff)},
       {"trunc", to_string(m.trunc)}};
}

void to_json(nlohmann::json& j, const ScanHit& h) { j = {{"d", h.d}, {"type", h.type.name()}, {"level", h.level}}; }

}  // namespace vosa
