#include "vosa/characters.hpp"

#include <stdexcept>

namespace vosa {

std::string SectorLabel::name() const {
  return std::string(twist == Twist::kNS ? "NS" : "R") + (sign > 0 ? "+" : "-");
}

JacobiSeries divide_by_eta_power(const JacobiSeries& s, int rank, const Rational& trunc) {
  Rational pre(rank, kQRes);
  JacobiSeries inv = euler_power(-rank, trunc + pre);
  return (s * inv).shifted(-to_q24(pre), 0).truncated(trunc);
}

JacobiSeries lattice_vosa_character(const Coset& c, const SectorLabel& sector, const SignCharacter& parity,
                                    const std::optional<Marking>& marking, const Rational& trunc) {
  const int r = c.lattice.rank();
  const SignCharacter& s = sector.sign > 0 ? SignCharacter() : parity;
  JacobiSeries th = theta(c, marking, s, trunc + Rational(r, kQRes));
  return divide_by_eta_power(th, r, trunc);
}

JacobiSeries fermion_character(int n, const SectorLabel& sector, const Rational& trunc) {
  if (n < 1) throw std::invalid_argument("fermion count must be positive");
  if (sector.twist == Twist::kR) {
    if (n % 2 != 0) throw std::domain_error("unsupported");
    const int m = n / 2;
    Coset c = make_lattice("Z^" + std::to_string(m));
    c.shift.assign(m, Rational(1, 2));
    auto parity = SignCharacter::linear(RVec(m, Rational(1, 2)), Rational(m, 2));
    return lattice_vosa_character(c, sector, parity, std::nullopt, trunc);
  }
  // q^(-n/48) prod_k (1 +- q^(k - 1/2))^n
  Rational pre(n, 48);
  int pre24 = to_q24(pre);
  int t24 = to_q24(trunc + pre);
  std::vector<SeriesTerm> one{{0, 0, CycNum(1)}};
  JacobiSeries prod = JacobiSeries::from_terms(one, t24);
  for (int k = 12; k < t24; k += 24) {
    std::vector<SeriesTerm> f{{0, 0, CycNum(1)}, {k, 0, CycNum(sector.sign)}};
    prod = prod * JacobiSeries::from_terms(f, t24);
  }
  return prod.pow(n).shifted(-pre24, 0).truncated(trunc);
}

JacobiSeries n2_f(int s, const Rational& trunc) {
  int r = ((s % 6) + 6) % 6;
  Coset c = make_lattice("sqrt3Z^1");
  c.shift.assign(3, Rational(r, 6));
  Marking m{RVec(3, Rational(1, 3)), 6};
  JacobiSeries th = theta(c, m, SignCharacter::trivial(), trunc + Rational(1, kQRes)).twist_z_sign();
  return divide_by_eta_power(th, 1, trunc);
}

JacobiSeries sl2_level1_character(int j, const Rational& trunc) {
  if (j != 0 && j != 1) throw std::invalid_argument("level-1 weight must be 0 or 1");
  Coset c = make_lattice("A1^1");
  c.shift.assign(2, Rational(j, 2));
  Marking m{RVec(2, Rational(1)), 1};
  return lattice_vosa_character(c, SectorLabel{}, SignCharacter::trivial(), m, trunc);
}

FlowCharacterReport spectral_flow_character_check(int j, int ell, const Rational& trunc) {
  const int level = 1;
  FlowCharacterReport rep;
  rep.j = j;
  rep.ell = ell;
  rep.target_j = (ell % 2 == 0) ? j : 1 - j;
  rep.y_exponent = level;
  // The substitution lowers the reliable truncation by an amount that
  // depends on the z-range, so deepen the source until trunc is covered.
  Rational depth = trunc + Rational(ell * ell, 4) + 1;
  JacobiSeries flowed;
  for (int attempt = 0; attempt < 8; ++attempt, depth += trunc + 1) {
    JacobiSeries src = sl2_level1_character(j, depth);
    // Marking norm / 2 = 1 for v = (1, 1); offset c / 24 = 1 / 24.
    flowed = src.substitute_z_shift(Rational(ell, 2), Rational(1), Rational(1, 24))
                 .shifted(to_q24(Rational(level * ell * ell, 4)), level * ell);
    if (flowed.trunc() >= trunc) break;
  }
  JacobiSeries target = sl2_level1_character(rep.target_j, trunc);
  JacobiSeries lhs = flowed.truncated(std::min(flowed.trunc(), trunc));
  rep.trunc = lhs.trunc();
  auto diff = lhs.first_difference(target);
  rep.pass = !diff.has_value() && lhs.trunc() >= trunc;
  if (diff) rep.first_mismatch = std::make_pair(from_q24(diff->first), diff->second);
  return rep;
}

nlohmann::json character_json(const JacobiSeries& s, const SectorLabel& sector, const std::string& parity) {
  nlohmann::json j = s;
  j["metadata"] = {{"sector", sector.name()}, {"parity", parity}, {"zscale", s.zscale()}};
  return j;
}

}  // namespace vosa
