#include "bulk_detail.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace vosa {

JacobiSeries phi01(const Rational& trunc) {
  const Rational depth = trunc + 1;
  const Coset z1 = make_lattice("Z^1");
  Coset half = z1;
  half.shift = {Rational(1, 2)};
  const Marking m{{Rational(1)}, 2};
  const JacobiSeries thetas[3] = {
      theta(half, m, SignCharacter::trivial(), depth),
      theta(z1, m, SignCharacter::trivial(), depth),
      theta(z1, m, SignCharacter::norm_parity(1), depth),
  };
  JacobiSeries sum = JacobiSeries::zero(depth, 2);
  for (const auto& th : thetas) {
    JacobiSeries at_one = th.specialize_z1();
    sum += th.pow(2) * at_one.pow(2).inverse();
  }
  return (CycNum(4) * sum).truncated(trunc).normalized_zscale();
}

GenusReport elliptic_genus(const BulkDecomposition& b, const Rational& trunc) {
  if (!b.supersymmetric || !b.left_marking || !b.right_marking) throw std::invalid_argument("no N=2 marking");
  GenusReport rep;
  rep.example = b.example;
  rep.index = dot(b.left_marking->v, b.left_marking->v) / 2;

  detail::SideCharacters ch(b, trunc);
  std::map<int, JacobiSeries> by_right_level;
  for (const auto& s : b.summands) {
    if (s.sector != BulkSector::kRR) continue;
    const CycNum k = detail::supertrace_scalar(b, s);
    const JacobiSeries& l = ch.get(s.left, true, true);
    JacobiSeries r = ch.get(s.right, false, true).specialize_z1();
    for (const auto& t : r.terms()) {
      JacobiSeries part = (k * t.c) * l;
      auto it = by_right_level.find(t.q);
      if (it == by_right_level.end()) by_right_level.emplace(t.q, std::move(part));
      else it->second += part;
    }
  }

  rep.holomorphic = true;
  for (const auto& [q, e] : by_right_level) {
    if (q != 0 && !e.empty()) {
      rep.holomorphic = false;
      if (!rep.first_mismatch) rep.first_mismatch = "right level " + to_string(from_q24(q)) + " survives";
    }
  }
  auto it = by_right_level.find(0);
  rep.genus = it == by_right_level.end() ? JacobiSeries::zero(trunc, b.left_marking->zscale) : it->second;
  rep.genus = rep.genus.normalized_zscale();

  // z -> 1 must leave a constant (the Witten index).
  JacobiSeries at_one = rep.genus.specialize_z1();
  rep.z1_constant = true;
  for (const auto& t : at_one.terms())
    if (t.q != 0) rep.z1_constant = false;
  if (rep.z1_constant) rep.z1_value = at_one.coeff24(0, 0);

  // c(n, l) = c(n + l + m, l + 2m) for index m, checked both ways.
  const JacobiSeries& e = rep.genus;
  const int zs = e.zscale();
  const Rational twice_m = 2 * rep.index * zs;
  rep.elliptic_shift = twice_m.denominator() == 1;
  if (rep.elliptic_shift) {
    const int dz = static_cast<int>(twice_m.numerator());
    for (const auto& t : e.terms()) {
      for (int dir : {1, -1}) {
        Rational ell = Rational(t.z, zs);
        Rational target_q = from_q24(t.q) + dir * ell + rep.index;
        if (target_q >= e.trunc()) continue;
        int target_z = t.z + dir * dz;
        if (e.coeff24(to_q24(target_q), target_z) != t.c) {
          rep.elliptic_shift = false;
          if (!rep.first_mismatch) rep.first_mismatch = "elliptic shift at q^" + to_string(from_q24(t.q));
        }
      }
    }
  }

  if (e.empty()) {
    rep.matches_weak_jacobi = true;
  } else if (rep.index == 1) {
    JacobiSeries phi = phi01(e.trunc());
    JacobiSeries ee = e.with_zscale(std::lcm(zs, phi.zscale()));
    phi = phi.with_zscale(ee.zscale());
    CycNum a = ee.coeff24(0, -ee.zscale());
    rep.matches_weak_jacobi = ee.agrees_with(a * phi);
    if (!*rep.matches_weak_jacobi && !rep.first_mismatch) rep.first_mismatch = "not a multiple of phi_{0,1}";
  }
  return rep;
}

void to_json(nlohmann::json& j, const GenusReport& r) {
  j = {{"example", r.example},
       {"check", "elliptic genus"},
       {"genus", r.genus},
       {"holomorphic", r.holomorphic},
       {"z1_constant", r.z1_constant},
       {"z1_value", r.z1_value ? nlohmann::json(*r.z1_value) : nlohmann::json(nullptr)},
       {"index", to_string(r.index)},
       {"elliptic_shift", r.elliptic_shift},
       {"matches_weak_jacobi", r.matches_weak_jacobi ? nlohmann::json(*r.matches_weak_jacobi) : nlohmann::json(nullptr)},
       {"pass", r.holomorphic && r.z1_constant && r.elliptic_shift && r.matches_weak_jacobi.value_or(true)},
       {"first_mismatch", r.first_mismatch ? nlohmann::json(*r.first_mismatch) : nlohmann::json(nullptr)}};
}

}  // namespace vosa
