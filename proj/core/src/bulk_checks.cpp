#include "bulk_detail.hpp"

#include <cmath>
#include <numeric>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vosa {

namespace detail {

const JacobiSeries& SideCharacters::get(const BulkSide& s, bool left, bool twisted) {
  std::string key = (left ? "L|" : "R|") + s.label + (twisted ? "|tw" : "");
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const auto& m = left ? b_.left_marking : b_.right_marking;
  JacobiSeries ch = lattice_vosa_character(s.coset, SectorLabel{Twist::kNS, 1}, SignCharacter::trivial(), m, trunc_);
  if (twisted) ch = ch.twist_z_sign();
  return cache_.emplace(key, std::move(ch)).first->second;
}

int rr_phase(const BulkDecomposition& b) {
  Rational norms = 0;
  if (b.left_marking) norms += dot(b.left_marking->v, b.left_marking->v);
  if (b.right_marking) norms += dot(b.right_marking->v, b.right_marking->v);
  Rational e = -6 * norms;
  if (e.denominator() != 1) throw std::domain_error("phase outside the coefficient field");
  return static_cast<int>(((e.numerator() % 24) + 24) % 24);
}

CycNum supertrace_scalar(const BulkDecomposition& b, const BulkSummand& s) {
  CycNum k(s.sign);
  if (b.supersymmetric && s.sector == BulkSector::kRR) k *= CycNum::zeta(rr_phase(b));
  return k;
}

std::string series_key(const JacobiSeries& s) {
  JacobiSeries n = s.normalized_zscale();
  std::ostringstream os;
  os << n.trunc24() << '/' << n.zscale();
  for (const auto& t : n.terms()) {
    os << ';' << t.q << ',' << t.z << ':' << t.c.denominator();
    for (auto x : t.c.numerators()) os << ',' << x;
  }
  return os.str();
}

}  // namespace detail

namespace {

using detail::SideCharacters;
using detail::supertrace_scalar;

// Sums right factors sharing the same left factor up to a scalar; the
// left factor is stored with leading coefficient 1.
struct Grouped {
  std::map<std::string, std::pair<JacobiSeries, JacobiSeries>> by_left;

  void add(const JacobiSeries& l, const JacobiSeries& r) {
    if (l.empty()) return;
    const CycNum lead = l.terms().front().c;
    JacobiSeries unit = lead.inverse() * l;
    JacobiSeries scaled = lead * r;
    auto key = detail::series_key(unit);
    auto it = by_left.find(key);
    if (it == by_left.end()) by_left.emplace(key, std::make_pair(std::move(unit), std::move(scaled)));
    else it->second.second += scaled;
  }
  std::vector<std::pair<JacobiSeries, JacobiSeries>> terms() const {
    std::vector<std::pair<JacobiSeries, JacobiSeries>> out;
    for (const auto& [k, v] : by_left)
      if (!v.second.empty()) out.push_back(v);
    return out;
  }
};

Rational norm_of(const std::optional<Marking>& m) { return m ? dot(m->v, m->v) : Rational(0); }

}  // namespace

PartitionVector partition_vector(const BulkDecomposition& b, const Rational& trunc) {
  PartitionVector z;
  z.trunc = trunc;
  SideCharacters ch(b, trunc);
  std::array<Grouped, 4> g;
  for (const auto& s : b.summands) {
    if (s.sector == BulkSector::kNSR || s.sector == BulkSector::kRNS) continue;
    const int base = s.sector == BulkSector::kNSNS ? 0 : 2;
    const CycNum k = supertrace_scalar(b, s);
    g[base].add(ch.get(s.left, true, false), ch.get(s.right, false, false));
    if (b.supersymmetric)
      g[base + 1].add(ch.get(s.left, true, true), k * ch.get(s.right, false, true));
    else
      g[base + 1].add(ch.get(s.left, true, false), k * ch.get(s.right, false, false));
  }
  for (int i = 0; i < 4; ++i) z.entries[i] = g[i].terms();
  if (!b.supersymmetric) {
    z.entries[2] = z.entries[0];
    z.entries[3] = z.entries[1];
  }
  return z;
}

VectorValue evaluate(const PartitionVector& z, const EvalPoint& p, double tol) {
  (void)tol;
  VectorValue out;
  for (int i = 0; i < 4; ++i) {
    Complex sum = 0.0;
    for (const auto& [l, r] : z.entries[i]) {
      NumericValue a = eval_with_bound(l, p, false);
      NumericValue c = eval_with_bound(r, p, true);
      sum += a.value * c.value;
      out.tail_bound += std::abs(a.value) * c.tail_bound + std::abs(c.value) * a.tail_bound + a.tail_bound * c.tail_bound;
    }
    out.value[i] = sum;
  }
  return out;
}

std::vector<EvalPoint> default_points() {
  const double pi = std::numbers::pi;
  return {{0.0, Complex(0.0, 1.0)}, {0.0, std::exp(Complex(0.0, pi / 3))}, {0.0, Complex(0.3, 0.9)}};
}

namespace {

enum class Move { kS, kT };

double max_residual(const BulkDecomposition& b, const PartitionVector& z, const EvalPoint& p, Move move,
                    double tol, double& tail) {
  const double pi = std::numbers::pi;
  const IntMat4 m = move == Move::kS ? bold_s() : bold_t();
  EvalPoint image = move == Move::kS ? EvalPoint{p.u / p.tau, -1.0 / p.tau} : EvalPoint{p.u, p.tau + 1.0};
  if (p.tau.imag() < 0.5 || image.tau.imag() < 0.5) throw std::domain_error("point below imaginary floor");
  VectorValue here = evaluate(z, p, tol);
  VectorValue there = evaluate(z, image, tol);
  tail = std::max(here.tail_bound, there.tail_bound);
  Complex mult = 1.0;
  if (move == Move::kS) {
    const double vl = boost::rational_cast<double>(norm_of(b.left_marking));
    const double vr = boost::rational_cast<double>(norm_of(b.right_marking));
    mult = std::exp(Complex(0.0, -pi) *
                    (vl * p.u * p.u / p.tau - vr * std::conj(p.u) * std::conj(p.u) / std::conj(p.tau)));
  }
  double res = 0.0;
  for (int k = 0; k < 4; ++k) {
    Complex lhs = 0.0;
    for (int j = 0; j < 4; ++j) lhs += static_cast<double>(m[k][j]) * there.value[j];
    res = std::max(res, std::abs(mult * lhs - here.value[k]));
  }
  return res;
}

ModularReport run_modular(const BulkDecomposition& b, const ModularOptions& opts, Move move) {
  ModularReport rep;
  rep.example = b.example;
  rep.check = move == Move::kS ? "S" : "T";
  const auto points = opts.points.empty() ? default_points() : opts.points;
  Rational t = opts.trunc;
  for (;;) {
    PartitionVector z = partition_vector(b, t);
    double res = 0.0, tail = 0.0;
    std::optional<std::string> worst;
    for (std::size_t i = 0; i < points.size(); ++i) {
      double pt_tail = 0.0;
      double r = max_residual(b, z, points[i], move, opts.tol, pt_tail);
      tail = std::max(tail, pt_tail);
      if (r > res) {
        res = r;
        std::ostringstream os;
        os << "point " << i << " tau=" << points[i].tau << " residual " << r;
        worst = os.str();
      }
    }
    rep.residual = res;
    rep.tail_bound = tail;
    rep.trunc = t;
    if (tail <= opts.tol || t + 2 > opts.max_trunc) {
      rep.pass = tail <= opts.tol && res <= opts.tol;
      if (tail > opts.tol) rep.first_mismatch = "insufficient truncation";
      else if (!rep.pass) rep.first_mismatch = worst;
      return rep;
    }
    t += 2;
  }
}

// Classes (q exponent mod 1, parity exponent mod 24) of the lattice
// vectors of a side, parity exponent 12 * J_0 so that exp(pi i J_0) =
// zeta_24^that.
std::set<std::pair<int, int>> side_classes(const BulkSide& s, const std::optional<Marking>& m) {
  std::set<std::pair<int, int>> out;
  JacobiSeries th = theta(s.coset, m, SignCharacter::trivial(), 3);
  for (const auto& t : th.terms()) {
    if ((12 * t.z) % th.zscale() != 0) throw std::domain_error("phase outside the coefficient field");
    out.insert({((t.q % 24) + 24) % 24, (((12 * t.z / th.zscale()) % 24) + 24) % 24});
  }
  return out;
}

struct PairClass {
  int diff;    // L'_0 - L''_0 mod 1, units of 1/24
  int parity;  // supertrace phase exponent mod 24
};

std::vector<PairClass> pair_classes(const BulkDecomposition& b, const BulkSummand& s) {
  auto cl = side_classes(s.left, b.left_marking);
  auto cr = side_classes(s.right, b.right_marking);
  int extra = s.sign < 0 ? 12 : 0;
  if (b.supersymmetric && s.sector == BulkSector::kRR) extra += detail::rr_phase(b);
  std::set<std::pair<int, int>> seen;
  for (const auto& [ql, pl] : cl)
    for (const auto& [qr, pr] : cr) {
      int par = b.supersymmetric ? pl + pr + extra : extra;
      seen.insert({((ql - qr) % 24 + 24) % 24, par % 24});
    }
  std::vector<PairClass> out;
  for (const auto& [d, p] : seen) out.push_back({d, p});
  return out;
}

std::string describe_summand(const BulkSummand& s) {
  return sector_name(s.sector) + " " + s.left.label + " x " + s.right.label;
}

}  // namespace

ModularReport modular_check(const BulkDecomposition& b, const ModularOptions& opts) {
  return run_modular(b, opts, Move::kS);
}

ModularReport modular_t_check(const BulkDecomposition& b, const ModularOptions& opts) {
  return run_modular(b, opts, Move::kT);
}

ModularReport exact_t_check(const BulkDecomposition& b, const Rational& trunc) {
  ModularReport rep;
  rep.example = b.example;
  rep.check = "T exact";
  rep.trunc = trunc;
  const double pi = std::numbers::pi;
  auto phase = [&](int diff, int parity) { return std::polar(1.0, 2 * pi * (diff + parity) / 24.0); };
  for (const auto& s : b.summands) {
    if (s.sector == BulkSector::kNSR || s.sector == BulkSector::kRNS) continue;
    for (const auto& c : pair_classes(b, s)) {
      // NS-NS rows: parity times the T phase must be 1; R-R rows (and the
      // copied R-R entries of bosonic examples): the T phase alone.
      std::vector<double> errs;
      if (s.sector == BulkSector::kNSNS) {
        errs.push_back(std::abs(phase(c.diff, c.parity) - 1.0));
        if (!b.supersymmetric) errs.push_back(std::abs(phase(c.diff, 0) - 1.0));
      } else {
        errs.push_back(std::abs(phase(c.diff, 0) - 1.0));
      }
      for (double e : errs) {
        if (e > rep.residual) {
          rep.residual = e;
          if (!rep.first_mismatch)
            rep.first_mismatch = describe_summand(s) + ": class " + std::to_string(c.diff) + "/24, parity " +
                                 std::to_string(c.parity) + "/24";
        }
      }
    }
  }
  rep.pass = rep.residual < 1e-12;
  if (rep.pass) rep.first_mismatch.reset();
  return rep;
}

HypothesisReport hypothesis_check(const BulkDecomposition& b) {
  HypothesisReport rep;
  rep.example = b.example;
  std::set<int> even, odd, rr, all_classes;
  bool ok = true, signed_parity = true;
  auto violate = [&](const std::string& what) {
    ok = false;
    if (!rep.first_violation) rep.first_violation = what;
  };
  for (const auto& s : b.summands) {
    if (s.sector == BulkSector::kNSR || s.sector == BulkSector::kRNS) continue;
    bool has_even = false, has_odd = false;
    for (const auto& c : pair_classes(b, s)) {
      all_classes.insert(c.diff);
      if (c.parity != 0 && c.parity != 12) {
        signed_parity = false;
        violate(describe_summand(s) + ": parity not a sign");
        continue;
      }
      if (s.sector == BulkSector::kRR) {
        rr.insert(c.diff);
        if (c.diff != 0) violate(describe_summand(s) + ": R-R class " + std::to_string(c.diff) + "/24");
        continue;
      }
      if (c.parity == 0) {
        has_even = true;
        even.insert(c.diff);
        if (c.diff != 0) violate(describe_summand(s) + ": even class " + std::to_string(c.diff) + "/24");
      } else {
        has_odd = true;
        odd.insert(c.diff);
        if (c.diff != 12) violate(describe_summand(s) + ": odd class " + std::to_string(c.diff) + "/24");
      }
    }
    if (s.sector != BulkSector::kNSNS) continue;
    if (has_even && has_odd) ++rep.mixed_summands;
    else if (has_odd) ++rep.odd_summands;
    else ++rep.even_summands;
  }
  rep.even_classes.assign(even.begin(), even.end());
  rep.odd_classes.assign(odd.begin(), odd.end());
  rep.rr_classes.assign(rr.begin(), rr.end());
  rep.congruences_hold = ok;
  for (int d : all_classes) rep.t_period = std::lcm(rep.t_period, 24 / std::gcd(d, 24));
  try {
    rep.right_s_real = lattice_smatrix(b.right_lattice).real;
  } catch (const std::domain_error&) {
    rep.right_s_real = false;
  }
  rep.verdict = !signed_parity ? "none" : ok && rep.right_s_real ? "potential" : "quasi-potential";
  return rep;
}

// ---- spectral flow ----------------------------------------------------------

JacobiSeries flow_half(const JacobiSeries& s, const Marking& m, int central_charge) {
  JacobiSeries src = s;
  const int g = std::gcd(central_charge, 6);
  const int need = 6 / g;
  if ((central_charge * src.zscale()) % 6 != 0) src = src.with_zscale(std::lcm(src.zscale(), need));
  JacobiSeries moved = src.substitute_z_shift(Rational(1, 2), dot(m.v, m.v) / 2, Rational(central_charge, 24));
  return moved.shifted(to_q24(Rational(central_charge, 24)), central_charge * src.zscale() / 6);
}

FlowSymmetryReport spectral_flow_symmetry_check(const BulkDecomposition& b, const Rational& trunc) {
  if (!b.supersymmetric || !b.left_marking || !b.right_marking) throw std::invalid_argument("no N=2 marking");
  FlowSymmetryReport rep;
  rep.example = b.example;
  rep.trunc = trunc;

  // Grows the source depth until every flowed series reaches trunc.
  Rational depth = trunc + 2;
  for (int attempt = 0;; ++attempt) {
    SideCharacters ch(b, depth);
    std::map<std::string, JacobiSeries> flowed;
    bool deep_enough = true;
    auto flow = [&](const BulkSide& s, bool left, bool twisted) -> const JacobiSeries& {
      std::string key = (left ? "L|" : "R|") + s.label + (twisted ? "|tw" : "");
      auto it = flowed.find(key);
      if (it == flowed.end()) {
        JacobiSeries f = flow_half(ch.get(s, left, twisted), left ? *b.left_marking : *b.right_marking, b.central_charge);
        if (f.trunc() < trunc) deep_enough = false;
        it = flowed.emplace(key, f.truncated(trunc)).first;
      }
      return it->second;
    };

    std::array<Grouped, 2> from_ns, from_rr;
    for (const auto& s : b.summands) {
      if (s.sector == BulkSector::kNSNS) {
        from_ns[0].add(flow(s.left, true, false), flow(s.right, false, false));
        from_ns[1].add(flow(s.left, true, true), supertrace_scalar(b, s) * flow(s.right, false, true));
      } else if (s.sector == BulkSector::kRR) {
        from_rr[0].add(ch.get(s.left, true, false).truncated(trunc), ch.get(s.right, false, false).truncated(trunc));
        from_rr[1].add(ch.get(s.left, true, true).truncated(trunc),
                       supertrace_scalar(b, s) * ch.get(s.right, false, true).truncated(trunc));
      }
    }
    if (!deep_enough) {
      if (attempt >= 6) {
        rep.first_mismatch = "insufficient truncation";
        return rep;
      }
      depth += trunc + 1;
      continue;
    }

    for (int k = 0; k < 2; ++k) {
      const char* tag = k == 0 ? "+" : "-";
      auto a = from_ns[k].terms(), c = from_rr[k].terms();
      std::map<std::string, JacobiSeries> left_map, right_map;
      for (const auto& [l, r] : a) left_map.emplace(detail::series_key(l), r);
      for (const auto& [l, r] : c) right_map.emplace(detail::series_key(l), r);
      std::set<std::string> keys;
      for (const auto& [key, v] : left_map) keys.insert(key);
      for (const auto& [key, v] : right_map) keys.insert(key);
      for (const auto& key : keys) {
        auto x = left_map.find(key), y = right_map.find(key);
        JacobiSeries zero = JacobiSeries::zero(trunc);
        const JacobiSeries& rx = x == left_map.end() ? zero : x->second;
        const JacobiSeries& ry = y == right_map.end() ? zero : y->second;
        if (!rx.agrees_with(ry)) {
          rep.first_mismatch = std::string("Z") + tag + ": left factor group " + std::to_string(std::distance(keys.begin(), keys.find(key)));
          return rep;
        }
      }
    }
    rep.pass = true;
    return rep;
  }
}

// ---- JSON -----------------------------------------------------------------

void to_json(nlohmann::json& j, const ModularReport& r) {
  j = {{"example", r.example},
       {"check", r.check},
       {"residual", r.residual},
       {"tail_bound", r.tail_bound},
       {"trunc", to_string(r.trunc)},
       {"pass", r.pass},
       {"first_mismatch", r.first_mismatch ? nlohmann::json(*r.first_mismatch) : nlohmann::json(nullptr)}};
}

void to_json(nlohmann::json& j, const HypothesisReport& r) {
  j = {{"example", r.example},
       {"check", "hypothesis"},
       {"even_summands", r.even_summands},
       {"odd_summands", r.odd_summands},
       {"mixed_summands", r.mixed_summands},
       {"even_classes_24", r.even_classes},
       {"odd_classes_24", r.odd_classes},
       {"rr_classes_24", r.rr_classes},
       {"congruences_hold", r.congruences_hold},
       {"right_s_real", r.right_s_real},
       {"t_period", r.t_period},
       {"verdict", r.verdict},
       {"pass", r.verdict != "none"},
       {"first_mismatch", r.first_violation ? nlohmann::json(*r.first_violation) : nlohmann::json(nullptr)}};
}

void to_json(nlohmann::json& j, const FlowSymmetryReport& r) {
  j = {{"example", r.example},
       {"check", "spectral flow symmetry"},
       {"trunc", to_string(r.trunc)},
       {"residual", r.pass ? 0.0 : 1.0},
       {"pass", r.pass},
       {"first_mismatch", r.first_mismatch ? nlohmann::json(*r.first_mismatch) : nlohmann::json(nullptr)}};
}

}  // namespace vosa
