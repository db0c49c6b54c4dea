#include "vosa/fock.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace vosa {

namespace {

int twice_of_half_integer(const Rational& r) {
  Rational t = r * 2;
  if (t.denominator() != 1) throw std::invalid_argument("cutoff must be a multiple of 1/2");
  return static_cast<int>(t.numerator());
}

void add_entry(std::vector<std::pair<std::size_t, CycNum>>& col, std::size_t row, const CycNum& v) {
  auto it = std::lower_bound(col.begin(), col.end(), row,
                             [](const std::pair<std::size_t, CycNum>& e, std::size_t r) { return e.first < r; });
  if (it != col.end() && it->first == row) {
    it->second += v;
    if (it->second.is_zero()) col.erase(it);
  } else if (!v.is_zero()) {
    col.insert(it, {row, v});
  }
}

}  // namespace

FockSpace::FockSpace(const Rational& cutoff) : twice_cutoff_(twice_of_half_integer(cutoff)) {
  if (twice_cutoff_ < 0) throw std::invalid_argument("cutoff must be nonnegative");
  const int levels = (twice_cutoff_ + 1) / 2;
  creators_ = levels * 2 * kSpecies;
  if (creators_ > 64 || fock_dimension_count(cutoff) > kMaxDimension) throw std::domain_error("cutoff too large");

  // Depth-first over creators in bit order, pruning on total level.
  std::function<void(int, std::uint64_t, int)> rec = [&](int bit, std::uint64_t mask, int lvl) {
    if (bit == creators_) {
      states_.push_back(mask);
      return;
    }
    rec(bit + 1, mask, lvl);
    int w = 2 * (bit / (2 * kSpecies)) + 1;
    if (lvl + w <= twice_cutoff_) rec(bit + 1, mask | (std::uint64_t{1} << bit), lvl + w);
  };
  rec(0, 0, 0);
  std::stable_sort(states_.begin(), states_.end(), [&](std::uint64_t a, std::uint64_t b) {
    int la = twice_level_of(a), lb = twice_level_of(b);
    return la != lb ? la < lb : a < b;
  });
  levels_.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) {
    levels_.push_back(twice_level_of(states_[i]));
    index_[states_[i]] = i;
  }
}

std::optional<std::size_t> FockSpace::index_of(std::uint64_t mask) const {
  auto it = index_.find(mask);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FockSpace::twice_level_of(std::uint64_t mask) const {
  int total = 0;
  while (mask) {
    int bit = std::countr_zero(mask);
    total += 2 * (bit / (2 * kSpecies)) + 1;
    mask &= mask - 1;
  }
  return total;
}

std::string FockSpace::describe(std::size_t i) const {
  std::uint64_t mask = states_.at(i);
  if (!mask) return "|0>";
  std::ostringstream os;
  for (int bit = creators_ - 1; bit >= 0; --bit) {
    if (!((mask >> bit) & 1u)) continue;
    int lvl = 2 * (bit / (2 * kSpecies)) + 1;
    int rem = bit % (2 * kSpecies);
    os << (rem < kSpecies ? "b" : "c") << (rem % kSpecies + 1) << "_{-" << lvl << "/2}";
  }
  os << "|0>";
  return os.str();
}

int FockSpace::creator_bit(Fermion type, int species, int twice_r) const {
  if (species < 1 || species > kSpecies || twice_r <= 0 || twice_r % 2 == 0) throw std::invalid_argument("bad fermion mode");
  if (twice_r > twice_cutoff_) return -1;
  return ((twice_r - 1) / 2) * 2 * kSpecies + (type == Fermion::kC ? kSpecies : 0) + (species - 1);
}

int FockSpace::apply_mode(Fermion type, int species, int twice_r, std::uint64_t& mask) const {
  const bool create = twice_r < 0;
  const Fermion target = create ? type : (type == Fermion::kB ? Fermion::kC : Fermion::kB);
  const int bit = creator_bit(target, species, create ? -twice_r : twice_r);
  if (bit < 0) return 0;
  const std::uint64_t b = std::uint64_t{1} << bit;
  const bool present = (mask & b) != 0;
  if (create == present) return 0;
  const int above = std::popcount(mask >> bit >> 1);
  mask ^= b;
  return (above % 2) ? -1 : 1;
}

FockSpace build_fock(const Rational& cutoff) { return FockSpace(cutoff); }

std::size_t fock_dimension_count(const Rational& cutoff) {
  const int t = twice_of_half_integer(cutoff);
  std::vector<std::size_t> poly(t + 1, 0);  // index = twice the level
  poly[0] = 1;
  for (int w = 1; w <= t; w += 2)
    for (int copy = 0; copy < 2 * FockSpace::kSpecies; ++copy)
      for (int d = t; d >= w; --d) poly[d] += poly[d - w];
  std::size_t total = 0;
  for (auto v : poly) total += v;
  return total;
}

ModeMatrix ModeMatrix::zero(const FockSpace& f, int twice_index, bool odd, std::string label) {
  ModeMatrix m;
  m.label = std::move(label);
  m.twice_index = twice_index;
  m.odd = odd;
  m.cols.resize(f.dimension());
  return m;
}

ModeMatrix ModeMatrix::identity(const FockSpace& f, const CycNum& scale) {
  ModeMatrix m = zero(f, 0, false, "1");
  if (scale.is_zero()) return m;
  for (std::size_t i = 0; i < f.dimension(); ++i) m.cols[i].push_back({i, scale});
  return m;
}

CycNum ModeMatrix::entry(std::size_t row, std::size_t col) const {
  for (const auto& [r, v] : cols.at(col))
    if (r == row) return v;
  return CycNum(0);
}

ModeMatrix& ModeMatrix::operator+=(const ModeMatrix& o) {
  if (cols.size() != o.cols.size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, v] : o.cols[j]) add_entry(cols[j], r, v);
  return *this;
}

ModeMatrix ModeMatrix::scaled(const CycNum& s) const {
  ModeMatrix m = *this;
  for (auto& col : m.cols) {
    for (auto& e : col) e.second *= s;
    col.erase(std::remove_if(col.begin(), col.end(), [](const auto& e) { return e.second.is_zero(); }), col.end());
  }
  return m;
}

bool ModeMatrix::is_zero() const {
  return std::all_of(cols.begin(), cols.end(), [](const auto& c) { return c.empty(); });
}

ModeMatrix compose(const ModeMatrix& a, const ModeMatrix& b) {
  ModeMatrix m;
  m.label = a.label + " " + b.label;
  m.twice_index = a.twice_index + b.twice_index;
  m.odd = a.odd != b.odd;
  m.cols.resize(b.cols.size());
  for (std::size_t j = 0; j < b.cols.size(); ++j)
    for (const auto& [k, vb] : b.cols[j])
      for (const auto& [i, va] : a.cols[k]) add_entry(m.cols[j], i, va * vb);
  return m;
}

ModeMatrix graded_commutator(const ModeMatrix& a, const ModeMatrix& b) {
  ModeMatrix ab = compose(a, b), ba = compose(b, a);
  ModeMatrix r = (a.odd && b.odd) ? ab + ba : ab - ba;
  r.label = "[" + a.label + ", " + b.label + "]";
  return r;
}

ModeMatrix operator+(ModeMatrix a, const ModeMatrix& b) { return a += b; }
ModeMatrix operator-(ModeMatrix a, const ModeMatrix& b) { return a += b.scaled(CycNum(-1)); }

ModeMatrix fermion_mode(const FockSpace& f, Fermion type, int species, int twice_r) {
  std::ostringstream label;
  label << (type == Fermion::kB ? "b" : "c") << species << "_" << to_string(Rational(twice_r, 2));
  ModeMatrix m = ModeMatrix::zero(f, twice_r, true, label.str());
  for (std::size_t j = 0; j < f.dimension(); ++j) {
    std::uint64_t mask = f.state(j);
    int s = f.apply_mode(type, species, twice_r, mask);
    if (!s) continue;
    if (auto i = f.index_of(mask)) m.cols[j].push_back({*i, CycNum(s)});
  }
  return m;
}

ModeMatrix composite_mode(const FockSpace& f, const Field& field, int twice_n, const std::string& label) {
  struct Term {
    CycNum coeff;
    // Fermion modes in application order (rightmost first).
    std::vector<std::tuple<Fermion, int, int>> ops;
  };
  std::vector<Term> terms;
  const int cap = f.twice_cutoff();
  bool odd = false;
  bool first = true;

  for (const auto& mono : field) {
    const int k = static_cast<int>(mono.factors.size());
    if (k < 1 || k > 3) throw std::invalid_argument("unsupported field");
    for (const auto& fac : mono.factors)
      if (fac.derivatives < 0 || fac.derivatives > 1 || fac.species < 1 || fac.species > FockSpace::kSpecies)
        throw std::invalid_argument("unsupported field");
    if (first) odd = k % 2 == 1;
    if (odd != (k % 2 == 1)) throw std::invalid_argument("unsupported field");
    first = false;

    // Enumerate the first k - 1 indices; the last one is fixed by the sum.
    std::vector<int> idx(k, 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
      if (pos == k - 1) {
        idx[pos] = twice_n - used;
        if (idx[pos] % 2 == 0 || idx[pos] > cap || idx[pos] < -cap) return;
        CycNum c = mono.coeff;
        for (int j = 0; j < k; ++j)
          if (mono.factors[j].derivatives) c *= CycNum(Rational(-(idx[j] + 1), 2));
        if (c.is_zero()) return;
        // Normal order: creators (negative index) left, annihilators right.
        std::vector<int> order;
        for (int j = 0; j < k; ++j)
          if (idx[j] < 0) order.push_back(j);
        for (int j = 0; j < k; ++j)
          if (idx[j] > 0) order.push_back(j);
        int inversions = 0;
        for (int a = 0; a < k; ++a)
          for (int b = a + 1; b < k; ++b)
            if (order[a] > order[b]) ++inversions;
        if (inversions % 2) c = -c;
        Term t{c, {}};
        for (int a = k - 1; a >= 0; --a) {
          const auto& fac = mono.factors[order[a]];
          t.ops.emplace_back(fac.type, fac.species, idx[order[a]]);
        }
        terms.push_back(std::move(t));
        return;
      }
      for (int p = -cap; p <= cap; p += 2) {
        if (p % 2 == 0) continue;
        idx[pos] = p;
        rec(pos + 1, used + p);
      }
    };
    rec(0, 0);
  }

  ModeMatrix m = ModeMatrix::zero(f, twice_n, odd, label);
  for (std::size_t j = 0; j < f.dimension(); ++j) {
    for (const auto& t : terms) {
      std::uint64_t mask = f.state(j);
      int sign = 1;
      for (const auto& [type, species, r] : t.ops) {
        sign *= f.apply_mode(type, species, r, mask);
        if (!sign) break;
      }
      if (!sign) continue;
      if (auto i = f.index_of(mask)) add_entry(m.cols[j], *i, sign > 0 ? t.coeff : -t.coeff);
    }
  }
  return m;
}

namespace {

FieldFactor B(int i, int d = 0) { return {Fermion::kB, i, d}; }
FieldFactor C(int i, int d = 0) { return {Fermion::kC, i, d}; }

}  // namespace

Field field_h() { return {{1, {B(1), C(1)}}, {1, {B(2), C(2)}}}; }
Field field_e() { return {{1, {B(1), B(2)}}}; }
Field field_f() { return {{1, {C(1), C(2)}}}; }

Field field_g(int sign, int x) {
  const CycNum i = CycNum::imag_unit();
  // fermion * (j_a + phase * j_b)
  auto term = [&](FieldFactor fermion, int a, int b, const CycNum& phase, const CycNum& overall) {
    return Field{{overall, {fermion, B(a), C(a)}}, {overall * phase, {fermion, B(b), C(b)}}};
  };
  auto join = [](Field a, const Field& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  if (x == 1 && sign > 0) return join(term(B(1), 3, 4, -i, 1), term(B(2), 5, 6, -i, 1));
  if (x == 2 && sign > 0) return join(term(B(1), 5, 6, i, 1), term(B(2), 3, 4, i, -1));
  if (x == 1 && sign < 0) return join(term(C(1), 5, 6, -i, 1), term(C(2), 3, 4, -i, -1));
  if (x == 2 && sign < 0) return join(term(C(1), 3, 4, i, 1), term(C(2), 5, 6, i, 1));
  throw std::invalid_argument("x must be 1 or 2");
}

Field field_g_cubic(int sign, int x) {
  if (x == 1 && sign > 0) return {{1, {B(1), B(3), B(5)}}};
  if (x == 1 && sign < 0) return {{1, {C(2), B(3), B(5)}}};
  if (x == 2 && sign < 0) return {{1, {C(1), C(3), C(5)}}};
  if (x == 2 && sign > 0) return {{1, {B(2), C(3), C(5)}}};
  throw std::invalid_argument("x must be 1 or 2");
}

Field field_virasoro() {
  // (1/4) sum_i (:dc_i b_i: - :c_i db_i: + :db_i c_i: - :b_i dc_i:)
  Field t;
  const CycNum q(Rational(1, 4));
  for (int i = 1; i <= FockSpace::kSpecies; ++i) {
    t.push_back({q, {C(i, 1), B(i)}});
    t.push_back({-q, {C(i), B(i, 1)}});
    t.push_back({q, {B(i, 1), C(i)}});
    t.push_back({-q, {B(i), C(i, 1)}});
  }
  return t;
}

namespace {

// Realization of the N=4 generators on a Fock space, with lazily built
// mode matrices.
class Realization {
 public:
  Realization(const FockSpace& f, std::function<Field(int, int)> odd) : f_(f), odd_(std::move(odd)) {}

  const ModeMatrix& raw(const std::string& name, const Field& field, int twice_n) {
    auto key = std::make_pair(name, twice_n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, composite_mode(f_, field, twice_n, name + "_" + to_string(Rational(twice_n, 2))))
        .first->second;
  }

  ModeMatrix h(int m) { return raw("h", field_h(), 2 * m); }
  ModeMatrix e(int m) { return raw("e", field_e(), 2 * m); }
  ModeMatrix f(int m) { return raw("f", field_f(), 2 * m).scaled(norm_.at("J-")); }
  ModeMatrix g(int sign, int x, int twice_r) {
    std::string key = std::string("G") + (sign > 0 ? "+" : "-") + std::to_string(x);
    return raw(key, odd_(sign, x), twice_r).scaled(norm_.at(key));
  }

  ModeMatrix of(const Mode& m) {
    const int n = m.twice_index / 2;
    const CycNum i = CycNum::imag_unit();
    const CycNum half(Rational(1, 2));
    switch (m.kind) {
      case ModeKind::kL:
        return raw("L", field_virasoro(), m.twice_index);
      case ModeKind::kJ:
        // J^1 = (i/2) J, J^2 = (J^+ - J^-)/2, J^3 = (i/2)(J^+ + J^-)
        if (m.upper == 1) return h(n).scaled(half * i);
        if (m.upper == 2) return (e(n) - f(n)).scaled(half);
        return (e(n) + f(n)).scaled(half * i);
      case ModeKind::kG: {
        const int r = m.twice_index;
        // Inverse of the charged basis change.
        if (m.upper == 0) return (g(-1, 1, r) + g(1, 2, r)).scaled(half);
        if (m.upper == 1) return (g(-1, 1, r) - g(1, 2, r)).scaled(half * i);
        if (m.upper == 2) return (g(-1, 2, r) - g(1, 1, r)).scaled(half);
        return (g(1, 1, r) + g(-1, 2, r)).scaled(-half * i);
      }
    }
    throw std::logic_error("unreachable");
  }

  ModeMatrix of(const ModeTerm& t, const Rational& c, const Rational& k) {
    ModeTerm s = t.specialized(c, k);
    ModeMatrix out = ModeMatrix::identity(f_, s.central_coeff(0, 0));
    bool have_degree = false;
    for (const auto& [m, coeff] : s.modes()) {
      ModeMatrix part = of(m).scaled(coeff);
      if (!have_degree) {
        out.twice_index = part.twice_index;
        out.odd = part.odd;
        have_degree = true;
      }
      out += part;
    }
    return out;
  }

  std::map<std::string, CycNum>& normalization() { return norm_; }

 private:
  const FockSpace& f_;
  std::function<Field(int, int)> odd_;
  std::map<std::pair<std::string, int>, ModeMatrix> cache_;
  std::map<std::string, CycNum> norm_;
};

// Ratio c with a = c b on the column, if both are proportional there.
std::optional<CycNum> column_ratio(const ModeMatrix& a, const ModeMatrix& b, std::size_t col) {
  const auto& ca = a.cols.at(col);
  const auto& cb = b.cols.at(col);
  if (ca.size() != cb.size() || cb.empty()) return std::nullopt;
  CycNum r = ca[0].second * cb[0].second.inverse();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i].first != cb[i].first || !(ca[i].second == r * cb[i].second)) return std::nullopt;
  return r;
}

}  // namespace

RelationReport verify_relations(const Rational& cutoff, RelationSet set) {
  return verify_relations(cutoff, set, field_g);
}

RelationReport verify_relations(const Rational& cutoff, RelationSet set,
                                const std::function<Field(int sign, int x)>& odd_fields) {
  if (cutoff < Rational(3, 2)) throw std::invalid_argument("cutoff must be at least 3/2");
  FockSpace space(cutoff);
  Realization rho(space, odd_fields);
  RelationReport rep;
  rep.set = set;
  rep.cutoff = cutoff;
  const Rational c_val(6), k_val(1);
  const std::size_t vac = 0;
  auto& norm = rho.normalization();

  // J^- is fixed by the level: [J^+_1, J^-_{-1}] = J_0 + k.
  norm["J-"] = CycNum(1);
  CycNum t = graded_commutator(rho.e(1), rho.f(-1)).entry(vac, vac);
  if (t.is_zero()) throw std::runtime_error("degenerate current realization");
  norm["J-"] = CycNum(k_val) * t.inverse();

  if (set == RelationSet::kN4c6) {
    auto fail_fit = [&](const std::string& what) {
      rep.first_failure = RelationFailure{"normalization of " + what, space.describe(vac), CycNum(0), CycNum(0)};
      return rep;
    };
    norm["G+1"] = CycNum(1);
    norm["G-1"] = CycNum(1);
    norm["G-2"] = CycNum(1);
    norm["G+2"] = CycNum(1);
    // [J^+_0, G^{-,x}_{-3/2}] = G^{+,x}_{-3/2}, read off on the vacuum.
    auto sigma1 = column_ratio(graded_commutator(rho.e(0), rho.g(-1, 1, -3)), rho.g(1, 1, -3), vac);
    if (!sigma1) return fail_fit("G-1");
    norm["G-1"] = sigma1->inverse();
    // {G^{+,1}_{3/2}, G^{-,2}_{-3/2}} on the vacuum is a pure central term.
    ModeTerm target = bracket(g_charged(1, 1, 3), g_charged(-1, 2, -3)).specialized(c_val, k_val);
    CycNum v = graded_commutator(rho.g(1, 1, 3), rho.g(-1, 2, -3)).entry(vac, vac);
    if (v.is_zero()) return fail_fit("G-2");
    norm["G-2"] = target.central_coeff(0, 0) * v.inverse();
    auto sigma2 = column_ratio(graded_commutator(rho.e(0), rho.g(-1, 2, -3)), rho.g(1, 2, -3), vac);
    if (!sigma2) return fail_fit("G+2");
    norm["G+2"] = *sigma2;
  }

  std::vector<std::pair<std::string, ModeTerm>> gens;
  for (int m = -1; m <= 1; ++m) {
    gens.push_back({"J_" + std::to_string(m), j_cartan(m)});
    gens.push_back({"J+_" + std::to_string(m), j_raise(1, m)});
    gens.push_back({"J-_" + std::to_string(m), j_raise(-1, m)});
  }
  if (set == RelationSet::kN4c6) {
    for (int m = -1; m <= 1; ++m) gens.push_back({"L_" + std::to_string(m), ModeTerm::mode(Mode::L(m))});
    for (int r : {-1, 1})
      for (int x : {1, 2})
        for (int sg : {1, -1})
          gens.push_back({std::string("G") + (sg > 0 ? "+" : "-") + std::to_string(x) + "_" + std::to_string(r) + "/2",
                          g_charged(sg, x, r)});
  }

  const int depth2 = 2;  // twice the maximal |mode index| among generators
  for (std::size_t j = 0; j < space.dimension(); ++j)
    if (space.twice_level(j) + depth2 <= space.twice_cutoff()) ++rep.safe_states;

  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b) {
      ++rep.relations;
      ModeMatrix lhs = graded_commutator(rho.of(gens[a].second, c_val, k_val), rho.of(gens[b].second, c_val, k_val));
      ModeMatrix rhs = rho.of(bracket(gens[a].second, gens[b].second), c_val, k_val);
      for (std::size_t j = 0; j < space.dimension() && !rep.first_failure; ++j) {
        if (space.twice_level(j) + depth2 > space.twice_cutoff()) continue;
        if (lhs.cols[j] == rhs.cols[j]) continue;
        // Report the first differing row.
        std::size_t row = 0;
        for (const auto& [r, v] : lhs.cols[j])
          if (!(rhs.entry(r, j) == v)) {
            row = r;
            break;
          }
        if (lhs.entry(row, j) == rhs.entry(row, j))
          for (const auto& [r, v] : rhs.cols[j])
            if (!(lhs.entry(r, j) == v)) {
              row = r;
              break;
            }
        rep.first_failure = RelationFailure{"[" + gens[a].first + ", " + gens[b].first + "] at row " + space.describe(row),
                                            space.describe(j), lhs.entry(row, j), rhs.entry(row, j)};
      }
      if (rep.first_failure) {
        rep.normalization = norm;
        return rep;
      }
    }
  rep.normalization = norm;
  return rep;
}

void to_json(nlohmann::json& j, const ModeMatrix& m) {
  j = nlohmann::json{{"label", m.label}, {"index", to_string(Rational(m.twice_index, 2))}, {"odd", m.odd}};
  auto entries = nlohmann::json::array();
  for (std::size_t col = 0; col < m.cols.size(); ++col)
    for (const auto& [row, v] : m.cols[col]) entries.push_back({row, col, v});
  j["entries"] = entries;
}

}  // namespace vosa
