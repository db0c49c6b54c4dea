#include "vosa/bulk.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vosa {

std::string sector_name(BulkSector s) {
  switch (s) {
    case BulkSector::kNSNS:
      return "NS-NS";
    case BulkSector::kNSR:
      return "NS-R";
    case BulkSector::kRNS:
      return "R-NS";
    case BulkSector::kRR:
      return "R-R";
  }
  return "";
}

std::size_t BulkDecomposition::count(BulkSector s) const {
  std::size_t k = 0;
  for (const auto& m : summands) k += m.sector == s;
  return k;
}

namespace {

RMat zero_mat(int rows, int cols) { return RMat(rows, RVec(cols, Rational(0))); }

std::string word_string(const Word& w) {
  std::string s;
  for (int x : w) s += static_cast<char>('0' + x);
  return s;
}

// A1^m realized as (1,1) blocks, shifted by half the block vector wherever
// the word has a 1.
BulkSide a1_side(const Word& c) {
  const int m = static_cast<int>(c.size());
  Coset k = make_lattice("A1^" + std::to_string(m));
  for (int j = 0; j < m; ++j)
    if (c[j]) k.shift[2 * j] = k.shift[2 * j + 1] = Rational(1, 2);
  return {"A1^" + std::to_string(m) + "+(" + word_string(c) + ")", k, c};
}

// (sqrt3 Z)^6 as (1,1,1) blocks, block j shifted by (a_j / 3 + extra).
BulkSide k_side(const Word& c, const Rational& extra = 0) {
  Coset k = make_lattice("sqrt3Z^6");
  for (int j = 0; j < 6; ++j)
    for (int t = 0; t < 3; ++t) k.shift[3 * j + t] = Rational(c[j], 3) + extra;
  std::string label = "K+(" + word_string(c) + ")";
  if (extra != 0) label += "+flow";
  return {label, k, c};
}

BulkSide d_side(int rank, int glue) {
  std::string name = "D" + std::to_string(rank) + "+[" + std::to_string(glue) + "]";
  return {name, make_lattice(name), {}};
}

BulkSide sum_side(const BulkSide& a, const BulkSide& b) {
  return {a.label + "(+)" + b.label, direct_sum(a.coset, b.coset), {}};
}

std::vector<Word> binary_words(int m) {
  std::vector<Word> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    Word w(m);
    for (int j = 0; j < m; ++j) w[j] = (mask >> j) & 1;
    out.push_back(w);
  }
  return out;
}

std::vector<Word> ternary_words(int m) {
  std::vector<Word> out;
  int total = 1;
  for (int j = 0; j < m; ++j) total *= 3;
  for (int x = 0; x < total; ++x) {
    Word w(m);
    int y = x;
    for (int j = 0; j < m; ++j, y /= 3) w[j] = y % 3;
    out.push_back(w);
  }
  return out;
}

Word complement(const Word& c) {
  Word w(c);
  for (auto& x : w) x ^= 1;
  return w;
}

// Block maps for A1^{2m} sitting in D_{2m} with left copies e_j + e_{m+j}
// and right copies e_j - e_{m+j}.
void a1_maps(int m, RMat& left, RMat& right) {
  left = zero_mat(2 * m, 2 * m);
  right = zero_mat(2 * m, 2 * m);
  for (int j = 0; j < m; ++j)
    for (int t = 0; t < 2; ++t) {
      left[2 * j + t][j] = left[2 * j + t][m + j] = Rational(1, 2);
      right[2 * j + t][j] = Rational(1, 2);
      right[2 * j + t][m + j] = Rational(-1, 2);
    }
}

// The coordinate maps [I 0] and [0 I] for a split R^a (+) R^b.
void split_maps(int a, int b, RMat& left, RMat& right) {
  left = zero_mat(a, a + b);
  right = zero_mat(b, a + b);
  for (int j = 0; j < a; ++j) left[j][j] = 1;
  for (int j = 0; j < b; ++j) right[j][a + j] = 1;
}

std::vector<Coset> d_plus_cosets(int rank) {
  return {make_lattice("D" + std::to_string(rank) + "+[0]"), make_lattice("D" + std::to_string(rank) + "+[1]")};
}

Marking ones_marking(int dim, int from, int count, int zscale) {
  Marking m{RVec(dim, Rational(0)), zscale};
  for (int j = from; j < from + count; ++j) m.v[j] = 1;
  return m;
}

BulkDecomposition diag_d(int n) {
  BulkDecomposition b;
  b.example = "diagD";
  b.n = n;
  b.left_vosa = b.right_vosa = "V_D" + std::to_string(2 * n);
  b.central_charge = 2 * n;
  for (int i = 0; i < 4; ++i) b.summands.push_back({d_side(2 * n, i), d_side(2 * n, i), BulkSector::kNSNS, 1});
  BulkTarget t{"D" + std::to_string(4 * n) + "+", d_plus_cosets(4 * n), {}, {}};
  split_maps(2 * n, 2 * n, t.left_map, t.right_map);
  b.ns_target = t;
  b.right_lattice = make_lattice("D" + std::to_string(2 * n)).lattice;
  return b;
}

BulkDecomposition diag_a1(int n) {
  BulkDecomposition b;
  b.example = "diagA1";
  b.n = n;
  b.left_vosa = b.right_vosa = "L_1(sl2)^" + std::to_string(2 * n);
  b.central_charge = 2 * n;
  for (const auto& c : binary_words(2 * n)) b.summands.push_back({a1_side(c), a1_side(c), BulkSector::kNSNS, 1});
  BulkTarget t{"Z^" + std::to_string(4 * n), {make_lattice("Z^" + std::to_string(4 * n))}, {}, {}};
  a1_maps(2 * n, t.left_map, t.right_map);
  b.ns_target = t;
  b.right_lattice = make_lattice("A1^" + std::to_string(2 * n)).lattice;
  return b;
}

// Summands of the diagonal theory of V_L, L = A1^m u (A1^m + (1^m)), split
// into A1^m cosets; `odd` picks words of odd weight (the R-R sector).
std::vector<BulkSummand> vl_summands(int m, bool odd, BulkSector sector) {
  std::vector<BulkSummand> out;
  for (const auto& c : binary_words(m)) {
    if ((weight(c) % 2 == 1) != odd) continue;
    out.push_back({a1_side(c), a1_side(c), sector, 1});
    out.push_back({a1_side(complement(c)), a1_side(c), sector, 1});
  }
  return out;
}

Lattice vl_lattice(int m) {
  RMat gens = make_lattice("A1^" + std::to_string(m)).lattice.basis();
  gens.push_back(RVec(2 * m, Rational(1, 2)));
  return Lattice::from_generators(gens);
}

BulkDecomposition diag_vl(int n) {
  if (n % 2 != 0) throw std::invalid_argument("diagVL needs n even");
  BulkDecomposition b;
  b.example = "diagVL";
  b.n = n;
  b.left_vosa = b.right_vosa = "V_L, L = A1^" + std::to_string(2 * n) + " + (1^" + std::to_string(2 * n) + ")";
  b.central_charge = 2 * n;
  b.summands = vl_summands(2 * n, false, BulkSector::kNSNS);
  BulkTarget t{"D" + std::to_string(4 * n) + "+", d_plus_cosets(4 * n), {}, {}};
  a1_maps(2 * n, t.left_map, t.right_map);
  b.ns_target = t;
  b.right_lattice = vl_lattice(2 * n);
  return b;
}

BulkDecomposition tetrahedral() {
  BulkDecomposition b;
  b.example = "tetrahedralK3";
  b.n = 3;
  b.left_vosa = b.right_vosa = "V_L, L = A1^6 + (1^6)";
  b.central_charge = 6;
  b.supersymmetric = true;
  b.n2_structure = true;
  // J_0 of the first sl2 copy: 2m on m(1,1).
  b.left_marking = b.right_marking = ones_marking(12, 0, 2, 1);
  b.summands = vl_summands(6, false, BulkSector::kNSNS);
  for (auto& s : vl_summands(6, true, BulkSector::kRR)) b.summands.push_back(s);
  BulkTarget ns{"D12+", d_plus_cosets(12), {}, {}};
  a1_maps(6, ns.left_map, ns.right_map);
  BulkTarget rr = ns;
  rr.label = "D12+[2] u D12+[3]";
  rr.cosets = {make_lattice("D12+[2]"), make_lattice("D12+[3]")};
  b.ns_target = ns;
  b.rr_target = rr;
  b.right_lattice = vl_lattice(6);
  return b;
}

BulkDecomposition diag_f(int n) {
  BulkDecomposition b;
  b.example = "diagF";
  b.n = n;
  b.left_vosa = b.right_vosa = "F(" + std::to_string(2 * n) + ")";
  b.central_charge = n;
  b.supersymmetric = true;
  b.left_marking = b.right_marking = ones_marking(n, 0, n, 2);
  for (int a : {0, 2})
    for (int c : {0, 2}) b.summands.push_back({d_side(n, a), d_side(n, c), BulkSector::kNSNS, 1});
  for (int a : {1, 3})
    for (int c : {1, 3}) b.summands.push_back({d_side(n, a), d_side(n, c), BulkSector::kRR, 1});
  BulkTarget ns{"Z^" + std::to_string(2 * n), {make_lattice("Z^" + std::to_string(2 * n))}, {}, {}};
  split_maps(n, n, ns.left_map, ns.right_map);
  BulkTarget rr = ns;
  rr.label += "+(1/2)";
  rr.cosets[0].shift.assign(2 * n, Rational(1, 2));
  b.ns_target = ns;
  b.rr_target = rr;
  b.right_lattice = make_lattice("D" + std::to_string(n)).lattice;
  return b;
}

BulkDecomposition torus_d(int n) {
  BulkDecomposition b;
  b.example = "torusD";
  b.n = n;
  b.left_vosa = b.right_vosa = "V_D" + std::to_string(2 * n) + " (x) F(" + std::to_string(2 * n) + ")";
  b.central_charge = 3 * n;
  b.supersymmetric = true;
  b.n2_structure = true;
  b.left_marking = b.right_marking = ones_marking(3 * n, 2 * n, n, 2);
  for (int i = 0; i < 4; ++i) {
    for (int a : {0, 2})
      for (int c : {0, 2})
        b.summands.push_back(
            {sum_side(d_side(2 * n, i), d_side(n, a)), sum_side(d_side(2 * n, i), d_side(n, c)), BulkSector::kNSNS, 1});
    for (int a : {1, 3})
      for (int c : {1, 3})
        b.summands.push_back(
            {sum_side(d_side(2 * n, i), d_side(n, a)), sum_side(d_side(2 * n, i), d_side(n, c)), BulkSector::kRR, 1});
  }
  // Ambient: D_{4n} coordinates, then 2n fermion coordinates.
  BulkTarget ns{"D" + std::to_string(4 * n) + "+ (+) Z^" + std::to_string(2 * n), {}, {}, {}};
  Coset z = make_lattice("Z^" + std::to_string(2 * n));
  for (const auto& c : d_plus_cosets(4 * n)) ns.cosets.push_back(direct_sum(c, z));
  ns.left_map = zero_mat(3 * n, 6 * n);
  ns.right_map = zero_mat(3 * n, 6 * n);
  for (int j = 0; j < 2 * n; ++j) {
    ns.left_map[j][j] = 1;
    ns.right_map[j][2 * n + j] = 1;
  }
  for (int j = 0; j < n; ++j) {
    ns.left_map[2 * n + j][4 * n + j] = 1;
    ns.right_map[2 * n + j][5 * n + j] = 1;
  }
  BulkTarget rr = ns;
  rr.label += "+(1/2)";
  for (auto& c : rr.cosets)
    for (int j = 4 * n; j < 6 * n; ++j) c.shift[j] = Rational(1, 2);
  b.ns_target = ns;
  b.rr_target = rr;
  b.right_lattice = direct_sum(make_lattice("D" + std::to_string(2 * n)), make_lattice("D" + std::to_string(n))).lattice;
  return b;
}

Marking k_marking() { return Marking{RVec(18, Rational(1, 3)), 6}; }

// R-R summands of a K (x) K theory as the half-unit flow of the NS-NS ones.
void add_flowed_rr(BulkDecomposition& b) {
  std::vector<BulkSummand> rr;
  for (const auto& s : b.summands) {
    if (s.sector != BulkSector::kNSNS) continue;
    rr.push_back({k_side(s.left.word, Rational(1, 6)), k_side(s.right.word, Rational(1, 6)), BulkSector::kRR, s.sign});
  }
  for (auto& s : rr) b.summands.push_back(std::move(s));
}

BulkDecomposition golay_d12() {
  BulkDecomposition b;
  b.example = "golayD12";
  b.left_vosa = b.right_vosa = "V_K, K = (sqrt3 Z)^6";
  b.central_charge = 6;
  b.supersymmetric = true;
  b.n2_structure = true;
  b.left_marking = b.right_marking = k_marking();

  const TernaryCode g = golay12();
  const std::vector<RVec> lam = golay_lambda_basis(g);
  const Coset d12p = make_lattice("D12+");
  GlueImage img = glue_image(d12p, Lattice::from_basis(lam));
  TernaryCode image{12, img.labels};
  std::vector<int> perm = split_permutation(image);
  for (const auto& w : img.labels) {
    Word l(6), r(6);
    for (int j = 0; j < 6; ++j) {
      l[j] = w[perm[j]];
      r[j] = w[perm[6 + j]];
    }
    b.summands.push_back({k_side(l), k_side(r), BulkSector::kNSNS, 1});
  }
  add_flowed_rr(b);

  BulkTarget ns{"D12+", {d12p}, zero_mat(18, 12), zero_mat(18, 12)};
  for (int j = 0; j < 6; ++j)
    for (int t = 0; t < 3; ++t)
      for (int k = 0; k < 12; ++k) {
        ns.left_map[3 * j + t][k] = lam[perm[j]][k] / 3;
        ns.right_map[3 * j + t][k] = lam[perm[6 + j]][k] / 3;
      }
  // The flow moves D12+ by the preimage of (v'/2, v''/2).
  BulkTarget rr = ns;
  rr.label = "D12+ + flow";
  const Marking m = k_marking();
  RVec w(12, Rational(0));
  for (int k = 0; k < 12; ++k)
    for (int r = 0; r < 18; ++r) w[k] += (ns.left_map[r][k] + ns.right_map[r][k]) * m.v[r] / 2;
  rr.cosets[0].shift = w;
  b.ns_target = ns;
  b.rr_target = rr;
  b.right_lattice = make_lattice("sqrt3Z^6").lattice;
  return b;
}

BulkDecomposition gepner16() {
  BulkDecomposition b;
  b.example = "gepner16";
  b.left_vosa = b.right_vosa = "V_K, K = (sqrt3 Z)^6";
  b.central_charge = 6;
  b.supersymmetric = true;
  b.n2_structure = true;
  b.left_marking = b.right_marking = k_marking();
  for (int a = 0; a < 3; ++a)
    for (const auto& c : ternary_words(6)) {
      int sum = std::accumulate(c.begin(), c.end(), 0);
      if (sum % 3 != 0) continue;
      Word l(6), r(6);
      for (int j = 0; j < 6; ++j) {
        l[j] = (c[j] + a) % 3;
        r[j] = (c[j] + 3 - a) % 3;
      }
      b.summands.push_back({k_side(l), k_side(r), BulkSector::kNSNS, 1});
    }
  add_flowed_rr(b);
  b.right_lattice = make_lattice("sqrt3Z^6").lattice;
  return b;
}

}  // namespace

std::vector<std::string> bulk_examples() {
  return {"diagD", "diagA1", "diagVL", "diagF", "torusD", "tetrahedralK3", "golayD12", "gepner16"};
}

BulkDecomposition build_bulk(const std::string& example, int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("n out of range");
  if (example == "diagD") return diag_d(n);
  if (example == "diagA1") return diag_a1(n);
  if (example == "diagVL") return diag_vl(n);
  if (example == "diagF") return diag_f(n);
  if (example == "torusD") return torus_d(n);
  if (example == "tetrahedralK3") return tetrahedral();
  if (example == "golayD12") return golay_d12();
  if (example == "gepner16") return gepner16();
  throw std::invalid_argument("unknown example");
}

BulkDecomposition swapped(const BulkDecomposition& b) {
  BulkDecomposition s = b;
  std::swap(s.left_vosa, s.right_vosa);
  std::swap(s.left_marking, s.right_marking);
  for (auto& m : s.summands) std::swap(m.left, m.right);
  for (auto* t : {&s.ns_target, &s.rr_target})
    if (*t) std::swap((*t)->left_map, (*t)->right_map);
  return s;
}

// ---- exact decomposition check -------------------------------------------

DecompositionReport verify_decomposition(const BulkDecomposition& b, BulkSector sector, const Rational& trunc) {
  const auto& target = sector == BulkSector::kRR ? b.rr_target : sector == BulkSector::kNSNS ? b.ns_target : std::nullopt;
  if (!target) throw std::invalid_argument("no target");
  DecompositionReport rep;
  rep.example = b.example;
  rep.sector = sector;
  rep.trunc = trunc;
  const int t24 = to_q24(trunc);

  using Key = std::pair<int, int>;
  std::map<Key, std::int64_t> lhs, rhs;
  std::map<std::string, JacobiSeries> cache;
  auto theta_of = [&](const BulkSide& s) -> const JacobiSeries& {
    auto it = cache.find(s.label);
    if (it == cache.end()) it = cache.emplace(s.label, theta(s.coset, std::nullopt, SignCharacter(), trunc)).first;
    return it->second;
  };
  for (const auto& m : b.summands) {
    if (m.sector != sector) continue;
    const JacobiSeries& l = theta_of(m.left);
    const JacobiSeries& r = theta_of(m.right);
    for (const auto& a : l.terms())
      for (const auto& c : r.terms()) lhs[{a.q, c.q}] += a.c.rational_value().numerator() * c.c.rational_value().numerator();
  }

  // The maps must split the ambient space orthogonally.
  const int dim = static_cast<int>(target->left_map.empty() ? 0 : target->left_map[0].size());
  RMat ql = zero_mat(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Rational sl = 0, sr = 0;
      for (const auto& row : target->left_map) sl += row[i] * row[j];
      for (const auto& row : target->right_map) sr += row[i] * row[j];
      if (sl + sr != (i == j ? 1 : 0)) throw std::invalid_argument("embedding not orthogonal");
      ql[i][j] = sl;
    }

  for (const auto& c : target->cosets) {
    CosetPoints pts(c);
    const IntQuadForm& nf = pts.norm();
    IntQuadForm lf = pts.quad(ql);
    pts.for_each(4 * trunc, [&](const std::vector<std::int64_t>& y) {
      Rational a = lf.eval(y) / 2;
      Rational r = nf.eval(y) / 2 - a;
      if (a >= trunc || r >= trunc) return;
      ++rep.points;
      ++rhs[{to_q24(a), to_q24(r)}];
    });
  }

  std::set<Key> keys;
  for (const auto& [k, v] : lhs) keys.insert(k);
  for (const auto& [k, v] : rhs) keys.insert(k);
  for (const auto& k : keys) {
    if (k.first >= t24 || k.second >= t24) continue;
    std::int64_t a = lhs.count(k) ? lhs[k] : 0, r = rhs.count(k) ? rhs[k] : 0;
    if (a != r) {
      rep.first_mismatch = Bidegree{from_q24(k.first), from_q24(k.second)};
      rep.summand_count = a;
      rep.target_count = r;
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

// ---- bold S and T ----------------------------------------------------------

IntMat4 bold_s() { return {{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}}; }
IntMat4 bold_t() { return {{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}; }

IntMat4 multiply(const IntMat4& a, const IntMat4& b) {
  IntMat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// ---- lattice S-matrix -------------------------------------------------------

namespace {

RMat invert(RMat a) {
  const int n = static_cast<int>(a.size());
  RMat inv = zero_mat(n, n);
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular Gram matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Rational frac(const Rational& x) {
  std::int64_t fl = x.numerator() / x.denominator();
  if (x.numerator() < 0 && x.numerator() % x.denominator() != 0) --fl;
  return x - fl;
}

// 1 / sqrt(m) in Q(zeta_24), for m = k^2 s with s in {1, 2, 3, 6}.
CycNum inverse_sqrt(std::int64_t m) {
  for (std::int64_t s : {1, 2, 3, 6}) {
    if (m % s != 0) continue;
    auto k = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(m / s))));
    if (k * k * s != m) continue;
    CycNum root = s == 1 ? CycNum(1) : s == 2 ? CycNum::sqrt2() : s == 3 ? CycNum::sqrt3() : CycNum::sqrt2() * CycNum::sqrt3();
    return (root * CycNum(k)).inverse();
  }
  throw std::domain_error("unsupported");
}

}  // namespace

LatticeSMatrix lattice_smatrix(const Lattice& l) {
  if (!l.is_integral()) throw std::invalid_argument("lattice not integral");
  const RMat g = l.gram();
  const int r = l.rank();
  Rational det = l.determinant();
  if (det.denominator() != 1 || det.numerator() > 10000) throw std::domain_error("discriminant too large");
  const RMat ginv = invert(g);

  // Classes as fractional coordinates in the lattice basis.
  std::vector<RVec> gens;
  for (int j = 0; j < r; ++j) {
    RVec c(r);
    for (int i = 0; i < r; ++i) c[i] = frac(ginv[i][j]);
    gens.push_back(c);
  }
  std::set<RVec> seen{RVec(r, Rational(0))};
  std::vector<RVec> order{RVec(r, Rational(0))};
  for (std::size_t head = 0; head < order.size(); ++head)
    for (const auto& gvec : gens) {
      RVec c(r);
      for (int i = 0; i < r; ++i) c[i] = frac(order[head][i] + gvec[i]);
      if (seen.insert(c).second) {
        order.push_back(c);
        if (order.size() > 10000) throw std::domain_error("discriminant too large");
      }
    }
  const std::size_t n = order.size();
  if (static_cast<std::int64_t>(n) != det.numerator()) throw std::logic_error("discriminant order mismatch");

  // Pairings in units of 1/24.
  auto pairing24 = [&](const RVec& a, const RVec& b) {
    Rational p = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) p += a[i] * g[i][j] * b[j];
    Rational t = frac(p) * 24;
    if (t.denominator() != 1) throw std::domain_error("unsupported");
    return static_cast<int>(t.numerator());
  };

  LatticeSMatrix out;
  out.order = n;
  const CycNum scale = inverse_sqrt(static_cast<std::int64_t>(n));
  out.real = scale == scale.conj();
  std::vector<std::vector<int>> p(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      p[i][j] = pairing24(order[i], order[j]);
      if (p[i][j] != 0 && p[i][j] != 12) out.real = false;
    }
  for (const auto& c : order) {
    RVec x(l.dim(), Rational(0));
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < l.dim(); ++k) x[k] += c[i] * l.basis()[i][k];
    out.classes.push_back(x);
  }
  if (n <= 256) {
    std::vector<std::vector<CycNum>> s(n, std::vector<CycNum>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s[i][j] = scale * CycNum::zeta((24 - p[i][j]) % 24);
    out.matrix = std::move(s);
  }
  // (S S^dagger)_{g,g'} = |D|^-1 sum_d exp(-2 pi i (g - g').d), which
  // depends only on e = g - g': it must vanish for e != 0.
  out.unitary = true;
  for (std::size_t e = 1; e < n && out.unitary; ++e) {
    std::array<std::int64_t, 24> hist{};
    for (std::size_t d = 0; d < n; ++d) ++hist[(24 - p[e][d]) % 24];
    CycNum sum;
    for (int k = 0; k < 24; ++k)
      if (hist[k]) sum += CycNum(hist[k]) * CycNum::zeta(k);
    out.unitary = sum.is_zero();
  }
  // The diagonal entries are |D|^-1 * |D| = 1 automatically.
  return out;
}

void to_json(nlohmann::json& j, const DecompositionReport& r) {
  j = {{"example", r.example},
       {"check", "decomposition " + sector_name(r.sector)},
       {"trunc", to_string(r.trunc)},
       {"points", r.points},
       {"residual", r.pass ? 0.0 : 1.0},
       {"pass", r.pass},
       {"first_mismatch", nullptr}};
  if (r.first_mismatch)
    j["first_mismatch"] = {{"left", to_string(r.first_mismatch->left)},
                           {"right", to_string(r.first_mismatch->right)},
                           {"summands", r.summand_count},
                           {"target", r.target_count}};
}

}  // namespace vosa
