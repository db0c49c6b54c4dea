// Runs the fifteen acceptance criteria and prints one PASS/FAIL line per
// criterion.  Exit status is 0 only when every criterion passes.

#include "vosa/bulk.hpp"
#include "vosa/characters.hpp"
#include "vosa/classify.hpp"
#include "vosa/codes.hpp"
#include "vosa/fock.hpp"
#include "vosa/lattice.hpp"
#include "vosa/n4.hpp"
#include "vosa/theta.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace vosa;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << what;
    pass = pass && ok;
  }
};

// ---- 1. Golay code -------------------------------------------------------

void check_golay_code(Outcome& o) {
  const auto g = golay12();
  o.require(g.generators.size() == 6, "expected six generators");
  // Every F_3 combination of the generators, independently of words().
  std::set<Word> words;
  for (int idx = 0; idx < 729; ++idx) {
    Word w(12, 0);
    int k = idx;
    for (const auto& gen : g.generators) {
      int c = k % 3;
      k /= 3;
      for (int j = 0; j < 12; ++j) w[j] = (w[j] + c * gen[j]) % 3;
    }
    words.insert(w);
  }
  o.require(words.size() == 729, "generators are not independent");
  std::map<int, std::int64_t> dist;
  int min_weight = 99;
  for (const auto& w : words) {
    int wt = 0;
    for (int x : w) wt += x != 0;
    ++dist[wt];
    if (wt > 0) min_weight = std::min(min_weight, wt);
  }
  bool orth = true;
  for (const auto& a : g.generators)
    for (const auto& b : g.generators) {
      int s = 0;
      for (int j = 0; j < 12; ++j) s += a[j] * b[j];
      orth = orth && s % 3 == 0;
    }
  const std::map<int, std::int64_t> expect = {{0, 1}, {6, 264}, {9, 440}, {12, 24}};
  o.require(dist == expect, "weight distribution");
  o.require(min_weight == 6 && orth, "minimum weight or orthogonality");
  o.require(g.dimension() == 6 && self_orthogonal(g) && minimum_weight(g) == 6 && weight_distribution(g) == expect,
            "library disagrees with the enumeration");
}

// ---- 2. D-code glue ------------------------------------------------------

void check_d_glue(Outcome& o) {
  for (int n : {2, 3}) {
    const auto fam = d_code_family(n);
    for (int i = 0; i < 4; ++i) {
      const std::string name = "D" + std::to_string(2 * n) + "+[" + std::to_string(i) + "]";
      const Coset big = make_lattice(name);
      // Labels x.b mod 2 for b = e_j +- e_{n+j} over small coset vectors.
      std::set<Word> seen;
      const int dim = 2 * n;
      std::vector<int> y(dim, -1);
      while (true) {
        int sum = 0;
        for (int v : y) sum += v;
        if (sum % 2 == 0) {
          RVec x(dim);
          for (int j = 0; j < dim; ++j) x[j] = big.shift[j] + y[j];
          Word label(dim);
          for (int j = 0; j < n; ++j) {
            Rational plus = x[j] + x[n + j], minus = x[j] - x[n + j];
            auto mod2 = [](const Rational& r) {
              std::int64_t v = r.numerator() / r.denominator();
              return static_cast<int>(((v % 2) + 2) % 2);
            };
            label[j] = mod2(plus);
            label[n + j] = mod2(minus);
          }
          seen.insert(label);
        }
        int k = 0;
        while (k < dim && y[k] == 1) y[k++] = -1;
        if (k == dim) break;
        ++y[k];
      }
      std::vector<Word> oracle(seen.begin(), seen.end());
      auto img = glue_image(big, a1_in_d(n));
      o.require(img.labels == oracle, name + ": glue image differs from enumeration");
      o.require(d_code_coset(fam, i) == oracle, name + ": D-code coset differs from enumeration");
    }
  }
}

// ---- 3. Golay glue ---------------------------------------------------------

void check_golay_glue(Outcome& o) {
  const auto g = golay12();
  auto img = glue_image(make_lattice("D12+"), Lattice::from_basis(golay_lambda_basis(g)));
  TernaryCode code{12, img.labels};
  o.require(img.index == 729 && img.labels.size() == 729, "glue index");
  auto map = find_monomial_map(g, code);
  o.require(map.has_value(), "no monomial map onto the glue code");
  if (!map) return;
  std::set<Word> image;
  for (const auto& w : g.words()) image.insert(map->apply(w));
  std::set<Word> labels(img.labels.begin(), img.labels.end());
  o.require(image == labels, "monomial map does not carry the code onto the labels");
}

// ---- 4. decompositions -----------------------------------------------------

void check_decompositions(Outcome& o) {
  const std::vector<std::pair<std::string, int>> cases = {
      {"diagD", 1}, {"diagD", 2}, {"diagD", 3}, {"diagA1", 1}, {"diagA1", 2},        {"diagA1", 3},
      {"diagVL", 2}, {"diagF", 1}, {"diagF", 2}, {"torusD", 1}, {"tetrahedralK3", 1}, {"golayD12", 1}};
  for (const auto& [name, n] : cases) {
    auto b = build_bulk(name, n);
    for (auto sector : {BulkSector::kNSNS, BulkSector::kRR}) {
      if (sector == BulkSector::kRR && !b.rr_target) continue;
      o.require(verify_decomposition(b, sector, 3).pass, name + ":" + std::to_string(n) + " " + sector_name(sector));
    }
  }
  auto dropped = build_bulk("diagD", 2);
  dropped.summands.pop_back();
  o.require(!verify_decomposition(dropped, BulkSector::kNSNS, 3).pass, "dropped summand not detected");
}

// ---- 5. c = 12 partition function -------------------------------------------

void check_znsns(Outcome& o) {
  // prod (1 + x^odd)^24 in powers of x = q^(1/2).
  std::vector<long long> p(6, 0);
  p[0] = 1;
  for (int odd = 1; odd <= 5; odd += 2)
    for (int rep = 0; rep < 24; ++rep)
      for (int i = 5; i >= odd; --i) p[i] += p[i - odd];
  auto z = znsns_c12(24, 2);
  for (int j = 0; j <= 4; ++j)
    o.require(z.coeff(Rational(j - 1, 2), 0) == CycNum(p[j]), "coefficient of q^" + to_string(Rational(j - 1, 2)));
  o.require(p[1] == 24 && p[2] == 276, "product oracle");
}

// ---- 6. dual Coxeter scan --------------------------------------------------

void check_scan(Outcome& o) {
  // Own table: (name, rank, h) for one representative per isomorphism class.
  std::vector<std::tuple<std::string, int, int>> types;
  for (int r = 1; r <= 12; ++r) types.emplace_back("A" + std::to_string(r), r, r + 1);
  for (int r = 2; r <= 12; ++r) types.emplace_back("B" + std::to_string(r), r, 2 * r - 1);
  for (int r = 3; r <= 12; ++r) types.emplace_back("C" + std::to_string(r), r, r + 1);
  for (int r = 4; r <= 12; ++r) types.emplace_back("D" + std::to_string(r), r, 2 * r - 2);
  types.emplace_back("E6", 6, 12);
  types.emplace_back("E7", 7, 18);
  types.emplace_back("E8", 8, 30);
  types.emplace_back("F4", 4, 9);
  types.emplace_back("G2", 2, 4);
  std::vector<std::tuple<int, std::string, int>> oracle;
  for (int d = 0; d < 24; ++d)
    for (const auto& [name, rank, h] : types)
      for (int k = 1; (22 + d) * k <= h; ++k)
        if (2 * rank <= 24 - d && h == (22 + d) * k) oracle.emplace_back(d, name, k);
  std::vector<std::tuple<int, std::string, int>> got;
  for (const auto& hit : enumerate_solutions()) got.emplace_back(hit.d, hit.type.name(), hit.level);
  const std::vector<std::tuple<int, std::string, int>> expect = {{0, "D12", 1}, {8, "E8", 1}};
  o.require(oracle == expect, "independent scan");
  o.require(got == expect, "library scan");
}

// ---- 7. weight-2 matching --------------------------------------------------

void check_weight2(Outcome& o) {
  for (int d = 0; d < 24; ++d) {
    auto m = weight2_match(d);
    o.require(m.kappa_coeff == Rational(44 + 2 * d) && m.c_coeff == Rational(-1, 12),
              "d=" + std::to_string(d) + " kappa " + to_string(m.kappa_coeff));
  }
}

// ---- 8-9. N=4 algebra -------------------------------------------------------

void check_jacobi(Outcome& o) {
  auto rep = jacobi_check(2);
  o.require(rep.pass() && rep.triples > 0, "nonzero residual");
  o.note << rep.triples << " triples";
}

void check_goldstino(Outcome& o) {
  auto rep = lemma_g0_square();
  const auto& sq = rep.normalized_square;
  CycNum l0 = sq.coeff(Mode::L(0));
  CycNum j0 = sq.coeff(Mode::J(1, 0)) * CycNum(Rational(1, 2)) * CycNum::imag_unit();
  bool l_ok = l0 == CycNum(2) || l0 == CycNum(-2);
  bool j_ok = j0 == CycNum(1) || j0 == CycNum(-1);
  o.require(rep.only_l0_j0, "other modes present");
  o.require(l_ok && j_ok, "magnitudes");
  if (o.pass)
    o.note << "square = " << l0.to_string() << " L_0 + " << j0.to_string() << " J_0, sign relative to 2L_0 - J_0: "
           << rep.sign_vs_2l0_minus_j0;
}

// ---- 10. free fields -------------------------------------------------------

void check_free_fields(Outcome& o) {
  for (auto set : {RelationSet::kSl2Level1, RelationSet::kN4c6}) {
    auto rep = verify_relations(Rational(7, 2), set);
    o.require(rep.pass(), rep.first_failure ? rep.first_failure->relation : "relations");
    if (set == RelationSet::kSl2Level1) {
      // Level: [J^+_1, J^-_{-1}] - J_0 on the vacuum.
      FockSpace f(Rational(3, 2));
      auto e1 = composite_mode(f, field_e(), 2), fm1 = composite_mode(f, field_f(), -2);
      auto h0 = composite_mode(f, field_h(), 0);
      auto level = graded_commutator(e1, fm1.scaled(rep.normalization.at("J-"))) - h0;
      o.require(level.entry(0, 0) == CycNum(1), "level is not 1");
    }
  }
  FockSpace f(Rational(5, 2));
  auto l2 = composite_mode(f, field_virasoro(), 4), lm2 = composite_mode(f, field_virasoro(), -4);
  o.require(compose(l2, lm2).entry(0, 0) == CycNum(3), "central charge is not 6");
}

// ---- 11-12. modularity -----------------------------------------------------

void check_modular(Outcome& o) {
  const std::vector<std::pair<std::string, int>> cases = {{"diagD", 1}, {"diagD", 2}, {"diagD", 3},
                                                          {"diagF", 1}, {"diagF", 2}, {"torusD", 1}};
  double worst = 0.0;
  for (const auto& [name, n] : cases) {
    auto rep = modular_check(build_bulk(name, n));
    worst = std::max(worst, rep.residual);
    o.require(rep.pass && rep.residual < 1e-6 && rep.tail_bound < 1e-6, name + ":" + std::to_string(n));
  }
  o.note << "max residual " << worst;
}

void check_lattice_s(Outcome& o) {
  for (const char* name : {"A1^1", "D_4", "D_6", "D_8", "D_10", "D_12"}) {
    auto s = lattice_smatrix(make_lattice(name).lattice);
    o.require(s.real && s.unitary, std::string(name) + " not real");
  }
  auto k = lattice_smatrix(make_lattice("sqrt3Z^1").lattice);
  o.require(!k.real && k.unitary, "sqrt3Z reported real");
}

// ---- 13. elliptic genus ------------------------------------------------------

void check_genus(Outcome& o) {
  auto golay = build_bulk("golayD12");
  auto deep = elliptic_genus(golay, 5);
  auto at_one = deep.genus.specialize_z1();
  o.require(deep.holomorphic && at_one.trunc() == Rational(5) && at_one.terms().size() == 1 &&
                at_one.coeff24(0, 0) == CycNum(24),
            "E(0, tau) is not 24 through q^4");
  o.require(deep.elliptic_shift, "elliptic shift");

  // Coefficients of phi_{0,1} depend on 4n - l^2 only.
  const std::map<int, int> c = {{-1, 1}, {0, 10}, {3, -64}, {4, 108}, {7, -513}, {8, 808}};
  auto rep = elliptic_genus(golay, 3);
  std::map<std::pair<int, int>, CycNum> seen;
  for (const auto& t : rep.genus.terms()) seen[{t.q, t.z}] = t.c;
  std::map<std::pair<int, int>, CycNum> want;
  const int zs = rep.genus.zscale();
  for (int n = 0; n <= 2; ++n)
    for (int l = -3; l <= 3; ++l)
      if (auto it = c.find(4 * n - l * l); it != c.end()) want[{24 * n, l * zs}] = CycNum(2 * it->second);
  o.require(seen == want, "not 2 phi_{0,1} through q^2");

  o.require(elliptic_genus(build_bulk("torusD", 1), 4).genus.empty(), "torus genus nonzero");
  o.require(elliptic_genus(build_bulk("tetrahedralK3"), 3).genus.agrees_with(rep.genus), "tetrahedral genus differs");
}

// ---- 14. spectral flow -----------------------------------------------------

void check_flow(Outcome& o) {
  for (int j : {0, 1})
    for (int ell = -2; ell <= 2; ++ell)
      o.require(spectral_flow_character_check(j, ell, 3).pass,
                "character flow j=" + std::to_string(j) + " ell=" + std::to_string(ell));
  for (const char* name : {"tetrahedralK3", "golayD12"}) {
    auto rep = spectral_flow_symmetry_check(build_bulk(name), 3);
    o.require(rep.pass, std::string(name) + ": " + rep.first_mismatch.value_or(""));
  }
}

// ---- 15. N=2 building blocks ----------------------------------------------

void check_f_identities(Outcome& o) {
  o.require(n2_f(3, 6).specialize_z1().empty(), "f_3(0, tau) is not zero");
  double worst = 0.0;
  for (int s : {1, -1}) {
    auto f = n2_f(s, 6);
    const Complex want = std::polar(1.0, s * std::numbers::pi / 6);
    for (const auto& p : default_points()) {
      auto v = eval_with_bound(f, p);
      worst = std::max(worst, std::abs(v.value - want) + v.tail_bound);
    }
  }
  o.require(worst < 1e-6, "numeric deviation");
  o.note << "max deviation " << worst;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"ternary Golay code invariants", check_golay_code},
      {"D_2n glue images are D-code cosets", check_d_glue},
      {"D12+ glue over the lambda span is a Golay code", check_golay_glue},
      {"bulk decompositions at bidegree (3,3)", check_decompositions},
      {"c=12 NS partition function leading terms", check_znsns},
      {"dual Coxeter scan hits", check_scan},
      {"weight-2 matching kappa = 44 + 2d", check_weight2},
      {"N=4 graded Jacobi identity, window 2", check_jacobi},
      {"odd generator square on L_0 and J_0", check_goldstino},
      {"free fermion realizations at cutoff 7/2", check_free_fields},
      {"modular S invariance of partition vectors", check_modular},
      {"lattice S-matrix reality", check_lattice_s},
      {"elliptic genera", check_genus},
      {"spectral flow", check_flow},
      {"N=2 building block identities", check_f_identities},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s  %2zu  %-48s %6.1fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
