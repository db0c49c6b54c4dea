#include "vosa/bulk.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

namespace vosa {
namespace {

// Known q-expansion of the index-1 weak Jacobi form of weight 0 through
// q^2, as (q, y-power) -> coefficient.
std::map<std::pair<int, int>, int> phi01_table() {
  std::map<std::pair<int, int>, int> t;
  for (int s : {1, -1}) {
    t[{0, s}] = 1;
    t[{1, 2 * s}] = 10;
    t[{1, s}] = -64;
    t[{2, 3 * s}] = 1;
    t[{2, 2 * s}] = 108;
    t[{2, s}] = -513;
  }
  t[{0, 0}] = 10;
  t[{1, 0}] = 108;
  t[{2, 0}] = 808;
  return t;
}

// Compares a series (integer q powers, y = z^zscale) against a multiple of
// the table through q^2.
void expect_multiple_of_phi01(const JacobiSeries& s, int factor) {
  ASSERT_GE(s.trunc(), Rational(3));
  std::map<std::pair<int, int>, int> seen;
  for (const auto& t : s.terms()) {
    if (t.q >= 72) continue;
    ASSERT_EQ(t.q % 24, 0);
    ASSERT_EQ(t.z % s.zscale(), 0);
    ASSERT_TRUE(t.c.is_rational());
    auto v = t.c.rational_value();
    ASSERT_EQ(v.denominator(), 1);
    seen[{t.q / 24, t.z / s.zscale()}] = static_cast<int>(v.numerator());
  }
  auto table = phi01_table();
  for (auto& [k, v] : table) v *= factor;
  EXPECT_EQ(seen, table);
}

TEST(BulkExamples, SummandCounts) {
  EXPECT_EQ(build_bulk("diagD", 2).count(BulkSector::kNSNS), 4u);
  EXPECT_EQ(build_bulk("diagA1", 1).count(BulkSector::kNSNS), 4u);
  auto tet = build_bulk("tetrahedralK3");
  EXPECT_EQ(tet.count(BulkSector::kNSNS), 64u);
  EXPECT_EQ(tet.count(BulkSector::kRR), 64u);
  auto golay = build_bulk("golayD12");
  EXPECT_EQ(golay.count(BulkSector::kNSNS), 729u);
  EXPECT_EQ(golay.count(BulkSector::kRR), 729u);
  EXPECT_EQ(build_bulk("gepner16").count(BulkSector::kNSNS), 729u);
  EXPECT_THROW(build_bulk("nope"), std::invalid_argument);
}

TEST(BulkDecomposition, DiagonalDLattices) {
  for (int n = 1; n <= 3; ++n) {
    auto rep = verify_decomposition(build_bulk("diagD", n), BulkSector::kNSNS, 3);
    EXPECT_TRUE(rep.pass) << "n=" << n;
    EXPECT_GT(rep.points, 0u);
  }
}

TEST(BulkDecomposition, DiagonalA1AndVL) {
  EXPECT_TRUE(verify_decomposition(build_bulk("diagA1", 1), BulkSector::kNSNS, 3).pass);
  EXPECT_TRUE(verify_decomposition(build_bulk("diagA1", 2), BulkSector::kNSNS, 2).pass);
  EXPECT_TRUE(verify_decomposition(build_bulk("diagVL", 2), BulkSector::kNSNS, 2).pass);
}

TEST(BulkDecomposition, TetrahedralBothSectors) {
  auto b = build_bulk("tetrahedralK3");
  EXPECT_TRUE(verify_decomposition(b, BulkSector::kNSNS, 2).pass);
  EXPECT_TRUE(verify_decomposition(b, BulkSector::kRR, 2).pass);
}

TEST(BulkDecomposition, FermionsAndTorus) {
  for (int n = 1; n <= 2; ++n) {
    auto b = build_bulk("diagF", n);
    EXPECT_TRUE(verify_decomposition(b, BulkSector::kNSNS, 3).pass);
    EXPECT_TRUE(verify_decomposition(b, BulkSector::kRR, 3).pass);
  }
  auto t = build_bulk("torusD", 1);
  EXPECT_TRUE(verify_decomposition(t, BulkSector::kNSNS, 2).pass);
  EXPECT_TRUE(verify_decomposition(t, BulkSector::kRR, 2).pass);
}

TEST(BulkDecomposition, GolayBothSectors) {
  auto b = build_bulk("golayD12");
  EXPECT_TRUE(verify_decomposition(b, BulkSector::kNSNS, 2).pass);
  // The flowed target is D12+ moved into the other two D12 classes.
  const auto& shift = b.rr_target->cosets[0].shift;
  Coset moved = make_lattice("D12+");
  moved.shift = shift;
  Coset rr2 = make_lattice("D12+[2]"), rr3 = make_lattice("D12+[3]");
  EXPECT_FALSE(b.ns_target->cosets[0].contains(shift));
  EXPECT_TRUE(rr2.contains(shift) || rr3.contains(shift));
  EXPECT_TRUE(verify_decomposition(b, BulkSector::kRR, 2).pass);
}

TEST(BulkDecomposition, DroppedSummandIsCaught) {
  auto b = build_bulk("diagD", 2);
  b.summands.pop_back();
  auto rep = verify_decomposition(b, BulkSector::kNSNS, 3);
  EXPECT_FALSE(rep.pass);
  ASSERT_TRUE(rep.first_mismatch.has_value());
  EXPECT_LT(rep.summand_count, rep.target_count);
}

TEST(BulkDecomposition, SwappedSidesStillDecompose) {
  for (auto name : {"diagD", "diagF", "tetrahedralK3"}) {
    auto b = swapped(build_bulk(name, 2));
    EXPECT_TRUE(verify_decomposition(b, BulkSector::kNSNS, 2).pass) << name;
  }
}

TEST(BulkDecomposition, NoTargetThrows) {
  EXPECT_THROW(verify_decomposition(build_bulk("gepner16"), BulkSector::kNSNS, 1), std::invalid_argument);
}

TEST(BoldMatrices, SAndTGenerateSymmetricGroupAction) {
  const IntMat4 id{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  EXPECT_EQ(multiply(bold_s(), bold_s()), id);
  EXPECT_EQ(multiply(bold_t(), bold_t()), id);
  auto st = multiply(bold_s(), bold_t());
  EXPECT_EQ(multiply(st, multiply(st, st)), id);
}

TEST(Modular, DiagonalDIsInvariant) {
  for (int n = 1; n <= 3; ++n) {
    auto b = build_bulk("diagD", n);
    auto s = modular_check(b);
    EXPECT_TRUE(s.pass) << "n=" << n << " residual " << s.residual;
    EXPECT_LT(s.residual, 1e-6);
    auto t = modular_t_check(b);
    EXPECT_TRUE(t.pass) << "n=" << n << " residual " << t.residual;
  }
}

TEST(Modular, FermionsAndTorus) {
  for (int n = 1; n <= 2; ++n) {
    auto b = build_bulk("diagF", n);
    EXPECT_LT(modular_check(b).residual, 1e-6) << n;
    EXPECT_LT(modular_t_check(b).residual, 1e-6) << n;
  }
  auto t = build_bulk("torusD", 1);
  EXPECT_LT(modular_check(t).residual, 1e-6);
  EXPECT_LT(modular_t_check(t).residual, 1e-6);
}

TEST(Modular, EllipticVariableCarriesTheMultiplier) {
  ModularOptions o;
  o.points = {{Complex(0.1, 0.05), Complex(0.0, 1.1)}, {Complex(-0.2, 0.0), Complex(0.25, 1.0)}};
  auto rep = modular_check(build_bulk("diagF", 2), o);
  EXPECT_TRUE(rep.pass) << rep.residual;
}

TEST(Modular, FlippedSignIsDetected) {
  auto b = build_bulk("diagD", 1);
  b.summands[1].sign = -1;
  auto rep = modular_check(b);
  EXPECT_FALSE(rep.pass);
  EXPECT_GT(rep.residual, 0.1);
}

TEST(PartitionVectorValues, DiagonalVacuumEntryIsRealPositive) {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.9, 1.6);
  for (auto name : {"diagD", "diagA1", "diagVL", "diagF"}) {
    auto b = build_bulk(name, 2);
    auto z = partition_vector(b, 6);
    for (int k = 0; k < 5; ++k) {
      EvalPoint p{0.0, Complex(re(rng), im(rng))};
      auto v = evaluate(z, p, 1e-8);
      EXPECT_LT(v.tail_bound, 1e-6);
      EXPECT_NEAR(v.value[0].imag(), 0.0, 1e-9) << name;
      EXPECT_GT(v.value[0].real(), 0.0) << name;
    }
  }
}

TEST(Modular, PointBelowFloorThrows) {
  ModularOptions o;
  o.points = {{0.0, Complex(0.0, 0.3)}};
  EXPECT_THROW(modular_check(build_bulk("diagD", 1), o), std::domain_error);
}

TEST(Modular, ExactTRelations) {
  EXPECT_TRUE(exact_t_check(build_bulk("tetrahedralK3"), 2).pass);
  EXPECT_TRUE(exact_t_check(build_bulk("diagD", 2), 2).pass);
  EXPECT_TRUE(exact_t_check(build_bulk("diagF", 2), 2).pass);
}

TEST(Modular, GolayIsOnlyInvariantUnderAPowerOfT) {
  // Each nonzero K-coset has L_0 = 1/6 mod 1/2, so a summand with left and
  // right weights w', w'' has L'_0 - L''_0 = (w' - w'')/6 mod 1/2, and every
  // 6 + 6 split of the Golay code has words with w' != w'' mod 3.
  auto b = build_bulk("golayD12");
  auto t = exact_t_check(b, 2);
  EXPECT_FALSE(t.pass);
  EXPECT_NEAR(t.residual, std::abs(std::polar(1.0, 2 * 3.141592653589793 / 3) - 1.0), 1e-9);
  auto h = hypothesis_check(b);
  EXPECT_EQ(h.t_period, 6);
}

TEST(LatticeS, SmallDiscriminants) {
  auto a1 = lattice_smatrix(make_lattice("A1^1").lattice);
  EXPECT_EQ(a1.order, 2u);
  EXPECT_TRUE(a1.real);
  EXPECT_TRUE(a1.unitary);
  ASSERT_TRUE(a1.matrix.has_value());
  // 1/sqrt2 [[1, 1], [1, -1]]
  auto r2 = CycNum::sqrt2().inverse();
  EXPECT_EQ((*a1.matrix)[0][0], r2);
  EXPECT_EQ((*a1.matrix)[1][1], -r2);

  auto d4 = lattice_smatrix(make_lattice("D_4").lattice);
  EXPECT_EQ(d4.order, 4u);
  EXPECT_TRUE(d4.real);
  EXPECT_TRUE(d4.unitary);

  auto k = lattice_smatrix(make_lattice("sqrt3Z^1").lattice);
  EXPECT_EQ(k.order, 3u);
  EXPECT_FALSE(k.real);
  EXPECT_TRUE(k.unitary);
  EXPECT_EQ(lattice_smatrix(make_lattice("E8").lattice).order, 1u);
}

TEST(Hypothesis, Verdicts) {
  auto d = hypothesis_check(build_bulk("diagD", 3));
  EXPECT_EQ(d.verdict, "potential") << d.first_violation.value_or("");
  EXPECT_EQ(d.t_period, 1);
  EXPECT_EQ(d.even_classes, std::vector<int>{0});
  auto g = hypothesis_check(build_bulk("golayD12"));
  EXPECT_FALSE(g.congruences_hold);
  EXPECT_FALSE(g.right_s_real);
  EXPECT_EQ(g.verdict, "quasi-potential");
  auto t = hypothesis_check(build_bulk("tetrahedralK3"));
  EXPECT_TRUE(t.congruences_hold) << t.first_violation.value_or("");
  auto f = hypothesis_check(build_bulk("diagF", 2));
  EXPECT_TRUE(f.congruences_hold) << f.first_violation.value_or("");
  EXPECT_EQ(f.odd_classes, std::vector<int>{12});
}

TEST(Flow, SymmetricExamples) {
  for (auto name : {"tetrahedralK3", "golayD12", "torusD"}) {
    auto rep = spectral_flow_symmetry_check(build_bulk(name, 1), 2);
    EXPECT_TRUE(rep.pass) << name << ": " << rep.first_mismatch.value_or("");
  }
  EXPECT_THROW(spectral_flow_symmetry_check(build_bulk("diagD", 1), 1), std::invalid_argument);
}

TEST(Genus, GolayIsTwicePhi01) {
  auto rep = elliptic_genus(build_bulk("golayD12"), 3);
  EXPECT_TRUE(rep.holomorphic) << rep.first_mismatch.value_or("");
  EXPECT_TRUE(rep.z1_constant);
  ASSERT_TRUE(rep.z1_value.has_value());
  EXPECT_EQ(*rep.z1_value, CycNum(24));
  EXPECT_EQ(rep.index, Rational(1));
  EXPECT_TRUE(rep.elliptic_shift);
  EXPECT_EQ(rep.matches_weak_jacobi, std::optional<bool>(true));
  expect_multiple_of_phi01(rep.genus, 2);
}

TEST(Flow, GolayAndTetrahedralThroughThree) {
  EXPECT_TRUE(spectral_flow_symmetry_check(build_bulk("tetrahedralK3"), 3).pass);
  EXPECT_TRUE(spectral_flow_symmetry_check(build_bulk("golayD12"), 3).pass);
}

TEST(Flow, MissingRamondSummandIsCaught) {
  auto b = build_bulk("tetrahedralK3");
  b.summands.pop_back();
  auto rep = spectral_flow_symmetry_check(b, 2);
  EXPECT_FALSE(rep.pass);
  EXPECT_TRUE(rep.first_mismatch.has_value());
}

TEST(Genus, GolayWittenIndexThroughQ4) {
  auto rep = elliptic_genus(build_bulk("golayD12"), 5);
  ASSERT_TRUE(rep.holomorphic);
  auto at_one = rep.genus.specialize_z1();
  EXPECT_EQ(at_one.trunc(), Rational(5));
  ASSERT_EQ(at_one.terms().size(), 1u);
  EXPECT_EQ(at_one.coeff24(0, 0), CycNum(24));
  EXPECT_TRUE(rep.elliptic_shift);
}

TEST(Genus, MislabelledSectorIsNotHolomorphic) {
  // Twisted Ramond characters of K-cosets are constant at z'' = 1, so any
  // subset of the R-R sector stays holomorphic; an NS module does not.
  auto b = build_bulk("golayD12");
  BulkSummand extra = b.summands.front();
  ASSERT_EQ(extra.sector, BulkSector::kNSNS);
  extra.sector = BulkSector::kRR;
  b.summands.push_back(extra);
  auto rep = elliptic_genus(b, 2);
  EXPECT_FALSE(rep.holomorphic);
  EXPECT_TRUE(rep.first_mismatch.has_value());
}

TEST(Genus, Phi01MatchesTable) { expect_multiple_of_phi01(phi01(3), 1); }

TEST(Genus, TetrahedralAndGepnerAgreeWithGolay) {
  auto golay = elliptic_genus(build_bulk("golayD12"), 2).genus;
  auto tet = elliptic_genus(build_bulk("tetrahedralK3"), 2);
  EXPECT_TRUE(tet.holomorphic);
  EXPECT_TRUE(tet.genus.agrees_with(golay));
  auto gep = elliptic_genus(build_bulk("gepner16"), 2);
  EXPECT_TRUE(gep.holomorphic);
  EXPECT_TRUE(gep.genus.agrees_with(golay));
}

TEST(Genus, TorusVanishes) {
  auto rep = elliptic_genus(build_bulk("torusD", 1), 4);
  EXPECT_TRUE(rep.genus.empty());
  EXPECT_EQ(rep.z1_value, std::optional<CycNum>(CycNum(0)));
}

TEST(Codes, GepnerIsNotGolay) {
  // The joint left/right labels of the Gepner model contain words of weight
  // below 6; the Golay labels never do.
  auto min_joint = [](const BulkDecomposition& b) {
    int best = 99;
    for (const auto& s : b.summands) {
      if (s.sector != BulkSector::kNSNS) continue;
      int w = weight(s.left.word) + weight(s.right.word);
      if (w > 0) best = std::min(best, w);
    }
    return best;
  };
  EXPECT_EQ(min_joint(build_bulk("golayD12")), 6);
  EXPECT_LT(min_joint(build_bulk("gepner16")), 6);
}

}  // namespace
}  // namespace vosa
