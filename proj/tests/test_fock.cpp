#include "vosa/fock.hpp"

#include <gtest/gtest.h>

using namespace vosa;

namespace {

// Independent count: subsets of the 12 * L creators with total level <= N,
// enumerated by brute force over the multiset of levels.
std::size_t brute_count(int twice_cutoff) {
  std::vector<int> w;
  for (int t = 1; t <= twice_cutoff; t += 2)
    for (int c = 0; c < 12; ++c) w.push_back(t);
  std::size_t count = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == w.size()) {
      ++count;
      return;
    }
    rec(i + 1, used);
    if (used + w[i] <= twice_cutoff) rec(i + 1, used + w[i]);
  };
  rec(0, 0);
  return count;
}

}  // namespace

TEST(Fock, Dimensions) {
  EXPECT_EQ(build_fock(0).dimension(), 1u);
  EXPECT_EQ(build_fock(Rational(1, 2)).dimension(), 13u);
  EXPECT_EQ(build_fock(Rational(3, 2)).dimension(), fock_dimension_count(Rational(3, 2)));
  for (int t = 0; t <= 4; ++t) EXPECT_EQ(build_fock(Rational(t, 2)).dimension(), brute_count(t)) << t;
  EXPECT_THROW(build_fock(Rational(1, 3)), std::invalid_argument);
  try {
    build_fock(12);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "cutoff too large");
  }
}

TEST(Fock, CliffordRelations) {
  FockSpace f(Rational(5, 2));
  std::vector<ModeMatrix> modes;
  std::vector<std::tuple<Fermion, int, int>> labels;
  for (Fermion t : {Fermion::kB, Fermion::kC})
    for (int i = 1; i <= 6; ++i)
      for (int r : {-1, 1}) {
        modes.push_back(fermion_mode(f, t, i, r));
        labels.emplace_back(t, i, r);
      }
  for (std::size_t a = 0; a < modes.size(); ++a)
    for (std::size_t b = 0; b < modes.size(); ++b) {
      auto ac = graded_commutator(modes[a], modes[b]);
      auto [ta, ia, ra] = labels[a];
      auto [tb, ib, rb] = labels[b];
      bool expect_one = ta != tb && ia == ib && ra + rb == 0;
      for (std::size_t j = 0; j < f.dimension(); ++j) {
        if (f.twice_level(j) + 1 > f.twice_cutoff()) continue;
        std::vector<std::pair<std::size_t, CycNum>> want;
        if (expect_one) want.push_back({j, CycNum(1)});
        ASSERT_EQ(ac.cols[j], want) << ac.label << " on " << f.describe(j);
      }
    }
}

TEST(Fock, CurrentZeroModesAndExamples) {
  FockSpace f(Rational(3, 2));
  auto h0 = composite_mode(f, field_h(), 0);
  std::uint64_t mask = 0;
  f.apply_mode(Fermion::kB, 1, -1, mask);
  std::size_t s = *f.index_of(mask);
  EXPECT_EQ(h0.entry(s, s), CycNum(1));
  EXPECT_EQ(h0.cols[s].size(), 1u);

  auto e0 = composite_mode(f, field_e(), 0);
  std::uint64_t c2 = 0, b1 = 0;
  f.apply_mode(Fermion::kC, 2, -1, c2);
  f.apply_mode(Fermion::kB, 1, -1, b1);
  auto v = e0.entry(*f.index_of(b1), *f.index_of(c2));
  EXPECT_TRUE(v == CycNum(1) || v == CycNum(-1));
  EXPECT_EQ(e0.cols[*f.index_of(c2)].size(), 1u);

  // Positive modes kill the vacuum.
  for (const Field& fld : {field_h(), field_e(), field_f(), field_virasoro(), field_g(1, 1), field_g(-1, 2)})
    for (int n2 : {1, 2, 3}) {
      bool odd = fld.front().factors.size() % 2 == 1;
      if ((n2 % 2 == 1) != odd) continue;
      EXPECT_TRUE(composite_mode(f, fld, n2).cols[0].empty());
    }
  EXPECT_THROW(composite_mode(f, Field{{1, {}}}, 0), std::invalid_argument);
}

TEST(Fock, VirasoroZeroModeCountsLevel) {
  FockSpace f(Rational(5, 2));
  auto l0 = composite_mode(f, field_virasoro(), 0);
  auto h0 = composite_mode(f, field_h(), 0);
  for (std::size_t j = 0; j < f.dimension(); ++j) {
    std::vector<std::pair<std::size_t, CycNum>> want;
    if (f.twice_level(j)) want.push_back({j, CycNum(Rational(f.twice_level(j), 2))});
    ASSERT_EQ(l0.cols[j], want) << f.describe(j);
  }
  EXPECT_TRUE(graded_commutator(h0, l0).is_zero());
  // Central charge 6: <0| L_2 L_{-2} |0> = c / 2.
  auto l2 = composite_mode(f, field_virasoro(), 4), lm2 = composite_mode(f, field_virasoro(), -4);
  EXPECT_EQ(compose(l2, lm2).entry(0, 0), CycNum(3));
}

TEST(Fock, Sl2LevelOne) {
  auto rep = verify_relations(Rational(7, 2), RelationSet::kSl2Level1);
  EXPECT_TRUE(rep.pass()) << rep.first_failure->relation << " on " << rep.first_failure->state << ": "
                          << rep.first_failure->lhs.to_string() << " vs " << rep.first_failure->rhs.to_string();
  EXPECT_EQ(rep.relations, 45u);
  FockSpace f(Rational(3, 2));
  auto h0 = composite_mode(f, field_h(), 0), e0 = composite_mode(f, field_e(), 0);
  auto diff = graded_commutator(h0, e0) - e0.scaled(CycNum(2));
  EXPECT_TRUE(diff.is_zero());
  auto e1 = composite_mode(f, field_e(), 2), fm1 = composite_mode(f, field_f(), -2);
  auto central = graded_commutator(e1, fm1.scaled(rep.normalization.at("J-"))) - h0;
  EXPECT_EQ(central.entry(0, 0), CycNum(1));
}

TEST(Fock, SmallN4AtCentralChargeSix) {
  auto rep = verify_relations(Rational(7, 2), RelationSet::kN4c6);
  EXPECT_TRUE(rep.pass()) << rep.first_failure->relation << " on " << rep.first_failure->state << ": "
                          << rep.first_failure->lhs.to_string() << " vs " << rep.first_failure->rhs.to_string();
  ASSERT_EQ(rep.normalization.size(), 5u);
  EXPECT_EQ(rep.normalization.at("J-"), CycNum(-1));
  EXPECT_EQ(rep.normalization.at("G+1"), CycNum(1));
  EXPECT_EQ(rep.normalization.at("G-2"), CycNum(-2));
}

// Single cubic monomials cannot work: the simple pole of
// b1b3b5(z) b2c3c5(w) carries the current j1 + j3 + j5 rather than the
// derivative of J^+.
TEST(Fock, CubicMonomialsDoNotClose) {
  auto rep = verify_relations(Rational(5, 2), RelationSet::kN4c6, field_g_cubic);
  ASSERT_FALSE(rep.pass());
  EXPECT_NE(rep.first_failure->relation.find("G"), std::string::npos);
}

TEST(Fock, MatrixJson) {
  FockSpace f(Rational(1, 2));
  nlohmann::json j = fermion_mode(f, Fermion::kB, 1, -1);
  EXPECT_EQ(j["entries"].size(), 1u);
  EXPECT_EQ(j["odd"], true);
}
