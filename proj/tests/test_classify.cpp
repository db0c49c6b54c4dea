#include "vosa/characters.hpp"
#include "vosa/classify.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

namespace vosa {
namespace {

// prod_{k>=1} (1 + x^(2k-1))^24 in powers of x = q^(1/2), through x^len.
std::vector<long long> fermion_product(int len) {
  std::vector<long long> p(len + 1, 0);
  p[0] = 1;
  for (int odd = 1; odd <= len; odd += 2)
    for (int rep = 0; rep < 24; ++rep)
      for (int i = len; i >= odd; --i) p[i] += p[i - odd];
  return p;
}

TEST(Classify, PartitionFunctionMatchesProduct) {
  const Rational trunc = 3;
  auto prod = fermion_product(7);
  for (int d : {0, 8, 24}) {
    JacobiSeries z = znsns_c12(d, trunc);
    // z = x^-1 prod + d - 24, so the x^(j - 1) coefficient is prod[j].
    for (int j = 0; j <= 6; ++j) {
      long long expect = prod[j] + (j == 1 ? d - 24 : 0);
      EXPECT_EQ(z.coeff(Rational(j - 1, 2), 0), CycNum(expect)) << "d=" << d << " j=" << j;
    }
  }
  EXPECT_EQ(prod[2], 276);
  EXPECT_TRUE(znsns_c12(24, trunc).agrees_with(fermion_character(24, SectorLabel{Twist::kNS, 1}, trunc)));
  EXPECT_EQ(znsns_c12(0, trunc).coeff(0, 0), CycNum(0));
  EXPECT_THROW(znsns_c12(25, trunc), std::invalid_argument);
}

TEST(Classify, SignedD4Theta) {
  // Direct count over D4 = {x in Z^4 : sum even} of (-1)^(x.x/2) by norm.
  std::map<int, long long> count;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int e = -3; e <= 3; ++e) {
          if ((a + b + c + e) % 2 != 0) continue;
          int n = a * a + b * b + c * c + e * e;
          if (n <= 6) count[n] += (n / 2) % 2 == 0 ? 1 : -1;
        }
  JacobiSeries th = signed_d4_theta(2);
  for (int n = 0; n <= 6; n += 2) EXPECT_EQ(th.coeff(Rational(n, 4), 0), CycNum(count[n])) << n;
  EXPECT_EQ(th.coeff(Rational(1, 2), 0), CycNum(-24));
}

TEST(Classify, Weight2MatchAllD) {
  for (int d = 0; d < 24; ++d) {
    auto m = weight2_match(d);
    EXPECT_EQ(m.c_coeff, Rational(-1, 12)) << d;
    EXPECT_EQ(m.d_coeff, Rational(-d, 12)) << d;
    EXPECT_EQ(m.kappa_coeff, Rational(44 + 2 * d)) << d;
  }
}

TEST(Classify, Weight2MatchIndependentOfTruncation) {
  for (int d : {0, 5, 8, 23}) {
    auto a = weight2_match(d, Rational(3, 2));
    for (Rational t : {Rational(2), Rational(3), Rational(5, 2)}) {
      auto b = weight2_match(d, t);
      EXPECT_EQ(a.kappa_coeff, b.kappa_coeff);
      EXPECT_EQ(a.d_coeff, b.d_coeff);
    }
  }
  EXPECT_THROW(weight2_match(3, Rational(1, 2)), std::domain_error);
}

TEST(Classify, DualCoxeterTable) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(dual_coxeter(Family::kA, n), n + 1);
    EXPECT_EQ(dual_coxeter(Family::kB, n), 2 * n - 1);
    EXPECT_EQ(dual_coxeter(Family::kC, n), n + 1);
    EXPECT_EQ(dual_coxeter(Family::kD, n), 2 * n - 2);
  }
  EXPECT_EQ(dual_coxeter(Family::kE6, 6), 12);
  EXPECT_EQ(dual_coxeter(Family::kE7, 7), 18);
  EXPECT_EQ(dual_coxeter(Family::kE8, 8), 30);
  EXPECT_EQ(dual_coxeter(Family::kF4, 4), 9);
  EXPECT_EQ(dual_coxeter(Family::kG2, 2), 4);
}

TEST(Classify, SimpleTypesHaveNoIsomorphicRepeats) {
  auto types = simple_types(12);
  std::set<std::string> names;
  for (const auto& t : types) names.insert(t.name());
  EXPECT_EQ(names.size(), types.size());
  for (auto bad : {"B1", "C1", "C2", "D2", "D3"}) EXPECT_EQ(names.count(bad), 0u) << bad;
  // 12 + 11 + 10 + 9 classical, 5 exceptional
  EXPECT_EQ(types.size(), 47u);
}

TEST(Classify, ScanFindsD12AndE8) {
  auto hits = enumerate_solutions();
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(hits[0].d, 0);
  EXPECT_EQ(hits[0].type.name(), "D12");
  EXPECT_EQ(hits[0].level, 1);
  EXPECT_EQ(hits[1].d, 8);
  EXPECT_EQ(hits[1].type.name(), "E8");
  EXPECT_EQ(hits[1].level, 1);
  EXPECT_TRUE(enumerate_solutions(2).empty());
  EXPECT_TRUE(enumerate_solutions(23).empty());
  EXPECT_EQ(enumerate_solutions(0).size(), 1u);
  EXPECT_EQ(enumerate_solutions(8).size(), 1u);
}

TEST(Classify, HitJson) {
  nlohmann::json j = enumerate_solutions();
  EXPECT_EQ(j.dump(), R"([{"d":0,"level":1,"type":"D12"},{"d":8,"level":1,"type":"E8"}])");
}

}  // namespace
}  // namespace vosa
