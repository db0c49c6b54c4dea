#include "vosa/codes.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace vosa;

namespace {

// Independent F_3 dot product on the +-1 representation.
int dot3(const Word& a, const Word& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int x = a[i] == 2 ? -1 : a[i], y = b[i] == 2 ? -1 : b[i];
    s += x * y;
  }
  return ((s % 3) + 3) % 3;
}

using Exp = std::array<int, 6>;

// Expansion of the closed-form marked enumerator printed for the split
// Golay copy, as a polynomial in (X', Y', Z', X'', Y'', Z'').
std::map<Exp, std::int64_t> split_golay_enumerator_oracle() {
  std::map<Exp, std::int64_t> p;
  auto add = [&](const std::array<int, 3>& l, const std::array<int, 3>& r, std::int64_t c) {
    p[{l[0], l[1], l[2], r[0], r[1], r[2]}] += c;
  };
  const std::array<std::array<int, 3>, 3> sixth = {{{6, 0, 0}, {0, 6, 0}, {0, 0, 6}}};
  const std::array<std::array<int, 3>, 3> four11 = {{{4, 1, 1}, {1, 4, 1}, {1, 1, 4}}};
  const std::array<std::array<int, 3>, 3> three3 = {{{3, 3, 0}, {3, 0, 3}, {0, 3, 3}}};
  for (const auto& a : sixth)
    for (const auto& b : sixth) add(a, b, 1);
  for (const auto& a : four11) add(a, {2, 2, 2}, 90);
  for (const auto& a : three3)
    for (const auto& b : three3) add(a, b, 20);
  for (const auto& b : four11) add({2, 2, 2}, b, 90);
  return p;
}

}  // namespace

TEST(DCode, SmallCasesByEnumeration) {
  for (int n = 1; n <= 8; ++n) {
    auto f = d_code_family(n);
    std::vector<Word> oracle;
    for (std::uint32_t m = 0; m < (1u << (2 * n)); ++m) {
      Word w(2 * n);
      for (int i = 0; i < 2 * n; ++i) w[i] = (m >> i) & 1u;
      bool ok = weight(w) % 4 == 0;
      for (int i = 0; i < n; ++i) ok = ok && w[i] == w[n + i];
      if (ok) oracle.push_back(w);
    }
    std::sort(oracle.begin(), oracle.end());
    EXPECT_EQ(f.code.words, oracle) << n;
    if (n >= 2) EXPECT_EQ(f.code.words.size(), 1u << (n - 1)) << n;
  }
}

TEST(DCode, GlueWords) {
  auto f3 = d_code_family(3);
  EXPECT_EQ(f3.code.words.size(), 4u);
  EXPECT_EQ(f3.glue[2], (Word{0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(f3.glue[1], (Word{1, 1, 1, 0, 0, 0}));
  EXPECT_EQ(f3.glue[3], (Word{1, 1, 0, 0, 0, 1}));
  auto f1 = d_code_family(1);
  EXPECT_EQ(f1.code.words, (std::vector<Word>{{0, 0}}));
  EXPECT_EQ(f1.glue[1], (Word{1, 0}));
}

TEST(Golay, SizeAndWeightDistribution) {
  auto g = golay12();
  auto words = g.words();
  ASSERT_EQ(words.size(), 729u);
  EXPECT_EQ(g.dimension(), 6);
  std::map<int, std::int64_t> oracle;
  for (const auto& w : words) {
    int nz = 0;
    for (int x : w) nz += x != 0;
    ++oracle[nz];
  }
  EXPECT_EQ(oracle, (std::map<int, std::int64_t>{{0, 1}, {6, 264}, {9, 440}, {12, 24}}));
  EXPECT_EQ(weight_distribution(g), oracle);
  EXPECT_EQ(minimum_weight(g), 6);
  EXPECT_TRUE(g.contains(Word(12, 1)));
}

TEST(Golay, AllPairsOrthogonal) {
  auto words = golay12().words();
  for (const auto& a : words)
    for (const auto& b : words) ASSERT_EQ(dot3(a, b), 0);
}

TEST(Golay, ElevenBalancedWordsStartingWithPlus) {
  auto g = golay12();
  int count = 0;
  for (const auto& w : g.words())
    if (w[0] == 1 && std::count(w.begin(), w.end(), 1) == 6 && std::count(w.begin(), w.end(), 2) == 6) ++count;
  EXPECT_EQ(count, 11);
}

TEST(Golay, PermutedAndSignFlippedCopyHasSameDistribution) {
  auto g = golay12();
  std::vector<int> perm = {5, 3, 11, 0, 7, 1, 9, 2, 10, 4, 8, 6};
  auto p = permute_code(g, perm);
  TernaryCode flipped;
  flipped.length = 12;
  for (auto w : p.generators) {
    for (int i : {1, 4, 9}) w[i] = (3 - w[i]) % 3;
    flipped.generators.push_back(w);
  }
  EXPECT_EQ(weight_distribution(flipped), weight_distribution(g));
}

TEST(Golay, LambdaBasis) {
  auto g = golay12();
  auto lam = golay_lambda_basis(g);
  ASSERT_EQ(lam.size(), 12u);
  EXPECT_EQ(lam[11], RVec(12, Rational(1, 2)));
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t j = 0; j < 12; ++j) {
      Rational s = 0;
      for (int k = 0; k < 12; ++k) s += lam[i][k] * lam[j][k];
      EXPECT_EQ(s, Rational(i == j ? 3 : 0));
    }
    // Half-integral entries whose shift by (1/2,...,1/2) has even sum.
    Rational sum = 0;
    for (const auto& x : lam[i]) {
      EXPECT_EQ((x - Rational(1, 2)).denominator(), 1);
      sum += x - Rational(1, 2);
    }
    EXPECT_EQ(sum.denominator(), 1);
    EXPECT_EQ(sum.numerator() % 2, 0);
  }
}

TEST(Golay, SplitPermutationPutsBalancedWordInCode) {
  auto g = golay12();
  auto perm = split_permutation(g);
  auto p = permute_code(g, perm);
  Word split(12, 1);
  for (int i = 6; i < 12; ++i) split[i] = 2;
  EXPECT_TRUE(p.contains(split));
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 12; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(Golay, MarkedEnumeratorMatchesClosedForm) {
  auto g = golay12();
  auto p = permute_code(g, split_permutation(g));
  auto m = weight_enumerator(p, true);
  EXPECT_EQ(m.total(), 729);
  EXPECT_EQ(m.coeff({6, 0, 0, 6, 0, 0}), 1);
  EXPECT_EQ(m.coeff({4, 1, 1, 2, 2, 2}), 90);
  EXPECT_EQ(m.coeff({3, 3, 0, 3, 3, 0}), 20);
  EXPECT_EQ(m.coeffs, split_golay_enumerator_oracle());
  for (const auto& [e, c] : m.coeffs) {
    EXPECT_GT(c, 0);
    EXPECT_EQ(e[0] + e[1] + e[2], 6);
    EXPECT_EQ(e[3] + e[4] + e[5], 6);
  }
}

TEST(Golay, UnmarkedEnumeratorAtOnesIsCodeSize) {
  auto m = weight_enumerator(golay12(), false);
  EXPECT_EQ(m.total(), 729);
  EXPECT_EQ(m.coeff({12, 0, 0, 0, 0, 0}), 1);
  EXPECT_EQ(m.coeff({0, 12, 0, 0, 0, 0}), 1);
}

TEST(Codes, JsonGeneratorMatrix) {
  nlohmann::json j = golay12();
  EXPECT_EQ(j["q"], 3);
  EXPECT_EQ(j["n"], 12);
  EXPECT_EQ(j["gens"].size(), 6u);
  nlohmann::json b = d_code_family(4).code;
  EXPECT_EQ(b["q"], 2);
  EXPECT_EQ(b["gens"].size(), 3u);
}

TEST(Golay, MonomialMapFindsKnownEquivalence) {
  auto g = golay12();
  // Build a scrambled copy with a known monomial map and recover one.
  MonomialMap known{{3, 7, 0, 11, 5, 1, 9, 2, 10, 4, 6, 8}, {1, -1, -1, 1, 1, -1, 1, 1, -1, 1, -1, 1}};
  TernaryCode scrambled{12, {}};
  for (const auto& w : g.generators) scrambled.generators.push_back(known.apply(w));
  auto m = find_monomial_map(g, scrambled);
  ASSERT_TRUE(m.has_value());
  std::set<Word> img;
  for (const auto& w : g.words()) img.insert(m->apply(w));
  auto target = scrambled.words();
  EXPECT_TRUE(std::equal(img.begin(), img.end(), target.begin(), target.end()));
  TernaryCode other{12, {}};
  for (int i = 0; i < 6; ++i) {
    Word w(12, 0);
    w[2 * i] = w[2 * i + 1] = 1;
    other.generators.push_back(w);
  }
  EXPECT_FALSE(find_monomial_map(g, other).has_value());
}
