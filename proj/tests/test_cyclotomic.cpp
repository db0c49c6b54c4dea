#include "vosa/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using vosa::CycNum;
using vosa::Rational;

namespace {

CycNum random_cyc(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::array<std::int64_t, 8> a{};
  for (auto& x : a) x = d(rng);
  std::int64_t den = std::uniform_int_distribution<int>(1, 4)(rng);
  return CycNum(a, den);
}

}  // namespace

TEST(CycNum, ZetaHasOrder24) {
  CycNum z = CycNum::zeta(1);
  CycNum p(1);
  for (int k = 1; k <= 24; ++k) {
    p *= z;
    if (k < 24) EXPECT_FALSE(p == CycNum(1)) << k;
  }
  EXPECT_EQ(p, CycNum(1));
}

TEST(CycNum, EveryRootOfUnityMatchesPolarForm) {
  for (int k = 0; k < 24; ++k) {
    auto c = CycNum::zeta(k).to_complex();
    auto e = std::polar(1.0, 2 * std::numbers::pi * k / 24);
    EXPECT_NEAR(std::abs(c - e), 0.0, 1e-12) << k;
    EXPECT_EQ(CycNum::zeta(k).pow(24), CycNum(1));
  }
}

TEST(CycNum, SquareRootsAndImaginaryUnit) {
  EXPECT_EQ(CycNum::imag_unit() * CycNum::imag_unit(), CycNum(-1));
  EXPECT_EQ(CycNum::sqrt2() * CycNum::sqrt2(), CycNum(2));
  EXPECT_EQ(CycNum::sqrt3() * CycNum::sqrt3(), CycNum(3));
  // e^{pi i / 6} cubed is i, to the sixth is -1.
  EXPECT_EQ(CycNum::zeta(2).pow(3), CycNum::imag_unit());
  EXPECT_EQ(CycNum::zeta(2).pow(6), CycNum(-1));
  EXPECT_NEAR(CycNum::sqrt3().to_complex().real(), std::sqrt(3.0), 1e-12);
}

TEST(CycNum, RingLawsOnRandomElements) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    CycNum a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    auto lhs = (a * b).to_complex(), rhs = a.to_complex() * b.to_complex();
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-9);
  }
}

TEST(CycNum, InverseAndConjugation) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    CycNum a = random_cyc(rng);
    if (a.is_zero()) continue;
    EXPECT_EQ(a * a.inverse(), CycNum(1));
    EXPECT_NEAR(std::abs(a.conj().to_complex() - std::conj(a.to_complex())), 0.0, 1e-9);
  }
  EXPECT_THROW(CycNum().inverse(), std::domain_error);
}

TEST(CycNum, OverflowIsReported) {
  CycNum big(INT64_MAX / 2);
  EXPECT_THROW(big * big, std::overflow_error);
  EXPECT_THROW(big + big + big, std::overflow_error);
}

TEST(CycNum, JsonRoundTrip) {
  CycNum a = CycNum(Rational(3, 4)) + CycNum::zeta(5) * CycNum(-2);
  nlohmann::json j = a;
  ASSERT_EQ(j.size(), 8u);
  EXPECT_EQ(j.at(0).at(0).get<int>(), 3);
  EXPECT_EQ(j.at(0).at(1).get<int>(), 4);
  EXPECT_EQ(j.get<CycNum>(), a);
}
