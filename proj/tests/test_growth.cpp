#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "expoly/expoly.hpp"

using namespace expoly;

namespace {

ExpPoly e(const char* text) { return parse_expoly(text); }
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST(Growth, FrequencySet) {
  auto w = frequency_set(e("exp(z)+exp(2*z)"));
  EXPECT_FALSE(w.includes_zero);
  EXPECT_EQ(w.points, (std::vector<QScalar>{1L, 2L}));

  w = frequency_set(e("exp(i*z)+z"));
  EXPECT_TRUE(w.includes_zero);
  ASSERT_EQ(w.points.size(), 1U);
  EXPECT_EQ(w.points[0], -QScalar::imag_unit());

  w = frequency_set(e("1+exp(2*z)"));
  EXPECT_TRUE(w.includes_zero);
  EXPECT_EQ(w.points, (std::vector<QScalar>{2L}));
}

TEST(Growth, HullSegmentCountsTwice) {
  EXPECT_DOUBLE_EQ(hull(std::vector<std::complex<double>>{0.0, 1.0, 2.0}).circumference, 4.0);
}

TEST(Growth, HullTriangle) {
  const Hull h = hull(std::vector<std::complex<double>>{0.0, -1.0, {0.0, -1.0}});
  EXPECT_EQ(h.vertices.size(), 3U);
  EXPECT_NEAR(h.circumference, 2.0 + std::sqrt(2.0), 1e-12);
}

TEST(Growth, HullPoint) {
  EXPECT_EQ(hull(std::vector<std::complex<double>>{5.0}).circumference, 0.0);
  EXPECT_EQ(hull(std::vector<std::complex<double>>{5.0, 5.0}).circumference, 0.0);
  EXPECT_THROW((void)hull(std::vector<std::complex<double>>{}), InvalidParameter);
}

TEST(Growth, HullDropsInteriorAndEdgePoints) {
  const Hull h = hull(std::vector<std::complex<double>>{0.0, 2.0, {2.0, 2.0}, {0.0, 2.0}, 1.0, {1.0, 1.0}});
  EXPECT_EQ(h.vertices.size(), 4U);
  EXPECT_NEAR(h.circumference, 8.0, 1e-12);
}

TEST(Growth, Characteristic) {
  auto a = characteristic_asymptotic(e("exp(z)+exp(2*z)"));
  EXPECT_EQ(a.q, 1);
  EXPECT_NEAR(a.leading, 2 / kPi, 1e-12);
  EXPECT_NEAR(characteristic_asymptotic(e("exp(-4*z)")).leading, 4 / kPi, 1e-12);
  EXPECT_NEAR(characteristic_asymptotic(e("(exp(z)+exp(2*z))*exp(-4*z)")).leading, 3 / kPi, 1e-12);
  EXPECT_NEAR(characteristic_asymptotic(e("exp(i*z)+exp(-z)")).leading, (2 + std::sqrt(2.0)) / (2 * kPi), 1e-12);
}

TEST(Growth, CharacteristicOfPolynomial) {
  const auto a = characteristic_asymptotic(e("z^3+1"));
  EXPECT_EQ(a.q, 0);
  ASSERT_TRUE(a.degenerate_log.has_value());
  EXPECT_EQ(*a.degenerate_log, 3);
}

TEST(Growth, ProximityQuotient) {
  EXPECT_NEAR(proximity_quotient_asymptotic(e("1+exp(2*z)"), e("exp(z)")).leading, 2 / kPi, 1e-12);
  EXPECT_NEAR(proximity_quotient_asymptotic(e("exp(z)+exp(2*z)"), e("exp(-z)")).leading, 3 / kPi, 1e-12);
  const ExpPoly f = e("z*exp(i*z)-exp(3*z)+2");
  EXPECT_NEAR(proximity_quotient_asymptotic(f, f).leading, 0.0, 1e-12);
  EXPECT_THROW((void)proximity_quotient_asymptotic(f, ExpPoly{}), DivisionByZero);
  EXPECT_THROW((void)proximity_quotient_asymptotic(e("exp(z)"), e("exp(z^2)")), OrderMismatch);
}

TEST(Growth, QuotientByOneMatchesCharacteristic) {
  const ExpPoly f = e("exp(i*z)+exp(-z)+z");
  EXPECT_NEAR(proximity_quotient_asymptotic(f, ExpPoly(1L)).leading, characteristic_asymptotic(f).leading, 1e-12);
}

TEST(Growth, ZeroCounting) {
  EXPECT_NEAR(zero_counting_asymptotic(e("exp(z)-1")).leading, 1 / kPi, 1e-12);
  EXPECT_NEAR(zero_counting_asymptotic(e("exp(z)+exp(2*z)")).leading, 1 / kPi, 1e-12);
  EXPECT_NEAR(zero_counting_asymptotic(e("exp(z)")).leading, 0.0, 1e-12);
  EXPECT_THROW((void)zero_counting_asymptotic(ExpPoly{}), InvalidParameter);
}

TEST(Growth, Dominates) {
  EXPECT_TRUE(dominates(e("exp(z^2)"), e("exp(z)")));
  EXPECT_FALSE(dominates(e("exp(z)"), e("exp(2*z)")));
  EXPECT_FALSE(dominates(e("z"), e("1")));
}
