#include <gtest/gtest.h>

#include <numbers>

#include "expoly/expoly.hpp"

using namespace expoly;

namespace {

ExpPoly e(const char* text, std::int64_t r = 1) { return parse_expoly(text, ScalarContext(r)); }

}  // namespace

TEST(Symcore, ProductCancelsCrossTerms) {
  EXPECT_EQ(e("exp(z)+1") * e("exp(z)-1"), e("exp(2*z)-1"));
}

TEST(Symcore, AdditiveIdentity) {
  const ExpPoly f = e("z*exp(z^2)+3");
  EXPECT_EQ(f + ExpPoly{}, f);
  EXPECT_TRUE((f - f).is_zero());
}

TEST(Symcore, ProductWithDecayingExponential) {
  EXPECT_EQ(e("exp(z)+exp(2*z)") * e("exp(-4*z)"), e("exp(-3*z)+exp(-2*z)"));
}

TEST(Symcore, EqualExponentsMerge) {
  const ExpPoly f = e("z*exp(z)+2*exp(z)");
  EXPECT_EQ(f.term_count(), 1U);
  EXPECT_EQ(f.multiplier_of(Poly::z()), Poly(std::vector<QScalar>{2, 1}));
}

TEST(Symcore, Derivatives) {
  EXPECT_EQ(e("1+exp(z)").derivative(), e("exp(z)"));
  EXPECT_EQ(e("z*exp(z^2)").derivative(), e("(1+2*z^2)*exp(z^2)"));
  EXPECT_TRUE(e("7/3").derivative().is_zero());
  EXPECT_EQ(e("exp(2*z)").derivative(3), e("8*exp(2*z)"));
}

TEST(Symcore, Order) {
  EXPECT_EQ(e("exp(z^3)+1").order(), 3);
  EXPECT_EQ(e("7*z^5").order(), 0);
  EXPECT_EQ(e("z*exp(z^2)+exp(5*z)").order(), 2);
  EXPECT_EQ(ExpPoly{}.order(), 0);
}

TEST(Symcore, Evaluate) {
  EXPECT_EQ(e("1+exp(z)").evaluate(0.0), std::complex<double>(2.0, 0.0));
  const auto v = e("exp(z^2)").evaluate({1.0, 1.0});
  EXPECT_NEAR(v.real(), -0.4161468365471424, 1e-12);
  EXPECT_NEAR(v.imag(), 0.9092974268256817, 1e-12);
  EXPECT_EQ(ExpPoly{}.evaluate({0.3, -2.0}), std::complex<double>(0.0, 0.0));
}

TEST(Symcore, Antiderivative) {
  EXPECT_EQ(antiderivative_exp1(e("z*exp(2*z)")), e("(z/2-1/4)*exp(2*z)"));
  EXPECT_EQ(antiderivative_exp1(e("1")), e("z"));
  EXPECT_THROW((void)antiderivative_exp1(e("exp(z^2)")), OrderTooHigh);
  const ExpPoly f = e("z^3*exp(-i*z)+2*z+exp(3/2*z)");
  EXPECT_EQ(antiderivative_exp1(f).derivative(), f);
}

TEST(Normalize, DualOrderTwoExample) {
  const NormalizedView v = normalize(e("z^2*exp(-i*z)+z*exp(z^2)+exp(2*z^2+(1-i)*z)"));
  EXPECT_EQ(v.q, 2);
  EXPECT_EQ(v.f0, e("z^2*exp(-i*z)"));
  ASSERT_EQ(v.m(), 2U);
  EXPECT_EQ(v.bands[0].w, QScalar(1L));
  EXPECT_EQ(v.bands[0].multiplier, e("z"));
  EXPECT_EQ(v.bands[1].w, QScalar(2L));
  EXPECT_EQ(v.bands[1].multiplier, e("exp((1-i)*z)"));
}

TEST(Normalize, SingleBand) {
  const NormalizedView v = normalize(e("exp(2*z)"));
  EXPECT_EQ(v.q, 1);
  EXPECT_TRUE(v.f0.is_zero());
  ASSERT_EQ(v.m(), 1U);
  EXPECT_EQ(v.bands[0].w, QScalar(2L));
  EXPECT_EQ(v.bands[0].multiplier, ExpPoly(1L));
}

TEST(Normalize, RadicalMultiplier) {
  const NormalizedView v = normalize(e("1+3*exp(2*z)+sqrt(6)*i*exp(3*z)", 6));
  EXPECT_EQ(v.f0, ExpPoly(1L));
  ASSERT_EQ(v.m(), 2U);
  EXPECT_EQ(v.bands[0].w, QScalar(2L));
  EXPECT_EQ(v.bands[1].multiplier, ExpPoly(QScalar::make(0, 0, 0, 1, 6)));
}

TEST(Normalize, PolynomialThrows) { EXPECT_THROW((void)normalize(e("z^2+1")), NotTranscendental); }

TEST(Normalize, BandOrderPositiveRealsFirst) {
  const NormalizedView v = normalize(e("exp(-z)+exp(i*z)+exp(3*z)+exp(z)"));
  ASSERT_EQ(v.m(), 4U);
  EXPECT_EQ(v.bands[0].w, QScalar(1L));
  EXPECT_EQ(v.bands[1].w, QScalar(3L));
}

TEST(Normalize, DerivativeMultipliersFrei) {
  const auto d = derivative_multipliers(normalize(e("1+4*exp(z)+6*exp(2*z)")));
  ASSERT_EQ(d.size(), 2U);
  EXPECT_EQ(d[0].g, ExpPoly(4L));
  EXPECT_EQ(d[1].g, ExpPoly(12L));
  EXPECT_EQ(d[0].h, ExpPoly(4L));
  EXPECT_EQ(d[1].h, ExpPoly(24L));
}

TEST(Normalize, DerivativeMultipliersRadical) {
  const auto d = derivative_multipliers(normalize(e("1+3*exp(2*z)+sqrt(6)*i*exp(3*z)", 6)));
  ASSERT_EQ(d.size(), 2U);
  EXPECT_EQ(d[0].g, ExpPoly(6L));
  EXPECT_EQ(d[1].g, e("3*sqrt(6)*i", 6));
  EXPECT_EQ(d[0].h, ExpPoly(12L));
  EXPECT_EQ(d[1].h, e("9*sqrt(6)*i", 6));
}

TEST(Normalize, DerivativeMultipliersConstantBand) {
  const QScalar b(2, -1), w(make_rational(1, 3), 1);
  const ExpPoly f = ExpPoly(5L) + b * ExpPoly::exp(Poly::monomial(w, 1));
  const auto d = derivative_multipliers(normalize(f));
  ASSERT_EQ(d.size(), 1U);
  EXPECT_EQ(d[0].g, ExpPoly(w * b));
  EXPECT_EQ(d[0].h, ExpPoly(w * w * b));
}

TEST(Normalize, DerivativeMultipliersMatchDerivatives) {
  const ExpPoly f = e("z^2*exp(-i*z)+z*exp(z^2)+exp(2*z^2+(1-i)*z)");
  const NormalizedView v = normalize(f);
  const auto d = derivative_multipliers(v);
  NormalizedView g{v.q, v.f0.derivative(), {}}, h{v.q, v.f0.derivative(2), {}};
  for (std::size_t j = 0; j < v.m(); ++j) {
    g.bands.push_back({v.bands[j].w, d[j].g});
    h.bands.push_back({v.bands[j].w, d[j].h});
  }
  EXPECT_EQ(g.reconstruct(), f.derivative());
  EXPECT_EQ(h.reconstruct(), f.derivative(2));
}
