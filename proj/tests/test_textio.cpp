#include <gtest/gtest.h>

#include "expoly/expoly.hpp"

using namespace expoly;

TEST(TextIO, ParseRadicalExample) {
  const ExpPoly f = parse_expoly("1 + 3*exp(2*z) + sqrt(6)*i*exp(3*z)", ScalarContext(6));
  EXPECT_EQ(f.term_count(), 3U);
  EXPECT_EQ(f.multiplier_of(Poly::monomial(3L, 1)), Poly(QScalar::make(0, 0, 0, 1, 6)));
}

TEST(TextIO, ParseZeroAndExpansion) {
  EXPECT_TRUE(parse_expoly("0").is_zero());
  EXPECT_EQ(parse_expoly("(exp(z)+1)*(exp(z)-1)"), parse_expoly("exp(2*z)-1"));
}

TEST(TextIO, ParseOperators) {
  EXPECT_EQ(parse_expoly("-z^2/2 + (3/4)*z"), ExpPoly(Poly(std::vector<QScalar>{0, QScalar(make_rational(3, 4)),
                                                                              QScalar(make_rational(-1, 2))})));
  EXPECT_EQ(parse_expoly("exp(z)^3"), parse_expoly("exp(3*z)"));
  EXPECT_EQ(parse_expoly("i^2"), ExpPoly(-1L));
  EXPECT_THROW((void)parse_expoly("2 i"), SyntaxError);
}

TEST(TextIO, SyntaxErrors) {
  EXPECT_THROW((void)parse_expoly("exp(("), SyntaxError);
  EXPECT_THROW((void)parse_expoly("1 +"), SyntaxError);
  EXPECT_THROW((void)parse_expoly("w"), SyntaxError);
  try {
    (void)parse_expoly("1 + $");
    FAIL();
  } catch (const SyntaxError& err) {
    EXPECT_EQ(err.span().start, 4U);
  }
}

TEST(TextIO, RadicandMustMatchContext) {
  EXPECT_THROW((void)parse_expoly("sqrt(6)", ScalarContext(2)), RadicandMismatch);
  EXPECT_THROW((void)parse_expoly("sqrt(6)"), RadicandMismatch);
}

TEST(TextIO, DivisionOnlyByScalars) {
  EXPECT_THROW((void)parse_expoly("1/z"), SyntaxError);
  EXPECT_THROW((void)parse_expoly("1/0"), SyntaxError);
}

TEST(TextIO, Print) {
  EXPECT_EQ(print_expoly(parse_expoly("exp(2*z)-1")), "-1 + exp(2*z)");
  EXPECT_EQ(print_expoly(ExpPoly{}), "0");
  EXPECT_EQ(print_expoly(frei(2).solution), "1 + 4*exp(z) + 6*exp(2*z)");
  EXPECT_EQ(print_equation(frei(2).equation), "f'' + exp(-z)*f' - 4*f = 0");
}

TEST(TextIO, RoundTrip) {
  const char* samples[] = {"z^2*exp(-i*z)+z*exp(z^2)+exp(2*z^2+(1-i)*z)", "1-sqrt(6)*i*exp(-z)+2*exp(-2*z)",
                           "-(2+4*z^2)*z", "3/7*i*z^5*exp(-z^3+1/2*z)"};
  const ScalarContext ctx(6);
  for (const char* s : samples) {
    const ExpPoly f = parse_expoly(s, ctx);
    EXPECT_EQ(parse_expoly(print_expoly(f), ctx), f) << s;
  }
}
