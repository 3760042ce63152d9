#include <gtest/gtest.h>

#include "gen.hpp"
#include "wres/scalar.hpp"

using namespace wres;

TEST(GaussRational, FieldAxioms) {
  gen::Rng r(11);
  for (int trial = 0; trial < 300; ++trial) {
    const GaussRational a = gen::gauss(r), b = gen::gauss(r), c = gen::gauss(r);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  }
}

TEST(GaussRational, ImaginaryUnit) {
  EXPECT_EQ(GaussRational::i() * GaussRational::i(), GaussRational(-1));
  EXPECT_THROW(GaussRational(0).inverse(), std::domain_error);
}

TEST(GaussRational, TextRoundTrip) {
  gen::Rng r(12);
  for (int trial = 0; trial < 300; ++trial) {
    const GaussRational a = gen::gauss(r);
    EXPECT_EQ(parse_gauss(a.str()), a) << a.str();
  }
  EXPECT_EQ(GaussRational::frac(3, 8).str(), "3/8");
  EXPECT_EQ((-GaussRational::i()).str(), "-i");
}

TEST(ScalarExpr, ParsesCanonicalText) {
  const ScalarExpr e = parse_scalar("3/8*pi*hp0*Omega - 1/2*i*s^2");
  EXPECT_EQ(e.coeff(Monomial::of(Sym::pi) * Monomial::of(Sym::hp0) * Monomial::of(Sym::Omega)), GaussRational::frac(3, 8));
  EXPECT_EQ(e.coeff(Monomial::of(Sym::s, 2)), GaussRational::frac(-1, 2) * GaussRational::i());
  EXPECT_EQ(parse_scalar(e.str()), e);
}

TEST(ScalarExpr, RingLaws) {
  gen::Rng r(13);
  const Sym syms[] = {Sym::pi, Sym::hp0, Sym::Omega, Sym::s, Sym::n};
  auto random_expr = [&] {
    ScalarExpr e;
    for (int k = 0; k < 3; ++k)
      e.add(Monomial::of(syms[gen::small_int(r, 0, 4)], static_cast<int>(gen::small_int(r, 0, 2))), gen::gauss(r));
    return e;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const ScalarExpr a = random_expr(), b = random_expr(), c = random_expr();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(parse_scalar(a.str()), a) << a.str();
  }
}

TEST(ScalarExpr, SpecializeDimension) {
  const ScalarExpr e = parse_scalar("1/16*n*s");
  EXPECT_EQ(e.specialize_n(4), parse_scalar("1/4*s"));
}
