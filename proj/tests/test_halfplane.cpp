#include <gtest/gtest.h>

#include "gen.hpp"
#include "wres/halfplane.hpp"

using namespace wres;

namespace {

// Residue oracle for simple poles only: num(p) / den'(p), independent of partial fractions.
GaussRational simple_residue(const RatFunc& f, const GaussRational& p) {
  return f.num().eval(p) / f.den().derivative().eval(p);
}

}  // namespace

TEST(Poly, DivmodReconstructs) {
  gen::Rng r(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = gen::poly(r, 5);
    Poly b = gen::poly(r, 3);
    if (b.is_zero()) b = Poly(GaussRational(1));
    const auto [q, rem] = Poly::divmod(a, b);
    EXPECT_EQ(q * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree() == 0 ? 0 : b.degree());
  }
  EXPECT_THROW(Poly::divmod(Poly::x(), Poly()), std::domain_error);
}

TEST(PartialFractions, Recombine) {
  gen::Rng r(22);
  for (int trial = 0; trial < 200; ++trial) {
    const RatFunc f = gen::ratfunc(r);
    EXPECT_EQ(partial_fractions(f).recombine(), f) << f.str();
  }
}

TEST(HalfPlane, DecompositionSumsBack) {
  gen::Rng r(23);
  for (int trial = 0; trial < 200; ++trial) {
    const RatFunc f = gen::ratfunc(r);
    const HalfPlaneDecomposition d = decompose(f);
    EXPECT_EQ(d.plus + d.minus, f);
    for (const Pole& p : linear_pole_factorization(d.plus)) EXPECT_GT(p.at.im(), 0) << f.str();
    for (const Pole& p : linear_pole_factorization(d.minus)) EXPECT_LT(p.at.im(), 0) << f.str();
    // The plus part vanishes at infinity.
    EXPECT_LT(d.plus.num().degree(), d.plus.den().degree() == 0 ? 1 : d.plus.den().degree());
  }
}

TEST(HalfPlane, ProjectionIsIdempotent) {
  gen::Rng r(24);
  for (int trial = 0; trial < 200; ++trial) {
    const RatFunc f = gen::ratfunc(r);
    const RatFunc p = pi_plus(f);
    EXPECT_EQ(pi_plus(p), p);
    EXPECT_TRUE(pi_plus(f - p).is_zero());
  }
  EXPECT_TRUE(pi_plus(RatFunc(Poly({1, 2, 3}))).is_zero());
}

TEST(HalfPlane, ProjectionIsLinear) {
  gen::Rng r(25);
  for (int trial = 0; trial < 100; ++trial) {
    const RatFunc f = gen::ratfunc(r), g = gen::ratfunc(r);
    const GaussRational c = gen::gauss(r);
    EXPECT_EQ(pi_plus(f + g.scaled(c)), pi_plus(f) + pi_plus(g).scaled(c));
  }
}

TEST(HalfPlane, RealPoleRejected) {
  EXPECT_THROW(decompose(RatFunc(Poly(GaussRational(1)), Poly::linear_power(GaussRational(1), 1))), std::exception);
}

TEST(HalfPlane, LineIntegralMatchesSimpleResidues) {
  gen::Rng r(26);
  for (int trial = 0; trial < 100; ++trial) {
    // Distinct simple poles, numerator degree at most deg(den) - 2.
    Poly den(GaussRational(1));
    std::vector<GaussRational> poles;
    while (poles.size() < 3) {
      const GaussRational p = gen::offaxis_pole(r);
      if (std::find(poles.begin(), poles.end(), p) == poles.end()) poles.push_back(p);
    }
    for (const auto& p : poles) den = den * Poly::linear_power(p, 1);
    Poly num = gen::poly(r, 1);
    if (num.is_zero()) num = Poly(GaussRational(1));
    const RatFunc f(num, den);
    GaussRational upper;
    for (const auto& p : poles)
      if (p.im() > 0) upper += simple_residue(f, p);
    // 2 pi i * sum with pi formal.
    EXPECT_EQ(integrate_xi_n(f), ScalarExpr(Monomial::of(Sym::pi), GaussRational(2) * GaussRational::i() * upper));
    EXPECT_EQ(pi_prime(f), GaussRational::i() * upper);
  }
}

TEST(HalfPlane, LineIntegralDivergence) {
  EXPECT_THROW(integrate_xi_n(RatFunc(Poly::x(), Poly({1, 0, 1}))), std::exception);
  EXPECT_EQ(integrate_xi_n(RatFunc(Poly(GaussRational(1)), Poly({1, 0, 1}))), ScalarExpr::symbol(Sym::pi));
}
