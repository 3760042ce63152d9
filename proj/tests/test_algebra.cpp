#include <gtest/gtest.h>

#include "gen.hpp"
#include "wres/clifford.hpp"
#include "wres/symbol.hpp"

using namespace wres;

TEST(Clifford, Relations) {
  for (const CliffordModel* m : {&CliffordModel::spin(), &CliffordModel::signature()}) {
    const GMatrix id = m->identity();
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        const GMatrix anti = m->c(i) * m->c(j) + m->c(j) * m->c(i);
        EXPECT_EQ(anti, id.scaled(GaussRational(i == j ? -2 : 0))) << m->name() << " " << i << j;
        EXPECT_EQ(m->c(i).adjoint(), -m->c(i));
        if (m->has_cohat()) {
          EXPECT_EQ(m->chat(i) * m->chat(j) + m->chat(j) * m->chat(i), id.scaled(GaussRational(i == j ? 2 : 0)));
          EXPECT_TRUE((m->c(i) * m->chat(j) + m->chat(j) * m->c(i)).is_zero());
        }
      }
  }
  EXPECT_THROW(CliffordModel::spin().chat(1), std::exception);
}

TEST(Clifford, TraceOfProducts) {
  // tr c_i c_j = -dim delta_ij; trace of an odd product vanishes.
  for (const CliffordModel* m : {&CliffordModel::spin(), &CliffordModel::signature()}) {
    for (int i = 1; i <= 4; ++i) {
      EXPECT_TRUE(m->c(i).trace().is_zero());
      for (int j = 1; j <= 4; ++j) {
        EXPECT_EQ((m->c(i) * m->c(j)).trace(), GaussRational(i == j ? -m->rep_dim() : 0));
        for (int k = 1; k <= 4; ++k) EXPECT_TRUE((m->c(i) * m->c(j) * m->c(k)).trace().is_zero());
      }
    }
  }
}

TEST(Matrix, KronMixedProduct) {
  gen::Rng r(31);
  auto random = [&](int n) {
    GMatrix a(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = gen::gauss(r);
    return a;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const GMatrix a = random(2), b = random(3), c = random(2), d = random(3);
    EXPECT_EQ(GMatrix::kron(a, b) * GMatrix::kron(c, d), GMatrix::kron(a * c, b * d));
    EXPECT_EQ(GMatrix::kron(a, b).trace(), a.trace() * b.trace());
    EXPECT_EQ((a * c).adjoint(), c.adjoint() * a.adjoint());
  }
}

TEST(FWord, AdjointIsInvolution) {
  gen::Rng r(32);
  for (int trial = 0; trial < 300; ++trial) {
    const FWord w = gen::word(r, 4);
    const auto [s1, w1] = adjoint(w);
    const auto [s2, w2] = adjoint(w1);
    EXPECT_EQ(w2, w) << w.str();
    EXPECT_EQ(s1 * s2, 1);
  }
}

TEST(FWord, CyclicNormalIgnoresRotation) {
  gen::Rng r(33);
  for (int trial = 0; trial < 300; ++trial) {
    const FWord w = gen::word(r, 5);
    if (w.empty()) continue;
    FWord rotated = w;
    std::rotate(rotated.atoms.begin(), rotated.atoms.begin() + gen::small_int(r, 0, static_cast<long>(w.size()) - 1),
                rotated.atoms.end());
    EXPECT_EQ(cyclic_normal(rotated), cyclic_normal(w));
    EXPECT_EQ(cyclic_normal(cyclic_normal(w)), cyclic_normal(w));
  }
}

TEST(FWord, TextRoundTrip) {
  gen::Rng r(34);
  for (int trial = 0; trial < 300; ++trial) {
    const FWord w = gen::word(r, 4);
    EXPECT_EQ(parse_word(w.str()), w) << w.str();
  }
}

TEST(Assignment, StarredAtomsAreAdjoints) {
  for (std::uint64_t seed : {0u, 1u, 7u}) {
    Assignment a(seed, 2);
    for (int j = 1; j <= 4; ++j) {
      EXPECT_EQ(a.matrix(PhiStar(j)), a.matrix(Phi(j)).adjoint());
      EXPECT_EQ(a.matrix(OmegaFStar(j)), a.matrix(OmegaF(j)).adjoint());
    }
  }
}

TEST(Assignment, WordAdjointMatchesMatrixAdjoint) {
  gen::Rng r(35);
  for (int trial = 0; trial < 100; ++trial) {
    Assignment a(static_cast<std::uint64_t>(trial), 2);
    const FWord w = gen::word(r, 3);
    const auto [sign, w2] = adjoint(w);
    EXPECT_EQ(a.word(w).adjoint(), a.word(w2).scaled(GaussRational(sign))) << w.str();
  }
}

TEST(Assignment, Deterministic) {
  Assignment a(42, 3), b(42, 3), c(43, 3);
  EXPECT_EQ(a.matrix(Phi(2)), b.matrix(Phi(2)));
  EXPECT_NE(a.matrix(Phi(2)), c.matrix(Phi(2)));
}

TEST(TraceExpr, CyclicKeysEvaluateConsistently) {
  gen::Rng r(36);
  for (int trial = 0; trial < 100; ++trial) {
    const FWord w = gen::word(r, 4);
    Assignment a(static_cast<std::uint64_t>(trial), 2);
    const TraceExpr t(trace_key(w), ScalarExpr(1));
    EXPECT_EQ(a.eval(t), a.word(w).trace()) << w.str();
  }
}

TEST(SymbolExpr, ProductAssociative) {
  gen::Rng r(37);
  const CliffordModel& m = CliffordModel::signature();
  auto random = [&] {
    SymbolExpr s(m);
    for (int k = 0; k < 3; ++k) {
      SymbolExpr t = SymbolExpr::c(m, static_cast<int>(gen::small_int(r, 1, 4))) *
                     SymbolExpr::chat(m, static_cast<int>(gen::small_int(r, 1, 4)));
      t = t * SymbolExpr::word(m, gen::word(r, 2));
      t = t.scaled(gen::ratfunc(r, false));
      if (gen::small_int(r, 0, 1)) t = t * SymbolExpr::xi(m, static_cast<int>(gen::small_int(r, 1, 3)));
      s += t;
    }
    return s;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const SymbolExpr a = random(), b = random(), c = random();
    EXPECT_TRUE(((a * b) * c).equals(a * (b * c)));
    EXPECT_TRUE((a * (b + c)).equals(a * b + a * c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(SymbolExpr, CliffordSymbolSquares) {
  // c(xi)^2 = -|xi|^2 on the unit cosphere in the tangential variables.
  for (const CliffordModel* m : {&CliffordModel::spin(), &CliffordModel::signature()}) {
    const SymbolExpr sq = (SymbolExpr::c_xi(*m) * SymbolExpr::c_xi(*m)).on_sphere();
    EXPECT_TRUE(sq.equals(-SymbolExpr::xi_norm2(*m))) << sq.str();
  }
}
