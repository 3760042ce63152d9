#include <gtest/gtest.h>

#include "wres/boundary.hpp"
#include "wres/identities.hpp"
#include "wres/lichnerowicz.hpp"
#include "wres/oracle.hpp"

using namespace wres;

namespace {

const Family kFamilies[] = {Family::dirac, Family::signature};

void expect_all_match(const std::vector<CheckRecord>& recs) {
  ASSERT_FALSE(recs.empty());
  for (const auto& r : recs) EXPECT_TRUE(r.match) << r.name << "\ncomputed: " << r.computed << "\nexpected: " << r.expected;
}

}  // namespace

TEST(Parametrix, StarredTwistIsAdjoint) {
  for (Family f : kFamilies) EXPECT_TRUE(field_adjoint(twist_sigma0(f, false)).equals(twist_sigma0(f, true)));
}

TEST(Parametrix, MatchesDisplayedForms) {
  for (Family f : kFamilies) expect_all_match(parametrix_identities(f));
}

TEST(Boundary, CasesEnumerated) {
  const auto cases = enumerate_cases(4);
  std::vector<std::string> ids;
  for (const auto& c : cases) ids.push_back(c.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"a(I)", "a(II)", "a(III)", "b", "c"}));
}

TEST(Boundary, CasesAndCancellations) {
  for (Family f : kFamilies) expect_all_match(case_identities(f, false));
}

TEST(Boundary, SerialAndParallelAgree) {
  for (Family f : kFamilies) {
    const BoundaryContext ctx(f);
    const auto serial = evaluate_all(ctx, false);
    const auto parallel = evaluate_all(ctx, true);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t k = 0; k < serial.size(); ++k) EXPECT_EQ(serial[k].value, parallel[k].value);
  }
}

TEST(Boundary, TotalIsSumOfCases) {
  for (Family f : kFamilies) {
    TraceExpr sum;
    for (const auto& c : enumerate_cases(4)) sum += expected_case(f, c.id);
    EXPECT_EQ(psi_total(f), sum);
    EXPECT_EQ(psi_total(f), expected_psi(f));
  }
  EXPECT_TRUE(psi_total(Family::signature).is_zero());
}

TEST(DiffOp, LeibnizRule) {
  // d_i o (g) = g d_i + Der_i(g)
  const CliffordModel& m = CliffordModel::spin();
  const SymbolExpr g = SymbolExpr::c(m, 1) * SymbolExpr::atom(m, Phi(2));
  for (int i = 1; i <= 4; ++i) {
    const DiffOp lhs = DiffOp::partial(m, i) * DiffOp::field(g);
    DiffOp rhs = DiffOp::field(field_der(g, i));
    rhs.add({i}, g);
    EXPECT_TRUE((lhs - rhs).is_zero()) << (lhs - rhs).str();
  }
}

TEST(DiffOp, PartialsCommute) {
  const CliffordModel& m = CliffordModel::signature();
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      const DiffOp a = DiffOp::partial(m, i) * DiffOp::partial(m, j);
      const DiffOp b = DiffOp::partial(m, j) * DiffOp::partial(m, i);
      EXPECT_TRUE((a - b).is_zero());
      EXPECT_EQ(a.order(), 2);
    }
}

TEST(Lichnerowicz, ResidualVanishes) {
  for (Family f : kFamilies) {
    const LichnerowiczCheck c = verify_lichnerowicz(f);
    EXPECT_TRUE(c.match) << c.residual.str();
  }
}

TEST(Lichnerowicz, NegativeControlsDetected) {
  LichnerowiczOptions perturb;
  perturb.perturb = true;
  LichnerowiczOptions literal;
  literal.literal_shift = true;
  for (Family f : kFamilies) EXPECT_FALSE(verify_lichnerowicz(f, perturb).match);
  EXPECT_FALSE(verify_lichnerowicz(Family::signature, literal).match);
}

TEST(Lichnerowicz, LaplaceRoundTrip) {
  for (Family f : kFamilies) {
    const DiffOp p = twisted_square(f);
    EXPECT_TRUE((rebuild_laplace(extract_laplace(p), p.model()) - eval_x0(p)).is_zero());
  }
}

TEST(Lichnerowicz, NonScalarLeadingSymbolRejected) {
  const CliffordModel& m = CliffordModel::spin();
  const DiffOp p = DiffOp::field(SymbolExpr::c(m, 1)) * DiffOp::partial(m, 1) * DiffOp::partial(m, 2);
  EXPECT_THROW(extract_laplace(p), std::exception);
}

TEST(Interior, DiracMatchesDisplay) { EXPECT_EQ(interior_trace(Family::dirac), interior_trace_displayed(Family::dirac)); }

TEST(Interior, SignatureDiffersOnlyInCrossTerm) {
  // The engine and the displayed integrand agree up to the quadratic twist term.
  const TraceExpr diff = interior_trace(Family::signature) - interior_trace_displayed(Family::signature);
  EXPECT_FALSE(diff.is_zero());
  EXPECT_TRUE(diff.only_symbol(Sym::s).is_zero()) << diff.str();
}

TEST(Theorem57, ExactlyOneConventionMatches) {
  const Theorem57Report r = theorem57_report();
  EXPECT_TRUE(r.as_written_matches);
  EXPECT_FALSE(r.laplace_matches);
  // The two conventions differ by the sign of E, so their sum is 8 pi^2 tr(s/6).
  EXPECT_EQ(r.convention_as_written + r.convention_laplace,
            TraceExpr(dimF_key(), ScalarExpr(Monomial::of(Sym::pi, 2) * Monomial::of(Sym::s), GaussRational::frac(64, 3))));
}
