#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wres/fword.hpp"
#include "wres/operators.hpp"

namespace wres {

/// One term of the boundary sum: r + l - k - j - |alpha| - 1 = -n.
struct CaseIndex {
  std::string id;
  int r = 0;
  int l = 0;
  int k = 0;
  int j = 0;
  int alpha = 0;
};

std::vector<CaseIndex> enumerate_cases(int n = 4);

/// (-i)^{|alpha|+j+k+1} / (alpha! (j+k+1)!).
GaussRational case_prefactor(const CaseIndex& c);

/// Operators and parametrices shared by the five cases. The left factor always comes from
/// the starred operator and the right factor from the plain one.
struct BoundaryContext {
  Family family;
  OperatorSpec left;
  OperatorSpec right;
  ParametrixSymbols left_inv;
  ParametrixSymbols right_inv;

  explicit BoundaryContext(Family f, const OperatorOptions& opt = {});
};

struct BoundaryCaseResult {
  CaseIndex index;
  Family family = Family::dirac;
  TraceExpr value;
  TraceExpr expected;
  bool match = false;
};

struct CaseFactors {
  SymbolExpr left;
  SymbolExpr right;
  GaussRational prefactor;
};

/// Factors of the case integrand before the trace; nullopt when the case vanishes
/// identically (checked, not assumed).
std::optional<CaseFactors> case_factors(const BoundaryContext& ctx, const CaseIndex& c);

/// Left factor d_xi_n^k pi^+ d_x_n^j sigma_r, right factor d_xi_n^{j+1} d_x_n^k sigma_l,
/// traced, integrated over xi_n and over the unit cosphere.
TraceExpr case_value(const BoundaryContext& ctx, const CaseIndex& c);

/// Expected closed forms for the default operators.
TraceExpr expected_case(Family f, const std::string& id);
TraceExpr expected_psi(Family f);

BoundaryCaseResult evaluate_case(const BoundaryContext& ctx, const CaseIndex& c);
BoundaryCaseResult evaluate_case(const CaseIndex& c, Family f);

/// Evaluates all five cases. Cases run in parallel when `parallel` is set.
std::vector<BoundaryCaseResult> evaluate_all(const BoundaryContext& ctx, bool parallel = true);

TraceExpr psi_total(Family f);
TraceExpr psi_total(const std::vector<BoundaryCaseResult>& cases);

/// Case b and c evaluated with the zeroth-order symbol split into its geometric part
/// (first) and twist sandwich c(xi) beta c(xi)/|xi|^4 (second).
struct SplitValue {
  TraceExpr geometric;
  TraceExpr twist;
};
SplitValue split_case(Family f, const std::string& id);

/// Integrand of the boundary case with the given factors, used by the split.
TraceExpr integrate_boundary(const SymbolExpr& left, const SymbolExpr& right, const GaussRational& prefactor);

}  // namespace wres
