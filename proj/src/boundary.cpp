#include "wres/boundary.hpp"

#include <omp.h>

#include <stdexcept>

#include "wres/halfplane.hpp"

namespace wres {

std::vector<CaseIndex> enumerate_cases(int n) {
  if (n != 4) throw std::invalid_argument("only n = 4 is supported");
  std::vector<CaseIndex> out;
  // Admissible indices with r, l in {-1, -2} at truncation depth -2.
  for (int r = -1; r >= -2; --r)
    for (int l = -1; l >= -2; --l)
      for (int k = 0; k <= 3; ++k)
        for (int j = 0; j <= 3; ++j)
          for (int a = 0; a <= 3; ++a) {
            if (r + l - k - j - a - 1 != -n) continue;
            std::string id;
            if (r == -1 && l == -1) {
              if (a == 1 && k == 0 && j == 0) id = "a(I)";
              if (a == 0 && k == 0 && j == 1) id = "a(II)";
              if (a == 0 && k == 1 && j == 0) id = "a(III)";
            } else if (r == -2 && l == -1 && k + j + a == 0) {
              id = "b";
            } else if (r == -1 && l == -2 && k + j + a == 0) {
              id = "c";
            }
            if (id.empty()) throw std::logic_error("unexpected boundary index");
            out.push_back({id, r, l, k, j, a});
          }
  const std::vector<std::string> order = {"a(I)", "a(II)", "a(III)", "b", "c"};
  std::vector<CaseIndex> sorted;
  for (const auto& name : order)
    for (const auto& c : out)
      if (c.id == name) sorted.push_back(c);
  return sorted;
}

GaussRational case_prefactor(const CaseIndex& c) {
  GaussRational p(1);
  for (int t = 0; t < c.alpha + c.j + c.k + 1; ++t) p = p * (-GaussRational::i());
  long fact = 1;
  for (int t = 2; t <= c.j + c.k + 1; ++t) fact *= t;
  for (int t = 2; t <= c.alpha; ++t) fact *= t;
  return p * GaussRational::frac(1, fact);
}

BoundaryContext::BoundaryContext(Family f, const OperatorOptions& opt)
    : family(f),
      left(build_operator(f, true, opt)),
      right(build_operator(f, false, opt)),
      left_inv(parametrix(left)),
      right_inv(parametrix(right)) {}

TraceExpr integrate_boundary(const SymbolExpr& left, const SymbolExpr& right, const GaussRational& prefactor) {
  const SymbolExpr prod = (left * right).scaled(prefactor);
  return sphere_integrate(integrate_xi_n(trace_total(prod))).to_trace_expr();
}

namespace {

const SymbolExpr& pick(const ParametrixSymbols& p, int order) {
  if (order == -1) return p.sigma_m1;
  if (order == -2) return p.sigma_m2;
  throw std::invalid_argument("parametrix order out of range");
}

}  // namespace

std::optional<CaseFactors> case_factors(const BoundaryContext& ctx, const CaseIndex& c) {
  const SymbolExpr& sl = pick(ctx.right_inv, c.l);
  if (c.alpha > 0) {
    // The tangential x-derivative of the right factor vanishes at the boundary point,
    // which kills the whole case; verify it instead of assuming it.
    for (int i = 1; i <= 3; ++i) {
      SymbolExpr rf = sl;
      for (int t = 0; t < c.j + 1; ++t) rf = d_xi_n(rf);
      if (!d_x_tangential(rf, i).canonical().empty())
        throw std::logic_error("tangential derivative of the right factor does not vanish");
    }
    return std::nullopt;
  }
  SymbolExpr lf = pick(ctx.left_inv, c.r);
  for (int t = 0; t < c.j; ++t) lf = d_x_n(lf);
  lf = pi_plus(lf);
  for (int t = 0; t < c.k; ++t) lf = d_xi_n(lf);
  SymbolExpr rf = sl;
  for (int t = 0; t < c.k; ++t) rf = d_x_n(rf);
  for (int t = 0; t < c.j + 1; ++t) rf = d_xi_n(rf);
  return CaseFactors{std::move(lf), std::move(rf), case_prefactor(c)};
}

TraceExpr case_value(const BoundaryContext& ctx, const CaseIndex& c) {
  const auto f = case_factors(ctx, c);
  if (!f) return {};
  return integrate_boundary(f->left, f->right, f->prefactor);
}

namespace {

ScalarExpr pi_omega(const GaussRational& c, int hp0 = 0) {
  Monomial m = Monomial::of(Sym::pi) * Monomial::of(Sym::Omega);
  if (hp0) m = m * Monomial::of(Sym::hp0, hp0);
  return ScalarExpr(m, c);
}

TraceKey tr(const FAtom& a) { return trace_key(FWord{a}); }

}  // namespace

TraceExpr expected_case(Family f, const std::string& id) {
  TraceExpr e;
  const bool dirac = f == Family::dirac;
  const GaussRational a = dirac ? GaussRational::frac(3, 8) : GaussRational::frac(3, 2);
  const GaussRational g = dirac ? GaussRational::frac(9, 8) : GaussRational::frac(9, 2);
  if (id == "a(I)") return e;
  if (id == "a(II)") return TraceExpr(dimF_key(), pi_omega(-a, 1));
  if (id == "a(III)") return TraceExpr(dimF_key(), pi_omega(a, 1));
  if (id == "b") {
    e.add(dimF_key(), pi_omega(g, 1));
    if (dirac) {
      e.add(tr(SigmaF(4)), pi_omega(-1));
      e.add(tr(PhiStar(4)), pi_omega(1));
    } else {
      e.add(tr(SigmaFe(4)), pi_omega(-4));
    }
    return e;
  }
  if (id == "c") {
    e.add(dimF_key(), pi_omega(-g, 1));
    if (dirac) {
      e.add(tr(SigmaF(4)), pi_omega(1));
      e.add(tr(Phi(4)), pi_omega(1));
    } else {
      e.add(tr(SigmaFe(4)), pi_omega(4));
    }
    return e;
  }
  throw std::invalid_argument("unknown case '" + id + "'");
}

TraceExpr expected_psi(Family f) {
  TraceExpr e;
  if (f == Family::dirac) {
    e.add(tr(PhiStar(4)), pi_omega(1));
    e.add(tr(Phi(4)), pi_omega(1));
  }
  return e;
}

BoundaryCaseResult evaluate_case(const BoundaryContext& ctx, const CaseIndex& c) {
  BoundaryCaseResult r;
  r.index = c;
  r.family = ctx.family;
  r.value = case_value(ctx, c);
  r.expected = expected_case(ctx.family, c.id);
  r.match = r.value == r.expected;
  return r;
}

BoundaryCaseResult evaluate_case(const CaseIndex& c, Family f) { return evaluate_case(BoundaryContext(f), c); }

std::vector<BoundaryCaseResult> evaluate_all(const BoundaryContext& ctx, bool parallel) {
  const std::vector<CaseIndex> cases = enumerate_cases(4);
  std::vector<BoundaryCaseResult> out(cases.size());
  std::vector<std::string> errors(cases.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t t = 0; t < cases.size(); ++t) {
    try {
      out[t] = evaluate_case(ctx, cases[t]);
    } catch (const std::exception& ex) {
      errors[t] = ex.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);
  return out;
}

TraceExpr psi_total(const std::vector<BoundaryCaseResult>& cases) {
  TraceExpr sum;
  for (const auto& c : cases) sum += c.value;
  return sum;
}

TraceExpr psi_total(Family f) { return psi_total(evaluate_all(BoundaryContext(f))); }

SplitValue split_case(Family f, const std::string& id) {
  if (id != "b" && id != "c") throw std::invalid_argument("split is defined for cases b and c");
  CaseIndex idx;
  for (const auto& c : enumerate_cases(4))
    if (c.id == id) idx = c;
  SplitValue out;
  out.geometric = case_value(BoundaryContext(f, {true, false, GaussRational(1)}), idx);

  const CliffordModel& m = family_model(f);
  const SymbolExpr cxi = SymbolExpr::c_xi(m);
  const SymbolExpr inv4 = SymbolExpr::ratfunc(m, RatFunc(Poly(GaussRational(1)), Poly({1, 0, 1}) * Poly({1, 0, 1})));
  const SymbolExpr q1 =
      (cxi * SymbolExpr::ratfunc(m, RatFunc(Poly(GaussRational(1)), Poly({1, 0, 1})))).scaled(GaussRational::i());
  if (id == "b") {
    const SymbolExpr sandwich = cxi * twist_sigma0(f, true) * cxi * inv4;
    out.twist = integrate_boundary(pi_plus(sandwich), d_xi_n(q1), case_prefactor(idx));
  } else {
    const SymbolExpr sandwich = cxi * twist_sigma0(f, false) * cxi * inv4;
    out.twist = integrate_boundary(pi_plus(q1), d_xi_n(sandwich), case_prefactor(idx));
  }
  return out;
}

}  // namespace wres
