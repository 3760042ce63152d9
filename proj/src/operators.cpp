#include "wres/operators.hpp"

#include <stdexcept>

namespace wres {

std::string family_name(Family f) { return f == Family::dirac ? "dirac" : "signature"; }

const CliffordModel& family_model(Family f) {
  return f == Family::dirac ? CliffordModel::spin() : CliffordModel::signature();
}

std::string OperatorSpec::name() const { return family_name(family) + (star ? "*" : ""); }

GaussRational frame_omega(int s, int t, int i) {
  // Collar frame e~_i = sqrt(h) e_i (i < 4), e~_4 = dx_n, boundary normal coordinates:
  // nabla_{e~_i} e~_j = (hp0/2) delta_ij e~_4, nabla_{e~_i} e~_4 = -(hp0/2) e~_i.
  if (i == 4) return GaussRational(0);
  if (s == 4 && t == i) return GaussRational::frac(1, 2);
  if (t == 4 && s == i) return GaussRational::frac(-1, 2);
  return GaussRational(0);
}

SymbolExpr frame_connection_sigma0(Family f) {
  const CliffordModel& m = family_model(f);
  const bool forms = f == Family::signature;
  GMatrix acc(m.rep_dim());
  for (int i = 1; i <= 4; ++i) {
    GMatrix inner(m.rep_dim());
    for (int s = 1; s <= 4; ++s)
      for (int t = 1; t <= 4; ++t) {
        const GaussRational w = frame_omega(s, t, i);
        if (w.is_zero()) continue;
        GMatrix part = -(m.c(s) * m.c(t));
        if (forms) part += m.chat(s) * m.chat(t);
        inner += part.scaled(w * GaussRational::frac(1, 4));
      }
    acc += m.c(i) * inner;
  }
  return SymbolExpr::matrix(m, acc).scaled(ScalarExpr::symbol(Sym::hp0));
}

SymbolExpr twist_sigma0(Family f, bool star, const GaussRational& lambda) {
  const CliffordModel& m = family_model(f);
  SymbolExpr out(m);
  for (int j = 1; j <= 4; ++j) {
    if (f == Family::dirac) {
      out += SymbolExpr::c(m, j) * SymbolExpr::atom(m, SigmaF(j));
      if (star)
        out -= SymbolExpr::c(m, j) * SymbolExpr::atom(m, PhiStar(j));
      else
        out += SymbolExpr::c(m, j) * SymbolExpr::atom(m, Phi(j));
    } else {
      out += SymbolExpr::c(m, j) * SymbolExpr::atom(m, SigmaFe(j));
      const FAtom w = star ? OmegaFStar(j) : OmegaF(j);
      out -= (SymbolExpr::chat(m, j) * SymbolExpr::atom(m, w)).scaled(GaussRational::frac(1, 2));
    }
  }
  return out.scaled(lambda);
}

OperatorSpec build_operator(Family f, bool star, const OperatorOptions& opt) {
  const CliffordModel& m = family_model(f);
  OperatorSpec spec{f, star, &m, SymbolExpr(m), SymbolExpr(m), SymbolExpr(m), SymbolExpr(m)};
  spec.sigma1 = SymbolExpr::c_xi(m).scaled(GaussRational::i());
  if (opt.with_frame) spec.frame = frame_connection_sigma0(f);
  if (opt.with_twist) spec.twist = twist_sigma0(f, star, opt.lambda);
  spec.sigma0 = spec.frame + spec.twist;
  return spec;
}

ParametrixSymbols parametrix(const OperatorSpec& spec) {
  const CliffordModel& m = *spec.model;
  const SymbolExpr inv_norm = SymbolExpr::ratfunc(m, RatFunc(Poly(GaussRational(1)), Poly({1, 0, 1})));
  SymbolExpr q1 = (SymbolExpr::c_xi(m) * inv_norm).scaled(GaussRational::i());
  const SymbolExpr dq1 = d_x_n(q1);
  const SymbolExpr cn = SymbolExpr::c_dxn(m);
  SymbolExpr q2 = -(q1 * (spec.sigma0 * q1 + cn * dq1));

  const SymbolExpr lead = (spec.sigma1 * q1 - SymbolExpr::identity(m)).on_sphere();
  if (!lead.canonical().empty()) throw std::logic_error("leading composition residual:\n" + lead.str());
  // Order -1 part of sigma(D o Q): sigma_1 q_{-2} + sigma_0 q_{-1} + d_xin(sigma_1) D_xn q_{-1}.
  const SymbolExpr next = (spec.sigma1 * q2 + spec.sigma0 * q1 + cn * dq1).on_sphere();
  if (!next.canonical().empty()) throw std::logic_error("order -1 composition residual:\n" + next.str());
  return {std::move(q1), std::move(q2)};
}

SymbolExpr sigma_m2_displayed(const OperatorSpec& spec) {
  const CliffordModel& m = *spec.model;
  const SymbolExpr cxi = SymbolExpr::c_xi(m);
  auto inv_pow = [&](int k) {
    Poly d(GaussRational(1));
    for (int t = 0; t < k; ++t) d = d * Poly({1, 0, 1});
    return SymbolExpr::ratfunc(m, RatFunc(Poly(GaussRational(1)), d));
  };
  const ScalarExpr hp0 = ScalarExpr::symbol(Sym::hp0);
  const SymbolExpr dcxi_prime = SymbolExpr::c_xi_prime(m).scaled(hp0 * ScalarExpr(GaussRational::frac(1, 2)));
  const SymbolExpr bracket = dcxi_prime * SymbolExpr::xi_norm2(m) - cxi.scaled(hp0);
  return cxi * spec.sigma0 * cxi * inv_pow(2) + cxi * inv_pow(3) * SymbolExpr::c_dxn(m) * bracket;
}

}  // namespace wres
