#include "wres/halfplane.hpp"

#include <stdexcept>

namespace wres {

namespace {

RatFunc principal_part(const GaussRational& pole, const std::vector<GaussRational>& coeffs) {
  RatFunc out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    out += RatFunc(Poly(coeffs[k]), Poly::linear_power(pole, static_cast<int>(k) + 1));
  }
  return out;
}

PartialFractions checked_fractions(const RatFunc& r) {
  PartialFractions pf = partial_fractions(r);
  for (const auto& [pole, coeffs] : pf.principal)
    if (sgn(pole.im()) == 0) throw std::domain_error("symbol not in H");
  return pf;
}

GaussRational upper_residue_sum(const RatFunc& r) {
  GaussRational sum;
  for (const auto& [pole, coeffs] : checked_fractions(r).principal)
    if (sgn(pole.im()) > 0 && !coeffs.empty()) sum += coeffs[0];
  return sum;
}

}  // namespace

HalfPlaneDecomposition decompose(const RatFunc& r) {
  HalfPlaneDecomposition d;
  const PartialFractions pf = checked_fractions(r);
  d.minus = RatFunc(pf.polynomial);
  for (const auto& [pole, coeffs] : pf.principal) {
    if (sgn(pole.im()) > 0)
      d.plus += principal_part(pole, coeffs);
    else
      d.minus += principal_part(pole, coeffs);
  }
  return d;
}

RatFunc pi_plus(const RatFunc& r) { return decompose(r).plus; }

SymbolExpr pi_plus(const SymbolExpr& a) {
  SymbolExpr out(a.model());
  for (const auto& [k, m] : a.terms()) {
    const PartialFractions pf = checked_fractions(k.rat);
    for (const auto& [pole, coeffs] : pf.principal) {
      if (sgn(pole.im()) <= 0) continue;
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        const RatFunc term(Poly(GaussRational(1)), Poly::linear_power(pole, static_cast<int>(j) + 1));
        out.add_term(k.xi, k.word, k.mono, term, m.scaled(coeffs[j]));
      }
    }
  }
  return out;
}

GaussRational pi_prime(const RatFunc& r) {
  if (r.den().degree() < r.num().degree() + 1) throw std::domain_error("divergent line integral");
  return GaussRational::i() * upper_residue_sum(r);
}

ScalarExpr integrate_xi_n(const RatFunc& r) {
  if (r.is_zero()) return {};
  if (r.den().degree() < r.num().degree() + 2) throw std::domain_error("divergent line integral");
  const GaussRational v = GaussRational(2) * GaussRational::i() * upper_residue_sum(r);
  return ScalarExpr(Monomial::of(Sym::pi), v);
}

TraceIntegrand integrate_xi_n(const TraceIntegrand& t) {
  TraceIntegrand out;
  for (const auto& [k, r] : t.terms()) {
    const ScalarExpr v = integrate_xi_n(r);
    for (const auto& [mono, c] : v.terms()) out.add(IntegrandKey{k.xi, k.traces, k.mono * mono}, RatFunc(c));
  }
  return out;
}

}  // namespace wres
