#pragma once

#include "wres/poly.hpp"
#include "wres/scalar.hpp"
#include "wres/symbol.hpp"

namespace wres {

/// r = plus + minus with plus holomorphic off the upper half-plane poles and
/// vanishing at infinity; minus carries the lower-half poles and the polynomial part.
struct HalfPlaneDecomposition {
  RatFunc plus;
  RatFunc minus;
};

/// Throws "symbol not in H" on a real pole.
HalfPlaneDecomposition decompose(const RatFunc& r);

RatFunc pi_plus(const RatFunc& r);
SymbolExpr pi_plus(const SymbolExpr& a);

/// (1/2pi) times the contour integral over the upper half-plane: i * sum of upper residues.
GaussRational pi_prime(const RatFunc& r);

/// Integral over the real line by residues, 2 pi i * sum of upper residues, with pi
/// carried as the formal symbol. Throws "divergent line integral" when
/// deg(den) < deg(num) + 2.
ScalarExpr integrate_xi_n(const RatFunc& r);
TraceIntegrand integrate_xi_n(const TraceIntegrand& t);

}  // namespace wres
