#pragma once

#include <string>

#include "wres/clifford.hpp"
#include "wres/symbol.hpp"

namespace wres {

enum class Family { dirac, signature };

std::string family_name(Family f);
const CliffordModel& family_model(Family f);

/// Connection one-form of the collar frame at the boundary point, in units of hp0:
/// omega_{s,t}(e_i) for s, t, i in 1..4.
GaussRational frame_omega(int s, int t, int i);

/// Levi-Civita part of sigma_0 at the boundary point,
/// sum_i c(e_i) (1/4) sum_{s,t} omega_{s,t}(e_i) (kappa chat_s chat_t - c_s c_t) with
/// kappa = 1 on forms and 0 on spinors.
SymbolExpr frame_connection_sigma0(Family f);

/// Twist part of sigma_0, every atom scaled by lambda.
SymbolExpr twist_sigma0(Family f, bool star, const GaussRational& lambda = GaussRational(1));

struct OperatorSpec {
  Family family = Family::dirac;
  bool star = false;
  const CliffordModel* model = nullptr;
  SymbolExpr sigma1;
  SymbolExpr frame;
  SymbolExpr twist;
  SymbolExpr sigma0;

  std::string name() const;
};

struct OperatorOptions {
  bool with_frame = true;
  bool with_twist = true;
  GaussRational lambda = GaussRational(1);
};

OperatorSpec build_operator(Family f, bool star, const OperatorOptions& opt = {});

struct ParametrixSymbols {
  SymbolExpr sigma_m1;
  SymbolExpr sigma_m2;
};

/// sigma_{-1} = i c(xi)/|xi|^2 and sigma_{-2} from the composition formula at the
/// boundary point. Throws std::logic_error carrying the residual if either composition
/// check fails.
ParametrixSymbols parametrix(const OperatorSpec& spec);

/// c(xi) sigma_0 c(xi)/|xi|^4 + c(xi)/|xi|^6 c(dx_n)[d_xn c(xi') |xi|^2 - c(xi) hp0],
/// assembled directly from its displayed shape.
SymbolExpr sigma_m2_displayed(const OperatorSpec& spec);

}  // namespace wres
