#pragma once

#include <vector>

#include "wres/boundary.hpp"
#include "wres/operators.hpp"
#include "wres/report.hpp"

namespace wres {

/// Half-plane projections, contour functional and line integrals on the worked examples.
std::vector<CheckRecord> halfplane_identities();

/// Clifford trace identities used by the boundary cases, both families.
std::vector<CheckRecord> trace_identities();

/// sigma_{-1}, sigma_{-2} against their displayed shapes, geometric sigma_0 and
/// star-consistency of the twist part.
std::vector<CheckRecord> parametrix_identities(Family f);

/// Five cases, split b/c pipelines and the exact cancellations.
std::vector<CheckRecord> case_identities(Family f, bool parallel = true);

/// Boundary total and the assembled residue statement.
std::vector<CheckRecord> psi_identities(Family f);

/// Theorems for the squared operators, negative controls, Laplace round-trip and
/// adjoint symmetry of E.
std::vector<CheckRecord> lichnerowicz_identities(Family f);

/// Interior integrands against their displayed forms.
std::vector<CheckRecord> interior_identities(Family f);

/// Dual-convention report for the squared signature operator.
std::vector<CheckRecord> theorem57_identities();

}  // namespace wres
