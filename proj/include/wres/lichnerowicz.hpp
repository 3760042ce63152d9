#pragma once

#include <map>
#include <string>
#include <vector>

#include "wres/fword.hpp"
#include "wres/operators.hpp"
#include "wres/symbol.hpp"

namespace wres {

/// Sorted multi-index over d_1..d_4, order at most 2.
using MultiIndex = std::vector<int>;

/// Differential operator at a normal-coordinate point: multi-index -> coefficient.
/// Coefficients are symbols without xi dependence (matrix (x) word (x) commuting monomial).
class DiffOp {
 public:
  explicit DiffOp(const CliffordModel& m) : model_(&m) {}
  static DiffOp field(const SymbolExpr& f);          // zeroth order
  static DiffOp partial(const CliffordModel& m, int i);  // d_i

  const CliffordModel& model() const { return *model_; }
  const std::map<MultiIndex, SymbolExpr>& terms() const { return terms_; }
  SymbolExpr coeff(const MultiIndex& a) const;
  bool is_zero() const { return terms_.empty(); }
  int order() const;

  void add(const MultiIndex& a, const SymbolExpr& f);
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  DiffOp operator-() const;
  DiffOp scaled(const GaussRational& c) const;
  /// Composition with Leibniz: d_i o g = g d_i + Der_i(g).
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

  std::string str() const;

 private:
  const CliffordModel* model_;
  std::map<MultiIndex, SymbolExpr> terms_;
};

/// Der_i applied to a coefficient: Leibniz over its word atoms; Clifford matrices and
/// commuting symbols are constant.
SymbolExpr field_der(const SymbolExpr& f, int direction);

/// Formal adjoint of a coefficient: conjugate-transposed matrix, adjoint word.
SymbolExpr field_adjoint(const SymbolExpr& f);

/// Normal-coordinate rules at the base point: undifferentiated spin connection and
/// Christoffel atoms vanish.
SymbolExpr eval_x0(const SymbolExpr& f);
DiffOp eval_x0(const DiffOp& p);

/// sigma^j = spin connection + metric part of the twist connection.
SymbolExpr sigma_up(Family f, int j);
/// c(Phi), c(Phi*), and chat(omega) = sum chat(e_k) omega(e_k), chat(omega*).
SymbolExpr c_phi(bool star);
SymbolExpr chat_omega(bool star);

/// Imported squared-operator axiom for the untwisted-shift part (D^F)^2.
DiffOp d_squared_axiom(Family f);
/// D = sum c(e_j)(d_j + sigma^j).
DiffOp dirac_diffop(Family f);
/// D~*D~ or D^*D^ assembled from the axiom and the twist terms.
DiffOp twisted_square(Family f);

struct LaplaceData {
  std::vector<SymbolExpr> omega;  // omega_1..omega_4 at index 0..3, before evaluation
  SymbolExpr E;                   // evaluated at the base point
};

/// Unique connection and endomorphism with P = -(g^{ij}(nabla_i nabla_j - Gamma) + E).
/// Throws for a non-scalar leading symbol.
LaplaceData extract_laplace(const DiffOp& p);
/// -(sum (d_i + omega_i)^2 - Gamma^k (d_k + omega_k) + E), evaluated at the base point.
DiffOp rebuild_laplace(const LaplaceData& d, const CliffordModel& m);

struct LichnerowiczOptions {
  /// Negative control: flips the sign of the quadratic shift term.
  bool perturb = false;
  /// Signature only: use a minus sign inside the connection shift, as displayed in one
  /// intermediate formula, instead of the sign forced by the first-order coefficient.
  bool literal_shift = false;
};

/// Connection shift added to the twisted connection in direction i.
SymbolExpr connection_shift(Family f, int i, const LichnerowiczOptions& opt = {});
/// Covariant derivative of an endomorphism-valued coefficient: Der_j X + [sigma^F_j, X].
SymbolExpr nabla_F(Family f, int j, const SymbolExpr& x);
/// Right-hand side of the Lichnerowicz identity as a differential operator.
DiffOp lichnerowicz_rhs(Family f, const LichnerowiczOptions& opt = {});
/// Zeroth-order term displayed by the theorem, after the connection Laplacian.
SymbolExpr displayed_zeroth(Family f, const LichnerowiczOptions& opt = {});

struct LichnerowiczCheck {
  Family family;
  DiffOp residual;
  bool match = false;
};
LichnerowiczCheck verify_lichnerowicz(Family f, const LichnerowiczOptions& opt = {});

/// 4 pi^2 trace(s/6 + E) with E from the extracted Laplace data.
TraceExpr interior_trace(Family f);
/// Displayed interior integrand (4 pi^2 times the bracketed trace). The signature form
/// carries the general-dimension coefficient n/16 and is specialized to n = 4.
TraceExpr interior_trace_displayed(Family f);

/// Imported E of the squared signature operator, P = -Delta^e + E.
SymbolExpr signature_square_E();

struct Theorem57Report {
  TraceExpr stated_trace_E;   // tr[s/4 + 1/2 omega^2]
  TraceExpr traced_E;         // trace of the imported E
  TraceExpr target;           // 2 pi^2 tr[(5/6) s + omega^2]
  TraceExpr convention_as_written;  // 4 pi^2 tr(s/6 + E)
  TraceExpr convention_laplace;     // 4 pi^2 tr(s/6 - E)
  bool as_written_matches = false;
  bool laplace_matches = false;
  bool traced_matches_stated = false;
};
Theorem57Report theorem57_report();

/// Interior integrand paired with the boundary total of the five cases.
struct WresStatement {
  Family family;
  TraceExpr interior;
  TraceExpr boundary;
  std::string str() const;
};
WresStatement wres_boundary_report(Family f);

}  // namespace wres
