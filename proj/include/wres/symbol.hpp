#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wres/clifford.hpp"
#include "wres/fword.hpp"
#include "wres/matrix.hpp"
#include "wres/poly.hpp"
#include "wres/scalar.hpp"

namespace wres {

/// Monomial in the tangential covector components xi_1..xi_3.
struct XiMono {
  std::array<std::int8_t, 3> e{};

  static XiMono of(int i, int power = 1) {
    XiMono m;
    m.e[i - 1] = static_cast<std::int8_t>(power);
    return m;
  }
  int degree() const { return e[0] + e[1] + e[2]; }
  bool is_one() const { return degree() == 0; }
  friend XiMono operator*(XiMono a, const XiMono& b) {
    for (int k = 0; k < 3; ++k) a.e[k] = static_cast<std::int8_t>(a.e[k] + b.e[k]);
    return a;
  }
  friend auto operator<=>(const XiMono&, const XiMono&) = default;
  friend bool operator==(const XiMono&, const XiMono&) = default;
  std::string str() const;  // `xi1^2*xi3`, empty for 1
};

struct SymbolKey {
  XiMono xi;
  FWord word;
  Monomial mono;
  RatFunc rat;  // numerator monic
  friend auto operator<=>(const SymbolKey&, const SymbolKey&) = default;
  friend bool operator==(const SymbolKey&, const SymbolKey&) = default;
};

/// Grouped form used for equality and serialization: (xi, word, mono) -> matrix of RatFunc.
struct CanonicalKey {
  XiMono xi;
  FWord word;
  Monomial mono;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};
using CanonicalSymbol = std::map<CanonicalKey, std::vector<RatFunc>>;

/// Boundary symbol: sum of xi'^beta * r(xin) * M * word * mono, with M a matrix of the
/// active Clifford model.
class SymbolExpr {
 public:
  explicit SymbolExpr(const CliffordModel& model) : model_(&model) {}

  static SymbolExpr identity(const CliffordModel& m);
  static SymbolExpr matrix(const CliffordModel& m, const GMatrix& a);
  static SymbolExpr scalar(const CliffordModel& m, const ScalarExpr& s);
  static SymbolExpr ratfunc(const CliffordModel& m, const RatFunc& r);
  static SymbolExpr word(const CliffordModel& m, const FWord& w);
  static SymbolExpr atom(const CliffordModel& m, const FAtom& a) { return word(m, FWord{a}); }
  static SymbolExpr xi(const CliffordModel& m, int i);  // i in 1..3
  static SymbolExpr xin(const CliffordModel& m);
  static SymbolExpr c(const CliffordModel& m, int i);
  static SymbolExpr chat(const CliffordModel& m, int i);
  /// c(xi') = sum_{i<4} xi_i c(e_i).
  static SymbolExpr c_xi_prime(const CliffordModel& m);
  /// c(dx_n) = c(e_4).
  static SymbolExpr c_dxn(const CliffordModel& m) { return c(m, 4); }
  /// c(xi) = c(xi') + xin c(dx_n).
  static SymbolExpr c_xi(const CliffordModel& m);
  /// |xi|^2 = 1 + xin^2 on |xi'| = 1.
  static SymbolExpr xi_norm2(const CliffordModel& m) { return ratfunc(m, RatFunc::xi_norm2()); }

  const CliffordModel& model() const { return *model_; }
  const std::map<SymbolKey, GMatrix>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const XiMono& xi, const FWord& w, const Monomial& mono, const RatFunc& r, const GMatrix& a);

  SymbolExpr operator-() const;
  SymbolExpr& operator+=(const SymbolExpr& o);
  SymbolExpr& operator-=(const SymbolExpr& o);
  friend SymbolExpr operator+(SymbolExpr a, const SymbolExpr& b) { return a += b; }
  friend SymbolExpr operator-(SymbolExpr a, const SymbolExpr& b) { return a -= b; }
  /// sym_mul: matrices multiply in order, words concatenate, scalars commute.
  friend SymbolExpr operator*(const SymbolExpr& a, const SymbolExpr& b);
  SymbolExpr scaled(const GaussRational& c) const;
  SymbolExpr scaled(const ScalarExpr& s) const;
  SymbolExpr scaled(const RatFunc& r) const;

  /// Structural equality via the grouped canonical form.
  bool equals(const SymbolExpr& o) const;
  CanonicalSymbol canonical() const;
  /// Substitutes xi_3^2 = 1 - xi_1^2 - xi_2^2.
  SymbolExpr on_sphere() const;
  /// Keeps terms with / without hp0.
  SymbolExpr filter_hp0(bool with) const;
  /// Keeps terms whose word is empty (geometric part) or nonempty (twist part).
  SymbolExpr filter_word(bool nonempty) const;

  /// Canonical multi-line serialization for golden files.
  std::string str() const;

 private:
  const CliffordModel* model_;
  std::map<SymbolKey, GMatrix> terms_;
};

SymbolExpr sym_mul(const SymbolExpr& a, const SymbolExpr& b);

/// d/dxi_n on the rational factors.
SymbolExpr d_xi_n(const SymbolExpr& a);

/// Normal x-derivative at the boundary point: d|xi|^2 -> hp0, d c(xi') -> (hp0/2) c(xi'),
/// d c(dx_n) -> 0, atoms -> D[4]{atom}. Denominators must be powers of |xi|^2 and the
/// input must be free of hp0.
SymbolExpr d_x_n(const SymbolExpr& a);

/// Tangential x-derivative (direction 1..3) at the boundary point. Metric data is flat to
/// first order in tangential directions there, so only twist atoms contribute.
SymbolExpr d_x_tangential(const SymbolExpr& a, int direction);

/// Integrand after the trace: (xi', trace atoms, commuting monomial) -> rational function.
struct IntegrandKey {
  XiMono xi;
  TraceKey traces;
  Monomial mono;
  friend auto operator<=>(const IntegrandKey&, const IntegrandKey&) = default;
  friend bool operator==(const IntegrandKey&, const IntegrandKey&) = default;
};

class TraceIntegrand {
 public:
  const std::map<IntegrandKey, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const IntegrandKey& key, const RatFunc& r);
  TraceIntegrand& operator+=(const TraceIntegrand& o);

  /// Requires empty xi' monomials and constant rational factors.
  TraceExpr to_trace_expr() const;
  std::string str() const;

 private:
  std::map<IntegrandKey, RatFunc> terms_;
};

TraceIntegrand trace_total(const SymbolExpr& a);

/// Exact moment of xi'^beta over the unit sphere in R^3, in units of Omega.
GaussRational sphere_moment(const XiMono& m);

/// Replaces each xi' monomial by its moment times Omega.
TraceIntegrand sphere_integrate(const TraceIntegrand& t);

}  // namespace wres
