#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "wres/gauss.hpp"

namespace wres {

/// Commuting formal symbols. `n` is the manifold dimension, kept formal where a
/// general-dimension coefficient is displayed.
enum class Sym : int { pi = 0, hp0, Omega, s, n };
inline constexpr int kNumSyms = 5;

std::string_view sym_name(Sym s);

/// Monomial in the commuting symbols, exponent vector.
struct Monomial {
  std::array<int, kNumSyms> exp{};

  static Monomial one() { return {}; }
  static Monomial of(Sym s, int power = 1) {
    Monomial m;
    m.exp[static_cast<int>(s)] = power;
    return m;
  }
  int degree(Sym s) const { return exp[static_cast<int>(s)]; }
  bool is_one() const {
    for (int e : exp)
      if (e != 0) return false;
    return true;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) {
    for (int k = 0; k < kNumSyms; ++k) a.exp[k] += b.exp[k];
    return a;
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// `pi*hp0^2*Omega`; empty string for the unit monomial.
  std::string str() const;
};

/// Polynomial over Q(i) in the commuting symbols. Zero coefficients are never stored.
class ScalarExpr {
 public:
  ScalarExpr() = default;
  ScalarExpr(GaussRational c) { add(Monomial::one(), std::move(c)); }  // NOLINT
  ScalarExpr(long c) : ScalarExpr(GaussRational(c)) {}                 // NOLINT
  ScalarExpr(const Monomial& m, GaussRational c) { add(m, std::move(c)); }
  static ScalarExpr symbol(Sym s) { return {Monomial::of(s), GaussRational(1)}; }

  const std::map<Monomial, GaussRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussRational coeff(const Monomial& m) const;

  void add(const Monomial& m, const GaussRational& c);

  ScalarExpr operator-() const;
  ScalarExpr& operator+=(const ScalarExpr& o);
  ScalarExpr& operator-=(const ScalarExpr& o);
  ScalarExpr& operator*=(const GaussRational& c);
  friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
  friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }
  friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator*(ScalarExpr a, const GaussRational& c) { return a *= c; }
  friend ScalarExpr operator*(const GaussRational& c, ScalarExpr a) { return a *= c; }
  friend bool operator==(const ScalarExpr&, const ScalarExpr&) = default;
  friend auto operator<=>(const ScalarExpr& a, const ScalarExpr& b) { return a.terms_ <=> b.terms_; }

  /// Substitutes the formal dimension symbol `n` by an integer.
  ScalarExpr specialize_n(long value) const;

  std::string str() const;

 private:
  std::map<Monomial, GaussRational> terms_;
};

/// Parses `3/8*pi*hp0*Omega - 1/2*i*s^2` style text.
ScalarExpr parse_scalar(std::string_view text);

}  // namespace wres
