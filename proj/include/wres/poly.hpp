#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wres/gauss.hpp"

namespace wres {

/// Univariate polynomial in xin over Q(i). Coefficients low to high, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(GaussRational c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<GaussRational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly({GaussRational(0), GaussRational(1)}); }
  /// (x - root)^k
  static Poly linear_power(const GaussRational& root, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<GaussRational>& coeffs() const { return c_; }
  GaussRational coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : GaussRational(); }
  GaussRational lead() const { return c_.empty() ? GaussRational() : c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const GaussRational& s) const;
  friend bool operator==(const Poly&, const Poly&) = default;
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  /// Euclidean division; throws "division by zero polynomial" for b = 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0

  Poly monic() const;
  Poly derivative() const;
  GaussRational eval(const GaussRational& x) const;
  /// p(x + a)
  Poly taylor_shift(const GaussRational& a) const;

  /// `xin^2 + 1`, `(1+2*i)*xin - i`
  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussRational> c_;
};

struct Pole {
  GaussRational at;
  int multiplicity = 0;
  friend bool operator==(const Pole&, const Pole&) = default;
};

/// Rational function num/den in xin, reduced, with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(GaussRational(1)) {}
  RatFunc(GaussRational c) : num_(std::move(c)), den_(GaussRational(1)) {}  // NOLINT
  RatFunc(Poly p) : num_(std::move(p)), den_(GaussRational(1)) {}           // NOLINT
  RatFunc(Poly num, Poly den);  // ratfunc_normalize

  static RatFunc x() { return RatFunc(Poly::x()); }
  /// 1 + xin^2, the restriction of |xi|^2 to |xi'| = 1.
  static RatFunc xi_norm2() { return RatFunc(Poly({1, 0, 1})); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  GaussRational constant_value() const { return num_.coeff(0); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc scaled(const GaussRational& s) const;

  RatFunc derivative() const;

  /// Splits off the leading numerator coefficient: *this = c * r, r with monic numerator.
  std::pair<GaussRational, RatFunc> split_scalar() const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;
  friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b);

  /// `(num)/(den)`, or the bare polynomial when den = 1.
  std::string str() const;

 private:
  Poly num_;
  Poly den_;
};

/// Poles of r (roots of its denominator), sorted by (im, re). Throws "pole not in Q(i)".
std::vector<Pole> linear_pole_factorization(const RatFunc& r);

struct PartialFractions {
  Poly polynomial;
  /// For each pole, coefficients c_1..c_m of c_k/(x - pole)^k.
  std::vector<std::pair<GaussRational, std::vector<GaussRational>>> principal;

  RatFunc recombine() const;
};

PartialFractions partial_fractions(const RatFunc& r);

RatFunc parse_ratfunc(std::string_view text);

}  // namespace wres
