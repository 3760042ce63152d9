#include "wres/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "expr_parser.hpp"

namespace wres {

namespace {

std::strong_ordering cmp_gauss_vec(const std::vector<GaussRational>& a,
                                   const std::vector<GaussRational>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto c = a[k] <=> b[k];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool is_negative_coeff(const GaussRational& c) {
  return (c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
}

}  // namespace

Poly Poly::linear_power(const GaussRational& root, int k) {
  Poly lin({-root, GaussRational(1)});
  Poly out(GaussRational(1));
  for (int j = 0; j < k; ++j) out = out * lin;
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::scaled(const GaussRational& s) const {
  if (s.is_zero()) return {};
  Poly out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) { return cmp_gauss_vec(a.c_, b.c_); }

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly q;
  Poly r = a;
  if (r.degree() < b.degree()) return {q, r};
  std::vector<GaussRational> qc(r.degree() - b.degree() + 1);
  GaussRational inv_lead = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    GaussRational f = r.lead() * inv_lead;
    qc[shift] = f;
    for (int k = 0; k <= b.degree(); ++k) r.c_[k + shift] -= f * b.c_[k];
    r.c_.pop_back();
    r.trim();
  }
  return {Poly(std::move(qc)), r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussRational> out(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * GaussRational(static_cast<long>(k));
  return Poly(std::move(out));
}

GaussRational Poly::eval(const GaussRational& x) const {
  GaussRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::taylor_shift(const GaussRational& a) const {
  // Horner in the shifted variable: p(t + a).
  Poly lin({a, GaussRational(1)});
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Poly(*it);
  return acc;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    GaussRational c = c_[k];
    if (c.is_zero()) continue;
    bool neg = is_negative_coeff(c);
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string var = k == 0 ? "" : (k == 1 ? "xin" : "xin^" + std::to_string(k));
    if (var.empty()) {
      out += c.str();
    } else if (c.is_one()) {
      out += var;
    } else {
      out += c.str() + "*" + var;
    }
  }
  return out;
}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) {
    den_ = Poly(GaussRational(1));
    return;
  }
  Poly g = Poly::gcd(num, den);
  if (g.degree() > 0) {
    num = Poly::divmod(num, g).first;
    den = Poly::divmod(den, g).first;
  }
  GaussRational inv = den.lead().inverse();
  num_ = num.scaled(inv);
  den_ = den.scaled(inv);
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) {
    RatFunc out;
    out.num_ = a.num_ * b.num_;
    return out;
  }
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::scaled(const GaussRational& s) const {
  if (s.is_zero()) return {};
  RatFunc out = *this;
  out.num_ = out.num_.scaled(s);
  return out;
}

RatFunc RatFunc::derivative() const {
  if (is_polynomial()) return RatFunc(num_.derivative());
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::pair<GaussRational, RatFunc> RatFunc::split_scalar() const {
  if (is_zero()) return {GaussRational(), RatFunc()};
  GaussRational c = num_.lead();
  RatFunc r = *this;
  r.num_ = num_.scaled(c.inverse());
  return {c, r};
}

std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) {
  auto c = a.den_ <=> b.den_;
  if (c != 0) return c;
  return a.num_ <=> b.num_;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

mpz_class lcm_of_denominators(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_class d1 = c.re().get_den();
    mpz_class d2 = c.im().get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d1.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d2.get_mpz_t());
  }
  return l;
}

std::vector<mpz_class> divisors(mpz_class n) {
  std::vector<std::pair<mpz_class, int>> fac;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    fac.emplace_back(p, e);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : fac) {
    std::size_t base = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Gaussian integers a + b i with a^2 + b^2 = m.
std::vector<GaussRational> gaussian_of_norm(const mpz_class& m) {
  std::vector<GaussRational> out;
  mpz_class a = 0;
  while (a * a <= m) {
    mpz_class rest = m - a * a;
    mpz_class b = sqrt(rest);
    if (b * b == rest) {
      for (int sa : {1, -1})
        for (int sb : {1, -1}) {
          if ((sa < 0 && a == 0) || (sb < 0 && b == 0)) continue;
          out.emplace_back(Rational(mpz_class(sa * a)), Rational(mpz_class(sb * b)));
        }
    }
    ++a;
  }
  return out;
}

// Distinct roots in Q(i) of a monic square-free polynomial.
std::vector<GaussRational> distinct_roots(const Poly& sqfree) {
  std::vector<GaussRational> roots;
  Poly p = sqfree;
  int n = p.degree();
  if (n <= 0) return roots;
  mpz_class D = lcm_of_denominators(p);
  // q(y) = D^n p(y / D) has Gaussian-integer coefficients and is monic.
  std::vector<GaussRational> qc(n + 1);
  Rational Dpow = 1;
  for (int k = n; k >= 0; --k) {
    qc[k] = p.coeff(k) * GaussRational(Dpow);
    Dpow *= Rational(D);
  }
  Poly q(std::move(qc));
  Rational Dq(D);
  auto record = [&](const GaussRational& y) {
    roots.push_back(y / GaussRational(Dq));
    q = Poly::divmod(q, Poly({-y, GaussRational(1)})).first;
  };
  while (q.degree() > 0 && q.coeff(0).is_zero()) record(GaussRational());
  if (q.degree() <= 0) return roots;
  mpz_class norm0 = q.coeff(0).norm().get_num();
  for (const auto& m : divisors(norm0)) {
    for (const auto& y : gaussian_of_norm(m)) {
      if (q.degree() <= 0) return roots;
      if (q.eval(y).is_zero()) record(y);
    }
  }
  if (q.degree() > 0) throw std::domain_error("pole not in Q(i)");
  return roots;
}

}  // namespace

std::vector<Pole> linear_pole_factorization(const RatFunc& r) {
  const Poly& den = r.den();
  std::vector<Pole> poles;
  if (den.degree() <= 0) return poles;
  Poly sqfree = Poly::divmod(den, Poly::gcd(den, den.derivative())).first.monic();
  for (const auto& root : distinct_roots(sqfree)) {
    Poly rest = den;
    Poly lin({-root, GaussRational(1)});
    int mult = 0;
    for (;;) {
      auto [q, rem] = Poly::divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    poles.push_back({root, mult});
  }
  std::sort(poles.begin(), poles.end(), [](const Pole& a, const Pole& b) {
    int c = cmp(a.at.im(), b.at.im());
    if (c != 0) return c < 0;
    return cmp(a.at.re(), b.at.re()) < 0;
  });
  return poles;
}

PartialFractions partial_fractions(const RatFunc& r) {
  PartialFractions out;
  auto poles = linear_pole_factorization(r);
  auto [quot, rem] = Poly::divmod(r.num(), r.den());
  out.polynomial = quot;
  for (const auto& pole : poles) {
    int m = pole.multiplicity;
    Poly others = Poly::divmod(r.den(), Poly::linear_power(pole.at, m)).first;
    // Power series of rem/others around the pole, first m coefficients.
    Poly rs = rem.taylor_shift(pole.at);
    Poly qs = others.taylor_shift(pole.at);
    GaussRational q0inv = qs.coeff(0).inverse();
    std::vector<GaussRational> a(m);
    for (int k = 0; k < m; ++k) {
      GaussRational acc = rs.coeff(k);
      for (int j = 1; j <= k; ++j) acc -= qs.coeff(j) * a[k - j];
      a[k] = acc * q0inv;
    }
    std::vector<GaussRational> c(m);
    for (int j = 1; j <= m; ++j) c[j - 1] = a[m - j];
    out.principal.emplace_back(pole.at, std::move(c));
  }
  return out;
}

RatFunc PartialFractions::recombine() const {
  RatFunc acc(polynomial);
  for (const auto& [at, cs] : principal)
    for (std::size_t k = 0; k < cs.size(); ++k)
      acc += RatFunc(Poly(cs[k]), Poly::linear_power(at, static_cast<int>(k) + 1));
  return acc;
}

RatFunc parse_ratfunc(std::string_view text) {
  auto resolve = [](std::string_view id) -> RatFunc {
    if (id == "xin") return RatFunc::x();
    throw std::invalid_argument("unknown symbol '" + std::string(id) + "'");
  };
  auto divide = [](const RatFunc& a, const RatFunc& b) { return a / b; };
  return detail::ExprParser<RatFunc>(text, resolve, divide).parse();
}

}  // namespace wres
