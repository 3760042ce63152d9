#include "wres/scalar.hpp"

#include <stdexcept>

#include "expr_parser.hpp"

namespace wres {

std::string_view sym_name(Sym s) {
  switch (s) {
    case Sym::pi: return "pi";
    case Sym::hp0: return "hp0";
    case Sym::Omega: return "Omega";
    case Sym::s: return "s";
    case Sym::n: return "n";
  }
  return "?";
}

std::string Monomial::str() const {
  std::string out;
  for (int k = 0; k < kNumSyms; ++k) {
    if (exp[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += sym_name(static_cast<Sym>(k));
    if (exp[k] != 1) out += "^" + std::to_string(exp[k]);
  }
  return out;
}

GaussRational ScalarExpr::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussRational() : it->second;
}

void ScalarExpr::add(const Monomial& m, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ScalarExpr ScalarExpr::operator-() const {
  ScalarExpr out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ScalarExpr& ScalarExpr::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  ScalarExpr out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
  return out;
}

ScalarExpr ScalarExpr::specialize_n(long value) const {
  ScalarExpr out;
  for (const auto& [m, c] : terms_) {
    Monomial base = m;
    int e = base.exp[static_cast<int>(Sym::n)];
    base.exp[static_cast<int>(Sym::n)] = 0;
    GaussRational f(1);
    for (int k = 0; k < e; ++k) f *= GaussRational(value);
    out.add(base, c * f);
  }
  return out;
}

std::string ScalarExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    GaussRational coef = c;
    bool negative = (coef.is_real() && sgn(coef.re()) < 0) ||
                    (sgn(coef.re()) == 0 && sgn(coef.im()) < 0);
    if (negative) coef = -coef;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string ms = m.str();
    if (ms.empty()) {
      out += coef.str();
    } else if (coef.is_one()) {
      out += ms;
    } else {
      out += coef.str() + "*" + ms;
    }
  }
  return out;
}

ScalarExpr parse_scalar(std::string_view text) {
  auto resolve = [](std::string_view id) -> ScalarExpr {
    for (int k = 0; k < kNumSyms; ++k)
      if (sym_name(static_cast<Sym>(k)) == id) return ScalarExpr::symbol(static_cast<Sym>(k));
    throw std::invalid_argument("unknown symbol '" + std::string(id) + "'");
  };
  auto divide = [](const ScalarExpr& a, const ScalarExpr& b) -> ScalarExpr {
    if (b.terms().size() != 1 || !b.terms().begin()->first.is_one())
      throw std::invalid_argument("division by a non-constant scalar");
    return a * b.terms().begin()->second.inverse();
  };
  return detail::ExprParser<ScalarExpr>(text, resolve, divide).parse();
}

}  // namespace wres
