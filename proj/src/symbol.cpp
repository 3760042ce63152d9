#include "wres/symbol.hpp"

#include <stdexcept>

namespace wres {

std::string XiMono::str() const {
  std::string s;
  for (int k = 0; k < 3; ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += "xi" + std::to_string(k + 1);
    if (e[k] > 1) s += "^" + std::to_string(e[k]);
  }
  return s;
}

SymbolExpr SymbolExpr::identity(const CliffordModel& m) { return matrix(m, m.identity()); }

SymbolExpr SymbolExpr::matrix(const CliffordModel& m, const GMatrix& a) {
  SymbolExpr s(m);
  s.add_term({}, {}, Monomial::one(), RatFunc(GaussRational(1)), a);
  return s;
}

SymbolExpr SymbolExpr::scalar(const CliffordModel& m, const ScalarExpr& e) {
  SymbolExpr s(m);
  for (const auto& [mono, c] : e.terms())
    s.add_term({}, {}, mono, RatFunc(GaussRational(1)), m.identity().scaled(c));
  return s;
}

SymbolExpr SymbolExpr::ratfunc(const CliffordModel& m, const RatFunc& r) {
  SymbolExpr s(m);
  s.add_term({}, {}, Monomial::one(), r, m.identity());
  return s;
}

SymbolExpr SymbolExpr::word(const CliffordModel& m, const FWord& w) {
  SymbolExpr s(m);
  s.add_term({}, w, Monomial::one(), RatFunc(GaussRational(1)), m.identity());
  return s;
}

SymbolExpr SymbolExpr::xi(const CliffordModel& m, int i) {
  if (i < 1 || i > 3) throw std::out_of_range("tangential xi index must be in 1..3");
  SymbolExpr s(m);
  s.add_term(XiMono::of(i), {}, Monomial::one(), RatFunc(GaussRational(1)), m.identity());
  return s;
}

SymbolExpr SymbolExpr::xin(const CliffordModel& m) { return ratfunc(m, RatFunc::x()); }

SymbolExpr SymbolExpr::c(const CliffordModel& m, int i) { return matrix(m, m.c(i)); }

SymbolExpr SymbolExpr::chat(const CliffordModel& m, int i) { return matrix(m, m.chat(i)); }

SymbolExpr SymbolExpr::c_xi_prime(const CliffordModel& m) {
  SymbolExpr s(m);
  for (int i = 1; i <= 3; ++i) s.add_term(XiMono::of(i), {}, Monomial::one(), RatFunc(GaussRational(1)), m.c(i));
  return s;
}

SymbolExpr SymbolExpr::c_xi(const CliffordModel& m) { return c_xi_prime(m) + xin(m) * c_dxn(m); }

void SymbolExpr::add_term(const XiMono& xi, const FWord& w, const Monomial& mono, const RatFunc& r,
                          const GMatrix& a) {
  if (r.is_zero() || a.is_zero()) return;
  if (a.dim() != model_->rep_dim()) throw std::invalid_argument("matrix dimension does not match the model");
  auto [c, rn] = r.split_scalar();
  SymbolKey key{xi, w, mono, std::move(rn)};
  GMatrix m = c.is_one() ? a : a.scaled(c);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::move(m));
    return;
  }
  it->second += m;
  if (it->second.is_zero()) terms_.erase(it);
}

SymbolExpr SymbolExpr::operator-() const { return scaled(GaussRational(-1)); }

SymbolExpr& SymbolExpr::operator+=(const SymbolExpr& o) {
  if (model_ != o.model_) throw std::invalid_argument("model mismatch");
  for (const auto& [k, m] : o.terms_) add_term(k.xi, k.word, k.mono, k.rat, m);
  return *this;
}

SymbolExpr& SymbolExpr::operator-=(const SymbolExpr& o) {
  if (model_ != o.model_) throw std::invalid_argument("model mismatch");
  for (const auto& [k, m] : o.terms_) add_term(k.xi, k.word, k.mono, k.rat, -m);
  return *this;
}

SymbolExpr operator*(const SymbolExpr& a, const SymbolExpr& b) {
  if (a.model_ != b.model_) throw std::invalid_argument("model mismatch");
  SymbolExpr out(*a.model_);
  for (const auto& [ka, ma] : a.terms_)
    for (const auto& [kb, mb] : b.terms_) {
      GMatrix m = ma * mb;
      if (m.is_zero()) continue;
      out.add_term(ka.xi * kb.xi, word_mul(ka.word, kb.word), ka.mono * kb.mono, ka.rat * kb.rat, m);
    }
  return out;
}

SymbolExpr sym_mul(const SymbolExpr& a, const SymbolExpr& b) { return a * b; }

SymbolExpr SymbolExpr::scaled(const GaussRational& c) const {
  SymbolExpr out(*model_);
  if (c.is_zero()) return out;
  for (const auto& [k, m] : terms_) out.terms_.emplace(k, m.scaled(c));
  return out;
}

SymbolExpr SymbolExpr::scaled(const ScalarExpr& s) const { return *this * scalar(*model_, s); }

SymbolExpr SymbolExpr::scaled(const RatFunc& r) const {
  SymbolExpr out(*model_);
  for (const auto& [k, m] : terms_) out.add_term(k.xi, k.word, k.mono, k.rat * r, m);
  return out;
}

CanonicalSymbol SymbolExpr::canonical() const {
  CanonicalSymbol out;
  const int n = model_->rep_dim();
  for (const auto& [k, m] : terms_) {
    auto& entries = out[CanonicalKey{k.xi, k.word, k.mono}];
    if (entries.empty()) entries.assign(static_cast<std::size_t>(n) * n, RatFunc());
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const GaussRational& v = m.at(r, c);
        if (!v.is_zero()) entries[static_cast<std::size_t>(r) * n + c] += k.rat.scaled(v);
      }
  }
  for (auto it = out.begin(); it != out.end();) {
    bool zero = true;
    for (const auto& r : it->second) zero = zero && r.is_zero();
    it = zero ? out.erase(it) : std::next(it);
  }
  return out;
}

bool SymbolExpr::equals(const SymbolExpr& o) const {
  return model_ == o.model_ && canonical() == o.canonical();
}

namespace {

void expand_sphere(const XiMono& m, long coeff, std::vector<std::pair<XiMono, long>>& out) {
  if (m.e[2] < 2) {
    out.emplace_back(m, coeff);
    return;
  }
  XiMono base = m;
  base.e[2] = static_cast<std::int8_t>(base.e[2] - 2);
  expand_sphere(base, coeff, out);
  expand_sphere(base * XiMono::of(1, 2), -coeff, out);
  expand_sphere(base * XiMono::of(2, 2), -coeff, out);
}

}  // namespace

SymbolExpr SymbolExpr::on_sphere() const {
  SymbolExpr out(*model_);
  for (const auto& [k, m] : terms_) {
    std::vector<std::pair<XiMono, long>> parts;
    expand_sphere(k.xi, 1, parts);
    for (const auto& [xi, c] : parts) out.add_term(xi, k.word, k.mono, k.rat, m.scaled(GaussRational(c)));
  }
  return out;
}

SymbolExpr SymbolExpr::filter_hp0(bool with) const {
  SymbolExpr out(*model_);
  for (const auto& [k, m] : terms_)
    if ((k.mono.degree(Sym::hp0) > 0) == with) out.terms_.emplace(k, m);
  return out;
}

SymbolExpr SymbolExpr::filter_word(bool nonempty) const {
  SymbolExpr out(*model_);
  for (const auto& [k, m] : terms_)
    if (k.word.empty() != nonempty) out.terms_.emplace(k, m);
  return out;
}

std::string SymbolExpr::str() const {
  const CanonicalSymbol c = canonical();
  if (c.empty()) return "0\n";
  const int n = model_->rep_dim();
  std::string out;
  for (const auto& [k, entries] : c) {
    out += "[" + (k.xi.is_one() ? std::string("1") : k.xi.str()) + " ; " + k.word.str() + " ; " +
           (k.mono.is_one() ? std::string("1") : k.mono.str()) + "]";
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col) {
        const RatFunc& v = entries[static_cast<std::size_t>(r) * n + col];
        if (!v.is_zero()) out += " (" + std::to_string(r) + "," + std::to_string(col) + ")=" + v.str();
      }
    out += "\n";
  }
  return out;
}

SymbolExpr d_xi_n(const SymbolExpr& a) {
  SymbolExpr out(a.model());
  for (const auto& [k, m] : a.terms()) out.add_term(k.xi, k.word, k.mono, k.rat.derivative(), m);
  return out;
}

namespace {

Poly xi_norm2_power(int k) {
  Poly p(GaussRational(1));
  for (int t = 0; t < k; ++t) p = p * Poly({1, 0, 1});
  return p;
}

}  // namespace

SymbolExpr d_x_n(const SymbolExpr& a) {
  SymbolExpr out(a.model());
  const RatFunc inv_norm(Poly(GaussRational(1)), Poly({1, 0, 1}));
  for (const auto& [k, m] : a.terms()) {
    if (k.mono.degree(Sym::hp0) > 0) throw std::logic_error("d_x_n applied to an hp0-dependent term");
    const int power = k.rat.den().degree() / 2;
    if (k.rat.den() != xi_norm2_power(power))
      throw std::logic_error("d_x_n needs denominators that are powers of |xi|^2: " + k.rat.str());
    const Monomial hmono = k.mono * Monomial::of(Sym::hp0);
    if (power > 0) out.add_term(k.xi, k.word, hmono, (k.rat * inv_norm).scaled(GaussRational(-power)), m);
    if (k.xi.degree() > 0) out.add_term(k.xi, k.word, hmono, k.rat, m.scaled(GaussRational::frac(k.xi.degree(), 2)));
    for (std::size_t p = 0; p < k.word.size(); ++p) {
      FWord w = k.word;
      w.atoms[p] = w.atoms[p].derived(4);
      out.add_term(k.xi, w, k.mono, k.rat, m);
    }
  }
  return out;
}

SymbolExpr d_x_tangential(const SymbolExpr& a, int direction) {
  if (direction < 1 || direction > 3) throw std::out_of_range("tangential direction must be in 1..3");
  SymbolExpr out(a.model());
  for (const auto& [k, m] : a.terms())
    for (std::size_t p = 0; p < k.word.size(); ++p) {
      FWord w = k.word;
      w.atoms[p] = w.atoms[p].derived(direction);
      out.add_term(k.xi, w, k.mono, k.rat, m);
    }
  return out;
}

void TraceIntegrand::add(const IntegrandKey& key, const RatFunc& r) {
  if (r.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, r);
    return;
  }
  it->second += r;
  if (it->second.is_zero()) terms_.erase(it);
}

TraceIntegrand& TraceIntegrand::operator+=(const TraceIntegrand& o) {
  for (const auto& [k, r] : o.terms_) add(k, r);
  return *this;
}

TraceExpr TraceIntegrand::to_trace_expr() const {
  TraceExpr out;
  for (const auto& [k, r] : terms_) {
    if (!k.xi.is_one() || !r.is_constant())
      throw std::logic_error("integrand still depends on xi: " + k.xi.str() + " " + r.str());
    out.add(k.traces, ScalarExpr(k.mono, r.constant_value()));
  }
  return out;
}

std::string TraceIntegrand::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, r] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + r.str() + ")";
    if (!k.xi.is_one()) out += "*" + k.xi.str();
    if (!k.mono.is_one()) out += "*" + k.mono.str();
    for (const auto& t : k.traces) out += "*" + t.str();
  }
  return out;
}

TraceIntegrand trace_total(const SymbolExpr& a) {
  TraceIntegrand out;
  for (const auto& [k, m] : a.terms()) {
    const GaussRational tr = trace_rep(m);
    if (tr.is_zero()) continue;
    out.add(IntegrandKey{k.xi, trace_key(k.word), k.mono}, k.rat.scaled(tr));
  }
  return out;
}

GaussRational sphere_moment(const XiMono& m) {
  if (m.degree() > 4) throw std::domain_error("moment table exhausted");
  long num = 1;
  for (int k = 0; k < 3; ++k) {
    if (m.e[k] % 2) return GaussRational(0);
    for (int t = m.e[k] - 1; t > 0; t -= 2) num *= t;
  }
  long den = 1;
  for (int k = 0; k < m.degree() / 2; ++k) den *= 3 + 2 * k;
  return GaussRational::frac(num, den);
}

TraceIntegrand sphere_integrate(const TraceIntegrand& t) {
  TraceIntegrand out;
  for (const auto& [k, r] : t.terms()) {
    const GaussRational mom = sphere_moment(k.xi);
    if (mom.is_zero()) continue;
    out.add(IntegrandKey{XiMono{}, k.traces, k.mono * Monomial::of(Sym::Omega)}, r.scaled(mom));
  }
  return out;
}

}  // namespace wres
