#include "wres/lichnerowicz.hpp"

#include <algorithm>
#include <stdexcept>

#include "wres/boundary.hpp"

namespace wres {

namespace {

constexpr int kDim = 4;

SymbolExpr atom(const CliffordModel& m, const FAtom& a) { return SymbolExpr::atom(m, a); }
SymbolExpr id(const CliffordModel& m) { return SymbolExpr::identity(m); }

SymbolExpr scalar(const CliffordModel& m, const ScalarExpr& s) { return SymbolExpr::scalar(m, s); }

SymbolExpr frac(const SymbolExpr& e, long num, long den) { return e.scaled(GaussRational::frac(num, den)); }

ScalarExpr four_pi_sq() { return ScalarExpr(Monomial::of(Sym::pi, 2), GaussRational(4)); }

FAtom twist_connection_atom(Family f, int j) { return f == Family::dirac ? SigmaF(j) : SigmaFe(j); }

// (1/2) sum_{i != j} R(e_i, e_j) c(e_i) c(e_j), R antisymmetric by normalization.
SymbolExpr curvature_term(Family f) {
  const CliffordModel& m = family_model(f);
  const AtomKind kind = f == Family::dirac ? AtomKind::RF : AtomKind::RFe;
  SymbolExpr out(m);
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      auto cur = make_curvature(kind, i, j);
      if (!cur) continue;
      out += (atom(m, cur->second) * SymbolExpr::c(m, i) * SymbolExpr::c(m, j)).scaled(GaussRational::frac(cur->first, 2));
    }
  return out;
}

MultiIndex merged(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool vanishes_at_x0(const FAtom& a) {
  return a.nder == 0 && (a.kind == AtomKind::SpinConn || a.kind == AtomKind::Gamma);
}

}  // namespace

DiffOp DiffOp::field(const SymbolExpr& f) {
  DiffOp out(f.model());
  out.add({}, f);
  return out;
}

DiffOp DiffOp::partial(const CliffordModel& m, int i) {
  DiffOp out(m);
  out.add({i}, SymbolExpr::identity(m));
  return out;
}

SymbolExpr DiffOp::coeff(const MultiIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? SymbolExpr(*model_) : it->second;
}

int DiffOp::order() const {
  int o = 0;
  for (const auto& [a, f] : terms_) o = std::max(o, static_cast<int>(a.size()));
  return o;
}

void DiffOp::add(const MultiIndex& a, const SymbolExpr& f) {
  if (&f.model() != model_) throw std::invalid_argument("operator coefficient from a different Clifford model");
  if (a.size() > 2) throw std::domain_error("differential order above 2");
  MultiIndex key = a;
  std::sort(key.begin(), key.end());
  for (int d : key)
    if (d < 1 || d > kDim) throw std::out_of_range("derivative direction must be in 1..4");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!f.is_zero()) terms_.emplace(key, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [a, f] : o.terms_) add(a, f);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [a, f] : o.terms_) add(a, -f);
  return *this;
}

DiffOp DiffOp::operator-() const { return scaled(GaussRational(-1)); }

DiffOp DiffOp::scaled(const GaussRational& c) const {
  DiffOp out(*model_);
  for (const auto& [a, f] : terms_) out.add(a, f.scaled(c));
  return out;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  if (a.model_ != b.model_) throw std::invalid_argument("composing operators of different Clifford models");
  DiffOp out(*a.model_);
  for (const auto& [alpha, f] : a.terms_)
    for (const auto& [beta, g] : b.terms_) {
      // d^alpha o g = sum over subsets S of alpha: Der^{S}(g) d^{alpha \ S}
      const std::size_t n = alpha.size();
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        SymbolExpr h = g;
        MultiIndex rest;
        for (std::size_t p = 0; p < n; ++p) {
          if (mask & (1u << p))
            h = field_der(h, alpha[p]);
          else
            rest.push_back(alpha[p]);
        }
        if (h.is_zero()) continue;
        out.add(merged(rest, beta), f * h);
      }
    }
  return out;
}

std::string DiffOp::str() const {
  if (terms_.empty()) return "0\n";
  std::string out;
  for (const auto& [a, f] : terms_) {
    out += "d[";
    for (std::size_t k = 0; k < a.size(); ++k) out += (k ? "," : "") + std::to_string(a[k]);
    out += "]:\n" + f.str();
    if (!out.empty() && out.back() != '\n') out += '\n';
  }
  return out;
}

SymbolExpr field_der(const SymbolExpr& f, int direction) {
  SymbolExpr out(f.model());
  for (const auto& [k, m] : f.terms())
    for (std::size_t p = 0; p < k.word.size(); ++p) {
      FWord w = k.word;
      w.atoms[p] = w.atoms[p].derived(direction);
      out.add_term(k.xi, w, k.mono, k.rat, m);
    }
  return out;
}

SymbolExpr field_adjoint(const SymbolExpr& f) {
  SymbolExpr out(f.model());
  for (const auto& [k, m] : f.terms()) {
    if (!k.xi.is_one() || !k.rat.is_constant()) throw std::invalid_argument("adjoint of a coefficient with xi dependence");
    auto [sign, w] = adjoint(k.word);
    const GaussRational c = k.rat.constant_value().conj() * GaussRational(sign);
    out.add_term(k.xi, w, k.mono, RatFunc(GaussRational(1)), m.adjoint().scaled(c));
  }
  return out;
}

SymbolExpr eval_x0(const SymbolExpr& f) {
  SymbolExpr out(f.model());
  for (const auto& [k, m] : f.terms()) {
    if (std::any_of(k.word.atoms.begin(), k.word.atoms.end(), vanishes_at_x0)) continue;
    out.add_term(k.xi, k.word, k.mono, k.rat, m);
  }
  return out;
}

DiffOp eval_x0(const DiffOp& p) {
  DiffOp out(p.model());
  for (const auto& [a, f] : p.terms()) out.add(a, eval_x0(f));
  return out;
}

SymbolExpr sigma_up(Family f, int j) {
  const CliffordModel& m = family_model(f);
  return atom(m, SpinConn(j)) + atom(m, twist_connection_atom(f, j));
}

SymbolExpr c_phi(bool star) {
  const CliffordModel& m = CliffordModel::spin();
  SymbolExpr out(m);
  for (int j = 1; j <= kDim; ++j) out += SymbolExpr::c(m, j) * atom(m, star ? PhiStar(j) : Phi(j));
  return out;
}

SymbolExpr chat_omega(bool star) {
  const CliffordModel& m = CliffordModel::signature();
  SymbolExpr out(m);
  for (int k = 1; k <= kDim; ++k) out += SymbolExpr::chat(m, k) * atom(m, star ? OmegaFStar(k) : OmegaF(k));
  return out;
}

DiffOp d_squared_axiom(Family f) {
  const CliffordModel& m = family_model(f);
  DiffOp p(m);
  SymbolExpr zeroth = scalar(m, ScalarExpr(Monomial::of(Sym::s), GaussRational::frac(1, 4))) + curvature_term(f);
  for (int j = 1; j <= kDim; ++j) {
    const SymbolExpr sj = sigma_up(f, j);
    const SymbolExpr gj = atom(m, GammaAtom(j));
    p.add({j, j}, -id(m));
    p.add({j}, sj.scaled(GaussRational(-2)) + gj);
    zeroth -= field_der(sj, j) + sj * sj - gj * sj;
  }
  p.add({}, zeroth);
  return p;
}

DiffOp dirac_diffop(Family f) {
  const CliffordModel& m = family_model(f);
  DiffOp d(m);
  for (int j = 1; j <= kDim; ++j) {
    d.add({j}, SymbolExpr::c(m, j));
    d.add({}, SymbolExpr::c(m, j) * sigma_up(f, j));
  }
  return d;
}

DiffOp twisted_square(Family f) {
  const DiffOp d = dirac_diffop(f);
  DiffOp p = d_squared_axiom(f);
  if (f == Family::dirac) {
    const SymbolExpr a = c_phi(false), as = c_phi(true);
    p -= DiffOp::field(as) * d;
    p += d * DiffOp::field(a);
    p -= DiffOp::field(as * a);
  } else {
    const SymbolExpr a = chat_omega(false), as = chat_omega(true);
    p -= (DiffOp::field(as) * d).scaled(GaussRational::frac(1, 2));
    p -= (d * DiffOp::field(a)).scaled(GaussRational::frac(1, 2));
    p += DiffOp::field(frac(as * a, 1, 4));
  }
  return p;
}

LaplaceData extract_laplace(const DiffOp& p) {
  const CliffordModel& m = p.model();
  for (const auto& [a, f] : p.terms())
    if (a.size() == 2) {
      const bool diag = a[0] == a[1];
      if (diag ? !f.equals(-id(m)) : !f.is_zero()) throw std::invalid_argument("non-scalar leading symbol");
    }
  for (int i = 1; i <= kDim; ++i)
    if (p.coeff({i, i}).is_zero()) throw std::invalid_argument("non-scalar leading symbol");

  LaplaceData d{{}, SymbolExpr(m)};
  SymbolExpr e = -p.coeff({});
  for (int i = 1; i <= kDim; ++i) {
    const SymbolExpr gi = atom(m, GammaAtom(i));
    const SymbolExpr wi = frac(-p.coeff({i}) + gi, 1, 2);
    e -= field_der(wi, i) + wi * wi;
    e += gi * wi;
    d.omega.push_back(wi);
  }
  d.E = eval_x0(e);
  return d;
}

DiffOp rebuild_laplace(const LaplaceData& d, const CliffordModel& m) {
  DiffOp lap(m);
  for (int i = 1; i <= kDim; ++i) {
    const DiffOp nab = DiffOp::partial(m, i) + DiffOp::field(d.omega[i - 1]);
    lap += nab * nab;
    lap -= DiffOp::field(atom(m, GammaAtom(i))) * nab;
  }
  lap += DiffOp::field(d.E);
  return eval_x0(-lap);
}

SymbolExpr connection_shift(Family f, int i, const LichnerowiczOptions& opt) {
  const CliffordModel& m = family_model(f);
  const SymbolExpr ci = SymbolExpr::c(m, i);
  if (f == Family::dirac) return frac(c_phi(true) * ci - ci * c_phi(false), 1, 2);
  const SymbolExpr right = ci * chat_omega(false);
  return frac(chat_omega(true) * ci + (opt.literal_shift ? -right : right), 1, 4);
}

SymbolExpr nabla_F(Family f, int j, const SymbolExpr& x) {
  const SymbolExpr s = atom(family_model(f), twist_connection_atom(f, j));
  return field_der(x, j) + s * x - x * s;
}

SymbolExpr displayed_zeroth(Family f, const LichnerowiczOptions& opt) {
  const CliffordModel& m = family_model(f);
  SymbolExpr z = scalar(m, ScalarExpr(Monomial::of(Sym::s), GaussRational::frac(1, 4))) + curvature_term(f);
  if (f == Family::dirac) {
    const SymbolExpr a = c_phi(false), as = c_phi(true);
    z -= as * a;
    for (int j = 1; j <= kDim; ++j) {
      const SymbolExpr cj = SymbolExpr::c(m, j);
      z += frac(nabla_F(f, j, as) * cj + cj * nabla_F(f, j, a), 1, 2);
      const SymbolExpr sq = as * cj - cj * a;
      z += frac(sq * sq, opt.perturb ? -1 : 1, 4);
    }
    return z;
  }
  const SymbolExpr a = chat_omega(false), as = chat_omega(true);
  z += frac(as * a, 1, 4);
  for (int j = 1; j <= kDim; ++j) {
    const SymbolExpr cj = SymbolExpr::c(m, j);
    z += frac(nabla_F(f, j, as) * cj - cj * nabla_F(f, j, a), 1, 4);
    const SymbolExpr right = cj * a;
    const SymbolExpr sq = as * cj + (opt.literal_shift ? -right : right);
    z += frac(sq * sq, opt.perturb ? -1 : 1, 16);
  }
  return z;
}

DiffOp lichnerowicz_rhs(Family f, const LichnerowiczOptions& opt) {
  const CliffordModel& m = family_model(f);
  DiffOp rhs(m);
  for (int i = 1; i <= kDim; ++i) {
    const DiffOp nab = DiffOp::partial(m, i) + DiffOp::field(sigma_up(f, i) + connection_shift(f, i, opt));
    rhs -= nab * nab;
    rhs += DiffOp::field(atom(m, GammaAtom(i))) * nab;
  }
  rhs += DiffOp::field(displayed_zeroth(f, opt));
  return rhs;
}

LichnerowiczCheck verify_lichnerowicz(Family f, const LichnerowiczOptions& opt) {
  LichnerowiczCheck out{f, eval_x0(twisted_square(f) - lichnerowicz_rhs(f, opt))};
  out.match = out.residual.is_zero();
  return out;
}

TraceExpr interior_trace(Family f) {
  const CliffordModel& m = family_model(f);
  const LaplaceData d = extract_laplace(twisted_square(f));
  const SymbolExpr integrand = scalar(m, ScalarExpr(Monomial::of(Sym::s), GaussRational::frac(1, 6))) + d.E;
  return trace_total(integrand).to_trace_expr() * four_pi_sq();
}

TraceExpr interior_trace_displayed(Family f) {
  const CliffordModel& m = family_model(f);
  SymbolExpr t = scalar(m, ScalarExpr(Monomial::of(Sym::s), GaussRational::frac(-1, 12)));
  if (f == Family::dirac) {
    const SymbolExpr a = c_phi(false), as = c_phi(true);
    t += as * a;
    for (int j = 1; j <= kDim; ++j) {
      const SymbolExpr cj = SymbolExpr::c(m, j);
      const SymbolExpr sq = as * cj - cj * a;
      t -= frac(sq * sq, 1, 4);
      t -= frac(nabla_F(f, j, as) * cj + cj * nabla_F(f, j, a), 1, 2);
    }
    return trace_total(t).to_trace_expr() * four_pi_sq();
  }
  const SymbolExpr a = chat_omega(false), as = chat_omega(true);
  const SymbolExpr diff = as - a;
  t += (diff * diff).scaled(ScalarExpr(Monomial::of(Sym::n), GaussRational::frac(1, 16)));
  t -= frac(as * a, 1, 4);
  for (int j = 1; j <= kDim; ++j) {
    const SymbolExpr cj = SymbolExpr::c(m, j);
    t -= frac(nabla_F(f, j, as) * cj - cj * nabla_F(f, j, a), 1, 4);
  }
  return (trace_total(t).to_trace_expr() * four_pi_sq()).specialize_n(kDim);
}

SymbolExpr signature_square_E() {
  const CliffordModel& m = CliffordModel::signature();
  const auto w = [&](int i) { return atom(m, OmegaF(i)); };
  // Covariant derivative along the twist connection of F itself.
  const auto nabla = [&](int i, const SymbolExpr& x) {
    const SymbolExpr s = atom(m, SigmaFe(i)) - frac(w(i), 1, 2);
    return field_der(x, i) + s * x - x * s;
  };
  SymbolExpr e = scalar(m, ScalarExpr(Monomial::of(Sym::s), GaussRational::frac(1, 4)));
  for (int i = 1; i <= kDim; ++i) {
    e += frac(w(i) * w(i), 1, 4);
    for (int j = 1; j <= kDim; ++j) {
      const SymbolExpr ci = SymbolExpr::c(m, i), cj = SymbolExpr::c(m, j);
      const SymbolExpr hi = SymbolExpr::chat(m, i), hj = SymbolExpr::chat(m, j);
      const SymbolExpr w2 = w(i) * w(j) - w(j) * w(i);
      e -= frac(ci * cj * w2, 1, 8);
      e += frac(hi * hj * w2, 1, 8);
      if (i != j) {
        const FAtom r = FAtom::make(AtomKind::Riem, std::min(i, j), std::max(i, j));
        e += frac(atom(m, r) * ci * cj * hi * hj, 1, 8);
      }
      e -= frac(ci * hj * (nabla(i, w(j)) + nabla(j, w(i))), 1, 4);
    }
  }
  return e;
}

Theorem57Report theorem57_report() {
  const CliffordModel& m = CliffordModel::signature();
  const auto tr = [](const SymbolExpr& x) { return trace_total(x).to_trace_expr(); };
  const SymbolExpr s = scalar(m, ScalarExpr::symbol(Sym::s));
  SymbolExpr w2(m);
  for (int i = 1; i <= kDim; ++i) w2 += atom(m, OmegaF(i)) * atom(m, OmegaF(i));

  Theorem57Report r;
  r.stated_trace_E = tr(frac(s, 1, 4) + frac(w2, 1, 2));
  r.traced_E = tr(signature_square_E());
  const TraceExpr s6 = tr(frac(s, 1, 6));
  r.convention_as_written = (s6 + r.stated_trace_E) * four_pi_sq();
  r.convention_laplace = (s6 - r.stated_trace_E) * four_pi_sq();
  r.target = tr(frac(s, 5, 6) + w2) * ScalarExpr(Monomial::of(Sym::pi, 2), GaussRational(2));
  r.as_written_matches = r.convention_as_written == r.target;
  r.laplace_matches = r.convention_laplace == r.target;
  r.traced_matches_stated = r.traced_E == r.stated_trace_E;
  return r;
}

std::string WresStatement::str() const {
  std::string out = "Wres[" + family_name(family) + "] = int_M (" + interior.str() + ") dvol_M";
  if (!boundary.is_zero()) out += " + int_dM (" + boundary.str() + ") dx'";
  return out;
}

WresStatement wres_boundary_report(Family f) { return {f, interior_trace(f), psi_total(f)}; }

}  // namespace wres
