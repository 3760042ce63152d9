#include "wres/identities.hpp"

#include <exception>
#include <functional>

#include "wres/halfplane.hpp"
#include "wres/lichnerowicz.hpp"

namespace wres {

namespace {

const std::string kVolumeFlag = "volume constant named for S^3 though the cosphere is the unit sphere in R^3";
const std::string kIndexFlag = "case b trace displayed with a stray summation index; computed with the normal index";
const std::string kPrefactorFlag = "combinatorial prefactor exponent carries l; read as the constant 1";

CheckRecord record(std::string check, std::string name, std::string computed, std::string expected, bool match,
                   std::string anchor, std::vector<std::string> flags = {}) {
  return {std::move(check), std::move(name), std::move(computed), std::move(expected), match, std::move(anchor),
          std::move(flags)};
}

CheckRecord symbol_record(const std::string& check, const std::string& name, const SymbolExpr& computed,
                          const SymbolExpr& expected, const std::string& anchor) {
  return record(check, name, computed.str(), expected.str(), computed.equals(expected), anchor);
}

CheckRecord trace_record(const std::string& check, const std::string& name, const TraceExpr& computed,
                         const TraceExpr& expected, const std::string& anchor, std::vector<std::string> flags = {}) {
  return record(check, name, computed.str(), expected.str(), computed == expected, anchor, std::move(flags));
}

// Engine errors become failed records.
void guarded(std::vector<CheckRecord>& out, const std::string& check, const std::string& name,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    out.push_back(record(check, name, std::string("error: ") + e.what(), "", false, ""));
  }
}

RatFunc inv_pole_power(const GaussRational& pole, int k) { return RatFunc(Poly(GaussRational(1)), Poly::linear_power(pole, k)); }

RatFunc inv_norm_power(int k) {
  Poly d(GaussRational(1));
  for (int t = 0; t < k; ++t) d = d * Poly({1, 0, 1});
  return RatFunc(Poly(GaussRational(1)), d);
}

SymbolExpr rf(const CliffordModel& m, const RatFunc& r) { return SymbolExpr::ratfunc(m, r); }

ScalarExpr hp0() { return ScalarExpr::symbol(Sym::hp0); }
ScalarExpr pi_omega(const GaussRational& c) {
  return ScalarExpr(Monomial::of(Sym::pi) * Monomial::of(Sym::Omega), c);
}

TraceExpr dimF(const ScalarExpr& c) { return TraceExpr(dimF_key(), c); }
TraceExpr trF(const FAtom& a, const ScalarExpr& c) { return TraceExpr(trace_key(FWord{a}), c); }

TraceExpr total_trace(const SymbolExpr& a) { return trace_total(a.on_sphere()).to_trace_expr(); }

SymbolExpr sigma_m1(const CliffordModel& m) { return (SymbolExpr::c_xi(m) * rf(m, inv_norm_power(1))).scaled(GaussRational::i()); }

}  // namespace

std::vector<CheckRecord> halfplane_identities() {
  std::vector<CheckRecord> out;
  const std::string ck = "identities";
  const CliffordModel& m = CliffordModel::spin();
  const GaussRational i = GaussRational::i();
  const SymbolExpr cp = SymbolExpr::c_xi_prime(m), cn = SymbolExpr::c_dxn(m);

  guarded(out, ck, "pi_plus.c_xi_over_norm4", [&] {
    const SymbolExpr got = pi_plus(SymbolExpr::c_xi(m) * rf(m, inv_norm_power(2)));
    const SymbolExpr want = (cp * rf(m, inv_pole_power(i, 1))).scaled(-i * GaussRational::frac(1, 4)) -
                            ((cp + cn.scaled(i)) * rf(m, inv_pole_power(i, 2))).scaled(GaussRational::frac(1, 4));
    out.push_back(symbol_record(ck, "pi_plus.c_xi_over_norm4", got, want, "pi^+ of c(xi)/|xi|^4, Cauchy integral formula"));
  });
  guarded(out, ck, "pi_plus.dxn_c_xi_prime", [&] {
    const SymbolExpr dcp = d_x_n(cp);
    const SymbolExpr got = pi_plus((dcp * rf(m, inv_norm_power(1))).scaled(i));
    const SymbolExpr want = (dcp * rf(m, inv_pole_power(i, 1))).scaled(GaussRational::frac(1, 2));
    out.push_back(symbol_record(ck, "pi_plus.dxn_c_xi_prime", got, want, "pi^+ of i d_xn c(xi')/|xi|^2"));
  });
  guarded(out, ck, "pi_plus.lower_half_pole", [&] {
    const SymbolExpr got = pi_plus(rf(m, inv_pole_power(-i, 1)));
    out.push_back(symbol_record(ck, "pi_plus.lower_half_pole", got, SymbolExpr(m), "pi^+ annihilates lower half-plane poles"));
  });
  guarded(out, ck, "pi_plus.d_xi_n_sigma_m1", [&] {
    const SymbolExpr got = d_xi_n(pi_plus(sigma_m1(m)));
    const SymbolExpr want = ((cp + cn.scaled(i)) * rf(m, inv_pole_power(i, 2))).scaled(GaussRational::frac(-1, 2));
    out.push_back(symbol_record(ck, "pi_plus.d_xi_n_sigma_m1", got, want, "d_xin pi^+ sigma_{-1}"));
  });
  guarded(out, ck, "pi_plus.d_x_n_sigma_m1", [&] {
    const SymbolExpr got = pi_plus(d_x_n(sigma_m1(m)));
    const SymbolExpr bracket = (cp * rf(m, inv_pole_power(i, 1))).scaled(i * GaussRational::frac(1, 4)) +
                               ((cp + cn.scaled(i)) * rf(m, inv_pole_power(i, 2))).scaled(GaussRational::frac(1, 4));
    const SymbolExpr want = (d_x_n(cp) * rf(m, inv_pole_power(i, 1))).scaled(GaussRational::frac(1, 2)) +
                            bracket.scaled(hp0() * ScalarExpr(i));
    out.push_back(symbol_record(ck, "pi_plus.d_x_n_sigma_m1", got, want, "pi^+ d_xn sigma_{-1}, combined projections"));
  });
  guarded(out, ck, "pi_prime", [&] {
    const GaussRational a = pi_prime(inv_pole_power(i, 1));
    const GaussRational b = pi_prime(inv_pole_power(i, 2));
    out.push_back(record(ck, "pi_prime.simple_pole", a.str(), i.str(), a == i, "pi' of 1/(xin - i)"));
    out.push_back(record(ck, "pi_prime.double_pole", b.str(), "0", b.is_zero(), "pi' vanishes on H^+ in L^1"));
  });
  guarded(out, ck, "integrate_xi_n", [&] {
    const ScalarExpr a = integrate_xi_n(inv_pole_power(i, 2) * inv_pole_power(-i, 3));
    const ScalarExpr want_a(Monomial::of(Sym::pi), GaussRational::frac(-3, 8) * i);
    out.push_back(record(ck, "integrate_xi_n.residue_chain", a.str(), want_a.str(), a == want_a,
                         "line integral of 1/((xin-i)^2 (xin+i)^3)"));
    const ScalarExpr b = integrate_xi_n(inv_norm_power(1));
    out.push_back(record(ck, "integrate_xi_n.lorentzian", b.str(), "pi", b == ScalarExpr::symbol(Sym::pi),
                         "line integral of 1/(1+xin^2)"));
  });
  return out;
}

std::vector<CheckRecord> trace_identities() {
  std::vector<CheckRecord> out;
  const std::string ck = "identities";
  for (Family f : {Family::dirac, Family::signature}) {
    const CliffordModel& m = family_model(f);
    const std::string fam = family_name(f) + ".";
    const long d = m.rep_dim();
    const SymbolExpr cp = SymbolExpr::c_xi_prime(m), cn = SymbolExpr::c_dxn(m);
    const std::string anchor = "Clifford trace relations at the boundary point";
    const auto add = [&](const std::string& name, const SymbolExpr& a, const TraceExpr& want) {
      guarded(out, ck, "trace." + fam + name,
              [&] { out.push_back(trace_record(ck, "trace." + fam + name, total_trace(a), want, anchor)); });
    };
    add("c_xi_prime.c_dxn", cp * cn, {});
    add("c_dxn.c_dxn", cn * cn, dimF(GaussRational(-d)));
    add("c_xi_prime.c_xi_prime", cp * cp, dimF(GaussRational(-d)));
    add("dxn_c_xi_prime.c_dxn", d_x_n(cp) * cn, {});
    add("dxn_c_xi_prime.c_xi_prime", d_x_n(cp) * cp, dimF(hp0() * GaussRational(-d / 2)));

    if (f == Family::dirac) {
      const SymbolExpr alpha = twist_sigma0(f, true).filter_word(true);
      TraceExpr want = trF(SigmaF(4), GaussRational(-d)) + trF(PhiStar(4), GaussRational(d));
      guarded(out, ck, "trace.dirac.c_dxn.alpha", [&] {
        out.push_back(trace_record(ck, "trace.dirac.c_dxn.alpha", total_trace(cn * alpha), want,
                                   "trace of c(dx_n) against the starred twist", {kIndexFlag}));
      });
      // tr[c(xi') alpha] is odd in xi' and drops out after the cosphere integral.
      guarded(out, ck, "trace.dirac.c_xi_prime.alpha", [&] {
        const TraceExpr got = sphere_integrate(trace_total((cp * alpha).on_sphere())).to_trace_expr();
        out.push_back(trace_record(ck, "trace.dirac.c_xi_prime.alpha", got, {}, "odd moments of the cosphere vanish"));
      });
      continue;
    }

    const SymbolExpr alpha0 = frame_connection_sigma0(f);
    guarded(out, ck, "trace.signature.alpha0_sandwich", [&] {
      const TraceExpr a = total_trace(cp * alpha0 * cp * cn);
      const TraceExpr b = total_trace(alpha0 * cp * cn * cp);
      const TraceExpr c = total_trace(alpha0 * cn);
      out.push_back(trace_record(ck, "trace.signature.alpha0_sandwich.left", a, c, "cyclic moves of c(xi') around alpha_0"));
      out.push_back(trace_record(ck, "trace.signature.alpha0_sandwich.right", b, c, "cyclic moves of c(xi') around alpha_0"));
    });

    // p_0 = (1/4) hp0 sum_{i<4} c(e_i) chat(e_4) chat(e_i).
    GMatrix p0(m.rep_dim());
    for (int i = 1; i <= 3; ++i) p0 += m.c(i) * m.chat(4) * m.chat(i);
    p0 = p0.scaled(GaussRational::frac(1, 4));
    GMatrix rhs(m.rep_dim()), eps_form(m.rep_dim());
    const auto ei = [&](int i) { return m.ext(i) * m.inn(i) - m.inn(i) * m.ext(i); };
    for (int i = 1; i <= 3; ++i) {
      rhs += m.c(i) * m.chat(i) * m.c(4) * m.chat(4);
      eps_form += ei(i) * ei(4);
    }
    rhs = rhs.scaled(GaussRational::frac(-1, 4));
    eps_form = eps_form.scaled(GaussRational::frac(-1, 4));
    const GMatrix lhs = m.c(4) * p0;
    out.push_back(record(ck, "trace.signature.c_dxn_p0.clifford", lhs == rhs ? "equal" : "differ", "equal", lhs == rhs,
                         "c(dx_n) p_0 as a product of c chat pairs"));
    out.push_back(record(ck, "trace.signature.c_dxn_p0.exterior", rhs == eps_form ? "equal" : "differ", "equal",
                         rhs == eps_form, "c chat pairs as exterior and interior multiplications"));

    // Degree-m traces of the pair product against b_{4,m}.
    const auto binom2 = [](int k) -> long { return k < 0 || k > 2 ? 0 : (k == 1 ? 2 : 1); };
    for (int i = 1; i <= 3; ++i) {
      const GMatrix prod = ei(i) * ei(4);
      GaussRational total;
      std::string got, want;
      bool ok = true;
      for (int deg = 0; deg <= 4; ++deg) {
        GaussRational t;
        for (int b = 0; b < m.rep_dim(); ++b)
          if (m.form_degree(b) == deg) t += prod.at(b, b);
        const long expect = binom2(deg - 2) + binom2(deg) - 2 * binom2(deg - 1);
        got += (deg ? "," : "") + t.str();
        want += (deg ? "," : "") + std::to_string(expect);
        ok = ok && t == GaussRational(expect);
        total += t;
      }
      out.push_back(record(ck, "trace.signature.b4m.e" + std::to_string(i), got, want, ok,
                           "degree-wise traces of the pair product"));
      out.push_back(record(ck, "trace.signature.b4m_sum.e" + std::to_string(i), total.str(), "0", total.is_zero(),
                           "sum over degrees of the pair-product traces"));
    }
    out.push_back(record(ck, "trace.signature.c_dxn_p0", trace_rep(m.c(4) * p0).str(), "0",
                         trace_rep(m.c(4) * p0).is_zero(), "trace of c(dx_n) p_0"));

    for (int i = 1; i <= 4; ++i) {
      const std::string s = std::to_string(i);
      add("c_e" + s + ".c_dxn", SymbolExpr::c(m, i) * cn, i == 4 ? dimF(GaussRational(-d)) : TraceExpr{});
      add("chat_e" + s + ".c_xi_prime", SymbolExpr::chat(m, i) * cp, {});
      add("chat_e" + s + ".c_dxn", SymbolExpr::chat(m, i) * cn, {});
    }
  }
  return out;
}

std::vector<CheckRecord> parametrix_identities(Family f) {
  std::vector<CheckRecord> out;
  const std::string ck = "parametrix";
  const CliffordModel& m = family_model(f);
  for (bool star : {false, true}) {
    const OperatorSpec spec = build_operator(f, star);
    const std::string base = "parametrix." + family_name(f) + (star ? ".star" : "");
    guarded(out, ck, base, [&] {
      const ParametrixSymbols p = parametrix(spec);
      out.push_back(symbol_record(ck, base + ".sigma_m1", p.sigma_m1.on_sphere(), sigma_m1(m).on_sphere(),
                                  "leading parametrix symbol i c(xi)/|xi|^2"));
      out.push_back(symbol_record(ck, base + ".sigma_m2", p.sigma_m2.on_sphere(), sigma_m2_displayed(spec).on_sphere(),
                                  "order -2 parametrix symbol by the composition formula"));
    });
  }
  guarded(out, ck, "parametrix." + family_name(f) + ".frame", [&] {
    SymbolExpr want = SymbolExpr::c_dxn(m).scaled(GaussRational::frac(-3, 4));
    if (f == Family::signature)
      for (int i = 1; i <= 3; ++i)
        want += (SymbolExpr::c(m, i) * SymbolExpr::chat(m, 4) * SymbolExpr::chat(m, i)).scaled(GaussRational::frac(1, 4));
    out.push_back(symbol_record(ck, "parametrix." + family_name(f) + ".frame", frame_connection_sigma0(f),
                                want.scaled(hp0()), "geometric part of sigma_0 in the collar frame"));
  });
  guarded(out, ck, "parametrix." + family_name(f) + ".star_consistency", [&] {
    out.push_back(symbol_record(ck, "parametrix." + family_name(f) + ".star_consistency",
                                field_adjoint(twist_sigma0(f, false)), twist_sigma0(f, true),
                                "starred twist is the formal adjoint of the plain twist"));
  });
  return out;
}

std::vector<CheckRecord> case_identities(Family f, bool parallel) {
  std::vector<CheckRecord> out;
  const std::string ck = "cases";
  const std::string fam = family_name(f);
  std::vector<BoundaryCaseResult> cases;
  guarded(out, ck, "cases." + fam, [&] {
    const BoundaryContext ctx(f);
    cases = evaluate_all(ctx, parallel);
  });
  std::vector<std::string> flags = {kPrefactorFlag};
  if (f == Family::signature) flags.push_back(kVolumeFlag);
  for (const auto& c : cases) {
    std::vector<std::string> fl = flags;
    if (f == Family::dirac && c.index.id == "b") fl.push_back(kIndexFlag);
    out.push_back(trace_record(ck, "cases." + fam + "." + c.index.id, c.value, c.expected,
                               "boundary case " + c.index.id + " of the residue sum", fl));
  }
  if (cases.size() != 5) return out;

  const auto by_id = [&](const std::string& id) -> const TraceExpr& {
    for (const auto& c : cases)
      if (c.index.id == id) return c.value;
    throw std::logic_error("missing case " + id);
  };
  out.push_back(trace_record(ck, "cancel." + fam + ".a2_plus_a3", by_id("a(II)") + by_id("a(III)"), {},
                             "a(II) and a(III) cancel"));
  out.push_back(trace_record(ck, "cancel." + fam + ".b_plus_c.hp0", (by_id("b") + by_id("c")).only_symbol(Sym::hp0), {},
                             "hp0 parts of b and c cancel"));

  const GaussRational geo = f == Family::dirac ? GaussRational::frac(9, 8) : GaussRational::frac(9, 2);
  for (const std::string id : {"b", "c"}) {
    guarded(out, ck, "split." + fam + "." + id, [&] {
      const SplitValue s = split_case(f, id);
      const TraceExpr want_geo = dimF(hp0() * pi_omega(id == "b" ? geo : -geo));
      out.push_back(trace_record(ck, "split." + fam + "." + id + ".geometric", s.geometric, want_geo,
                                 "geometric part of case " + id));
      out.push_back(trace_record(ck, "split." + fam + "." + id + ".sum", s.geometric + s.twist, by_id(id),
                                 "split pipeline sums to the unsplit case " + id));
    });
  }
  return out;
}

std::vector<CheckRecord> psi_identities(Family f) {
  std::vector<CheckRecord> out;
  const std::string ck = "psi";
  guarded(out, ck, "psi." + family_name(f), [&] {
    const WresStatement w = wres_boundary_report(f);
    CheckRecord r = trace_record(ck, "psi." + family_name(f), w.boundary, expected_psi(f), "total boundary term");
    out.push_back(std::move(r));
    out.push_back(record(ck, "statement." + family_name(f), w.str(), "", true, "assembled residue statement"));
  });
  return out;
}

std::vector<CheckRecord> lichnerowicz_identities(Family f) {
  std::vector<CheckRecord> out;
  const std::string ck = "lichnerowicz";
  const std::string fam = family_name(f);
  guarded(out, ck, "lichnerowicz." + fam, [&] {
    std::vector<std::string> flags;
    if (f == Family::signature) {
      LichnerowiczOptions lit;
      lit.literal_shift = true;
      if (!verify_lichnerowicz(f, lit).match)
        flags.push_back("minus sign inside the displayed connection shift leaves a nonzero residual; plus verified");
    }
    const LichnerowiczCheck c = verify_lichnerowicz(f);
    out.push_back(record(ck, "lichnerowicz." + fam, c.residual.str(), "0\n", c.match,
                         "squared twisted operator as connection Laplacian plus endomorphism", flags));
  });
  guarded(out, ck, "lichnerowicz." + fam + ".negative_control", [&] {
    LichnerowiczOptions opt;
    opt.perturb = true;
    const LichnerowiczCheck c = verify_lichnerowicz(f, opt);
    out.push_back(record(ck, "lichnerowicz." + fam + ".negative_control", c.match ? "zero residual" : "nonzero residual",
                         "nonzero residual", !c.match, "sign flip in the quadratic shift term is detected"));
  });
  guarded(out, ck, "lichnerowicz." + fam + ".round_trip", [&] {
    const DiffOp p = twisted_square(f);
    const DiffOp diff = rebuild_laplace(extract_laplace(p), p.model()) - eval_x0(p);
    out.push_back(record(ck, "lichnerowicz." + fam + ".round_trip", diff.str(), "0\n", diff.is_zero(),
                         "Laplace data rebuilds the operator"));
  });
  guarded(out, ck, "lichnerowicz." + fam + ".adjoint", [&] {
    const SymbolExpr e = extract_laplace(twisted_square(f)).E;
    // Twist-free part: keep words without Phi or omega atoms.
    SymbolExpr geo(e.model());
    for (const auto& [k, mat] : e.terms()) {
      bool twist = false;
      for (const auto& a : k.word.atoms)
        twist = twist || a.kind == AtomKind::Phi || a.kind == AtomKind::PhiStar || a.kind == AtomKind::OmegaF ||
                a.kind == AtomKind::OmegaFStar;
      if (!twist) geo.add_term(k.xi, k.word, k.mono, k.rat, mat);
    }
    out.push_back(symbol_record(ck, "lichnerowicz." + fam + ".adjoint", field_adjoint(geo), geo,
                                "E is formally self-adjoint on the twist-free part"));
  });
  return out;
}

std::vector<CheckRecord> interior_identities(Family f) {
  std::vector<CheckRecord> out;
  const std::string ck = "interior";
  guarded(out, ck, "interior." + family_name(f), [&] {
    std::vector<std::string> flags;
    if (f == Family::signature)
      flags.push_back("displayed coefficient +n/16 of [chat(omega*) - chat(omega)]^2; the extracted E gives -n/16");
    out.push_back(trace_record(ck, "interior." + family_name(f), interior_trace(f), interior_trace_displayed(f),
                               "interior integrand 4 pi^2 tr(s/6 + E)", flags));
  });
  return out;
}

std::vector<CheckRecord> theorem57_identities() {
  std::vector<CheckRecord> out;
  const std::string ck = "theorem57";
  guarded(out, ck, "theorem57", [&] {
    const Theorem57Report r = theorem57_report();
    std::vector<std::string> flags;
    if (!r.laplace_matches)
      flags.push_back("sign convention: the -(Delta + E) form gives " + r.convention_laplace.str());
    if (!r.traced_matches_stated)
      flags.push_back("trace of the imported E is " + r.traced_E.str() + ", stated as " + r.stated_trace_E.str());
    const bool one = r.as_written_matches != r.laplace_matches;
    out.push_back(record(ck, "theorem57.as_written", r.convention_as_written.str(), r.target.str(), r.as_written_matches && one,
                         "squared signature operator, E as written", flags));
  });
  return out;
}

}  // namespace wres
