#include "wres/oracle.hpp"

#include <memory>
#include <stdexcept>

#include "wres/boundary.hpp"
#include "wres/halfplane.hpp"
#include "wres/lichnerowicz.hpp"

namespace wres {

namespace {

constexpr std::size_t kKeepFailing = 5;

GaussRational value_at(const RatFunc& r, const GaussRational& x) { return r.num().eval(x) / r.den().eval(x); }

bool same_matrices(const std::map<XiMono, SubstitutionPlan>& p, const std::map<XiMono, SubstitutionPlan>& q,
                   Assignment& a) {
  std::map<XiMono, int> keys;
  for (const auto& [k, v] : p) keys[k] = v.rep_dim;
  for (const auto& [k, v] : q) keys[k] = v.rep_dim;
  for (const auto& [k, dim] : keys) {
    const auto ip = p.find(k), iq = q.find(k);
    const GMatrix mp = ip == p.end() ? GMatrix(dim * a.rank()) : substitute(ip->second, a);
    const GMatrix mq = iq == q.end() ? GMatrix(dim * a.rank()) : substitute(iq->second, a);
    if (!(mp == mq)) return false;
  }
  return true;
}

}  // namespace

void SubstitutionPlan::add(const FWord& w, const Monomial& m, const GMatrix& a) {
  auto [it, fresh] = terms.try_emplace({w, m}, a);
  if (!fresh) it->second += a;
  if (it->second.is_zero()) terms.erase(it);
}

SubstitutionPlan field_plan(const SymbolExpr& field) {
  SubstitutionPlan plan{field.model().rep_dim(), {}};
  for (const auto& [k, m] : field.terms()) {
    if (!k.xi.is_one() || !k.rat.is_constant()) throw std::invalid_argument("field plan of a xi-dependent symbol");
    plan.add(k.word, k.mono, m.scaled(k.rat.constant_value()));
  }
  return plan;
}

std::map<XiMono, SubstitutionPlan> symbol_plan(const SymbolExpr& sym, const GaussRational& xin) {
  std::map<XiMono, SubstitutionPlan> out;
  const SymbolExpr reduced = sym.on_sphere();
  for (const auto& [k, m] : reduced.terms()) {
    auto& plan = out[k.xi];
    plan.rep_dim = sym.model().rep_dim();
    plan.add(k.word, k.mono, m.scaled(value_at(k.rat, xin)));
  }
  return out;
}

SubstitutionPlan boundary_plan(const SymbolExpr& left, const SymbolExpr& right, const GaussRational& prefactor) {
  const SymbolExpr prod = (left * right).scaled(prefactor);
  SubstitutionPlan plan{prod.model().rep_dim(), {}};
  for (const auto& [k, m] : prod.terms()) {
    const GaussRational moment = sphere_moment(k.xi);
    if (moment.is_zero()) continue;
    const ScalarExpr line = integrate_xi_n(k.rat);
    for (const auto& [mono, c] : line.terms())
      plan.add(k.word, k.mono * mono * Monomial::of(Sym::Omega), m.scaled(c * moment));
  }
  return plan;
}

GMatrix substitute(const SubstitutionPlan& plan, Assignment& a) {
  GMatrix out(plan.rep_dim * a.rank());
  // Keys are ordered by word first: collapse the monomials of one word before the kron.
  auto it = plan.terms.begin();
  while (it != plan.terms.end()) {
    const FWord& w = it->first.first;
    GMatrix acc(plan.rep_dim);
    for (; it != plan.terms.end() && it->first.first == w; ++it)
      acc.add_scaled(it->second, a.scalar(ScalarExpr(it->first.second, GaussRational(1))));
    if (!acc.is_zero()) out.add_kron(acc, a.word(w));
  }
  return out;
}

GaussRational substitute_trace(const SubstitutionPlan& plan, Assignment& a) {
  // tr(A (x) B) = tr A tr B, so only the Clifford traces of the plan matrices are needed.
  GaussRational total;
  auto it = plan.terms.begin();
  while (it != plan.terms.end()) {
    const FWord& w = it->first.first;
    GaussRational acc;
    for (; it != plan.terms.end() && it->first.first == w; ++it)
      acc += it->second.trace() * a.scalar(ScalarExpr(it->first.second, GaussRational(1)));
    if (!acc.is_zero()) total += acc * a.word(w).trace();
  }
  return total;
}

std::vector<OracleIdentity> oracle_identities(const std::vector<Family>& families) {
  std::vector<OracleIdentity> out;
  const auto push = [&](std::string name, std::function<bool(Assignment&)> f) {
    out.push_back({std::move(name), std::move(f)});
  };
  const std::vector<GaussRational> samples = {GaussRational(0), GaussRational::frac(1, 2), GaussRational(2)};

  for (Family f : families) {
    const std::string fam = family_name(f);
    const CliffordModel& m = family_model(f);

    // Boundary cases and their total.
    const BoundaryContext ctx(f);
    auto total = std::make_shared<SubstitutionPlan>(SubstitutionPlan{m.rep_dim(), {}});
    for (const auto& c : enumerate_cases(4)) {
      const auto factors = case_factors(ctx, c);
      auto plan = std::make_shared<SubstitutionPlan>(SubstitutionPlan{m.rep_dim(), {}});
      if (factors) *plan = boundary_plan(factors->left, factors->right, factors->prefactor);
      for (const auto& [k, mat] : plan->terms) total->add(k.first, k.second, mat);
      auto want = std::make_shared<TraceExpr>(expected_case(f, c.id));
      push("cases." + fam + "." + c.id, [plan, want](Assignment& a) { return substitute_trace(*plan, a) == a.eval(*want); });
    }
    auto psi = std::make_shared<TraceExpr>(expected_psi(f));
    push("psi." + fam, [total, psi](Assignment& a) { return substitute_trace(*total, a) == a.eval(*psi); });

    // Parametrix against its displayed shape at sample points of xin.
    for (bool star : {false, true}) {
      const OperatorSpec spec = build_operator(f, star);
      const ParametrixSymbols p = parametrix(spec);
      const SymbolExpr shown = sigma_m2_displayed(spec);
      auto plans = std::make_shared<std::vector<std::pair<std::map<XiMono, SubstitutionPlan>, std::map<XiMono, SubstitutionPlan>>>>();
      for (const auto& x : samples) plans->emplace_back(symbol_plan(p.sigma_m2, x), symbol_plan(shown, x));
      push("parametrix." + fam + (star ? ".star" : "") + ".sigma_m2", [plans](Assignment& a) {
        for (const auto& [lhs, rhs] : *plans)
          if (!same_matrices(lhs, rhs, a)) return false;
        return true;
      });
    }

    // Both sides of the squared-operator identity, coefficient by coefficient.
    {
      const DiffOp lhs = eval_x0(twisted_square(f));
      const DiffOp rhs = eval_x0(lichnerowicz_rhs(f));
      auto pairs = std::make_shared<std::vector<std::pair<SubstitutionPlan, SubstitutionPlan>>>();
      std::map<MultiIndex, int> keys;
      for (const auto& [k, v] : lhs.terms()) keys[k];
      for (const auto& [k, v] : rhs.terms()) keys[k];
      for (const auto& [k, unused] : keys) pairs->emplace_back(field_plan(lhs.coeff(k)), field_plan(rhs.coeff(k)));
      push("lichnerowicz." + fam, [pairs](Assignment& a) {
        for (const auto& [p, q] : *pairs)
          if (!(substitute(p, a) == substitute(q, a))) return false;
        return true;
      });
    }

    // Interior integrand: explicit trace of 4 pi^2 (s/6 + E) against the engine and the display.
    {
      const LaplaceData d = extract_laplace(twisted_square(f));
      const SymbolExpr integrand =
          (SymbolExpr::scalar(m, ScalarExpr(Monomial::of(Sym::s), GaussRational::frac(1, 6))) + d.E)
              .scaled(ScalarExpr(Monomial::of(Sym::pi, 2), GaussRational(4)));
      auto plan = std::make_shared<SubstitutionPlan>(field_plan(integrand));
      auto engine = std::make_shared<TraceExpr>(interior_trace(f));
      auto shown = std::make_shared<TraceExpr>(interior_trace_displayed(f));
      push("interior." + fam + ".engine", [plan, engine](Assignment& a) { return substitute_trace(*plan, a) == a.eval(*engine); });
      push("interior." + fam + ".display", [plan, shown](Assignment& a) { return substitute_trace(*plan, a) == a.eval(*shown); });
    }

    // Clifford traces against the twist: tr[c(dx_n) sigma_0^twist(star)].
    {
      const SymbolExpr twist = twist_sigma0(f, true);
      auto plan = std::make_shared<SubstitutionPlan>(field_plan(SymbolExpr::c_dxn(m) * twist));
      const long d = m.rep_dim();
      TraceExpr want(trace_key(FWord{f == Family::dirac ? SigmaF(4) : SigmaFe(4)}), GaussRational(-d));
      if (f == Family::dirac) want += TraceExpr(trace_key(FWord{PhiStar(4)}), GaussRational(d));
      auto w = std::make_shared<TraceExpr>(want);
      push("identities." + fam + ".c_dxn_twist", [plan, w](Assignment& a) { return substitute_trace(*plan, a) == a.eval(*w); });
      auto sq = std::make_shared<SubstitutionPlan>(field_plan(SymbolExpr::c_dxn(m) * SymbolExpr::c_dxn(m)));
      push("identities." + fam + ".c_dxn_squared", [sq, d](Assignment& a) {
        return substitute_trace(*sq, a) == GaussRational(-d * a.rank());
      });
    }

    if (f == Family::signature) {
      const Theorem57Report r = theorem57_report();
      auto plan = std::make_shared<SubstitutionPlan>(field_plan(signature_square_E()));
      auto traced = std::make_shared<TraceExpr>(r.traced_E);
      auto written = std::make_shared<TraceExpr>(r.convention_as_written);
      auto target = std::make_shared<TraceExpr>(r.target);
      push("theorem57.traced_E", [plan, traced](Assignment& a) { return substitute_trace(*plan, a) == a.eval(*traced); });
      push("theorem57.as_written", [written, target](Assignment& a) { return a.eval(*written) == a.eval(*target); });
    }
  }
  return out;
}

std::vector<OracleResult> run_oracle(const std::vector<OracleIdentity>& ids, std::uint64_t base_seed, int count,
                                     int rank, bool parallel) {
  const std::size_t n = ids.size();
  std::vector<char> ok(static_cast<std::size_t>(count) * n, 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int s = 0; s < count; ++s) {
    Assignment a(base_seed + static_cast<std::uint64_t>(s), rank);
    for (std::size_t i = 0; i < n; ++i) {
      bool held = false;
      try {
        held = ids[i].holds(a);
      } catch (const std::exception&) {
        held = false;
      }
      ok[static_cast<std::size_t>(s) * n + i] = held ? 1 : 0;
    }
  }
  std::vector<OracleResult> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].name = ids[i].name;
    out[i].seeds = count;
    for (int s = 0; s < count; ++s) {
      if (ok[static_cast<std::size_t>(s) * n + i]) {
        ++out[i].exact;
      } else if (out[i].failing.size() < kKeepFailing) {
        out[i].failing.push_back(base_seed + static_cast<std::uint64_t>(s));
      }
    }
  }
  return out;
}

}  // namespace wres
