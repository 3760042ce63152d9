#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wres/fword.hpp"
#include "wres/operators.hpp"
#include "wres/symbol.hpp"

namespace wres {

/// Seed-independent part of a substitution: (word, commuting monomial) -> Clifford matrix.
struct SubstitutionPlan {
  int rep_dim = 0;
  std::map<std::pair<FWord, Monomial>, GMatrix> terms;
  void add(const FWord& w, const Monomial& m, const GMatrix& a);
};

/// Plan of a xi-free coefficient with constant rational factors.
SubstitutionPlan field_plan(const SymbolExpr& field);

/// Plan of a symbol at a sample value of xin, one per tangential monomial, after
/// reduction to the unit cosphere.
std::map<XiMono, SubstitutionPlan> symbol_plan(const SymbolExpr& sym, const GaussRational& xin);

/// Plan of a boundary case: each term of the product is integrated over xin and over the
/// cosphere before any trace is taken.
SubstitutionPlan boundary_plan(const SymbolExpr& left, const SymbolExpr& right, const GaussRational& prefactor);

/// Full matrix on S (x) F: sum of kron(M, W) times the substituted monomial.
GMatrix substitute(const SubstitutionPlan& plan, Assignment& a);
/// Trace of the substituted matrix, formed explicitly.
GaussRational substitute_trace(const SubstitutionPlan& plan, Assignment& a);

/// A symbolic identity checked under one random assignment.
struct OracleIdentity {
  std::string name;
  std::function<bool(Assignment&)> holds;
};

/// Identities for the given families; the symbolic data is built once and shared read-only.
std::vector<OracleIdentity> oracle_identities(const std::vector<Family>& families);

struct OracleResult {
  std::string name;
  int seeds = 0;
  int exact = 0;
  std::vector<std::uint64_t> failing;  // first few failing seeds
  bool all_exact() const { return exact == seeds; }
};

/// Seeds base..base+count-1, one Assignment per seed. The parallel path splits seeds over
/// OpenMP threads; both paths return identical results.
std::vector<OracleResult> run_oracle(const std::vector<OracleIdentity>& ids, std::uint64_t base_seed, int count,
                                     int rank, bool parallel);

}  // namespace wres
