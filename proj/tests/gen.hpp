#pragma once

// Hand-rolled generators for property tests. Every generator takes the engine by
// reference so a failing case can be replayed from its seed.

#include <random>
#include <string>
#include <vector>

#include "wres/fword.hpp"
#include "wres/poly.hpp"
#include "wres/verifier.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline long small_int(Rng& r, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(r); }

inline wres::GaussRational gauss(Rng& r) {
  return {wres::Rational(small_int(r, -6, 6), small_int(r, 1, 4)), wres::Rational(small_int(r, -6, 6), small_int(r, 1, 4))};
}

inline wres::GaussRational nonzero_gauss(Rng& r) {
  wres::GaussRational g;
  while (g.is_zero()) g = gauss(r);
  return g;
}

inline wres::Poly poly(Rng& r, int max_degree) {
  std::vector<wres::GaussRational> c;
  const int d = static_cast<int>(small_int(r, 0, max_degree));
  for (int k = 0; k <= d; ++k) c.push_back(gauss(r));
  return wres::Poly(c);
}

/// Pole off the real axis with small Gaussian-integer coordinates.
inline wres::GaussRational offaxis_pole(Rng& r) {
  const long im = small_int(r, 1, 3) * (small_int(r, 0, 1) ? 1 : -1);
  return {wres::Rational(small_int(r, -2, 2)), wres::Rational(im)};
}

/// Rational function with poles off the real axis, optionally with a polynomial part.
inline wres::RatFunc ratfunc(Rng& r, bool polynomial_part = true) {
  wres::Poly den(wres::GaussRational(1));
  const int npoles = static_cast<int>(small_int(r, 1, 3));
  for (int k = 0; k < npoles; ++k) den = den * wres::Poly::linear_power(offaxis_pole(r), static_cast<int>(small_int(r, 1, 2)));
  wres::Poly num = poly(r, den.degree() - 1);
  if (num.is_zero()) num = wres::Poly(wres::GaussRational(1));
  wres::RatFunc out(num, den);
  if (polynomial_part) out += wres::RatFunc(poly(r, 2));
  return out;
}

inline wres::FAtom atom(Rng& r) {
  static const wres::AtomKind kinds[] = {wres::AtomKind::Phi,    wres::AtomKind::PhiStar,    wres::AtomKind::SigmaF,
                                         wres::AtomKind::SigmaFe, wres::AtomKind::OmegaF, wres::AtomKind::OmegaFStar};
  wres::FAtom a = wres::FAtom::make(kinds[small_int(r, 0, 5)], static_cast<int>(small_int(r, 1, 4)));
  if (small_int(r, 0, 3) == 0) a = a.derived(static_cast<int>(small_int(r, 1, 4)));
  return a;
}

inline wres::FWord word(Rng& r, int max_len) {
  wres::FWord w;
  const int n = static_cast<int>(small_int(r, 0, max_len));
  for (int k = 0; k < n; ++k) w.atoms.push_back(atom(r));
  return w;
}

inline wres::SuiteSpec suite_spec(Rng& r) {
  wres::SuiteSpec s;
  switch (small_int(r, 0, 2)) {
    case 0: s.families = {wres::Family::dirac}; break;
    case 1: s.families = {wres::Family::signature}; break;
    default: break;
  }
  std::vector<std::string> picked;
  for (const auto& c : wres::check_catalog())
    if (small_int(r, 0, 1)) picked.push_back(c.name);
  if (picked.size() != wres::check_catalog().size()) s.checks = picked;
  s.oracle_rank = static_cast<int>(small_int(r, 1, 4));
  s.oracle_seeds = static_cast<int>(small_int(r, 1, 500));
  s.seed = r();
  s.output = small_int(r, 0, 1) ? wres::OutputFormat::json : wres::OutputFormat::markdown;
  return s;
}

}  // namespace gen
