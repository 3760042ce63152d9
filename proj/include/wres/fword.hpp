#pragma once

#include <compare>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wres/matrix.hpp"
#include "wres/scalar.hpp"

namespace wres {

/// Twist-endomorphism atoms acting on F. SpinConn and Gamma are the geometric
/// coefficients used by the Laplace-type expansion; they vanish at the base point
/// unless differentiated. Riem holds <R(e_i,e_j)e_i,e_j> as a formal function.
enum class AtomKind : std::uint8_t {
  Phi,
  PhiStar,
  SigmaF,
  SigmaFe,
  OmegaF,
  OmegaFStar,
  RF,
  RFe,
  SpinConn,
  Gamma,
  Riem,
};

struct FAtom {
  AtomKind kind = AtomKind::Phi;
  std::int8_t i = 0;  // frame index 1..4
  std::int8_t j = 0;  // second index for two-index atoms, else 0
  std::int8_t nder = 0;
  std::array<std::int8_t, 2> der{};  // derivative directions, sorted

  static FAtom make(AtomKind k, int i, int j = 0) {
    FAtom a;
    a.kind = k;
    a.i = static_cast<std::int8_t>(i);
    a.j = static_cast<std::int8_t>(j);
    return a;
  }
  /// Der(direction, *this); throws past depth 2.
  FAtom derived(int direction) const;
  bool is_two_index() const { return kind == AtomKind::RF || kind == AtomKind::RFe || kind == AtomKind::Riem; }

  friend auto operator<=>(const FAtom&, const FAtom&) = default;
  friend bool operator==(const FAtom&, const FAtom&) = default;

  std::string str() const;
};

inline FAtom Phi(int j) { return FAtom::make(AtomKind::Phi, j); }
inline FAtom PhiStar(int j) { return FAtom::make(AtomKind::PhiStar, j); }
inline FAtom SigmaF(int j) { return FAtom::make(AtomKind::SigmaF, j); }
inline FAtom SigmaFe(int j) { return FAtom::make(AtomKind::SigmaFe, j); }
inline FAtom OmegaF(int j) { return FAtom::make(AtomKind::OmegaF, j); }
inline FAtom OmegaFStar(int j) { return FAtom::make(AtomKind::OmegaFStar, j); }
inline FAtom SpinConn(int j) { return FAtom::make(AtomKind::SpinConn, j); }
inline FAtom GammaAtom(int k) { return FAtom::make(AtomKind::Gamma, k); }

/// Curvature atom with antisymmetry normalization: returns nullopt for i == j,
/// otherwise (sign, atom) with the atom's indices ascending.
std::optional<std::pair<int, FAtom>> make_curvature(AtomKind kind, int i, int j);

/// Adjoint of a single atom: (sign, atom) with atom* = sign * atom'.
std::pair<int, FAtom> adjoint(const FAtom& a);

/// Ordered product of atoms; the empty word is the identity on F.
struct FWord {
  std::vector<FAtom> atoms;

  FWord() = default;
  FWord(std::initializer_list<FAtom> a) : atoms(a) {}
  explicit FWord(std::vector<FAtom> a) : atoms(std::move(a)) {}

  bool empty() const { return atoms.empty(); }
  std::size_t size() const { return atoms.size(); }
  friend auto operator<=>(const FWord&, const FWord&) = default;
  friend bool operator==(const FWord&, const FWord&) = default;

  std::string str() const;  // atoms joined by '*', "1" for the empty word
};

FWord word_mul(const FWord& a, const FWord& b);
/// adjoint(w) = sign * w' with w' the reversed word of adjoint atoms.
std::pair<int, FWord> adjoint(const FWord& w);
/// Cyclically minimal rotation.
FWord cyclic_normal(const FWord& w);

/// Linear combination of words with ScalarExpr coefficients.
using FPoly = std::map<FWord, ScalarExpr>;

/// Formal trace Tr_F of a single word, stored in cyclic normal form.
struct TraceAtom {
  FWord word;
  explicit TraceAtom(const FWord& w) : word(cyclic_normal(w)) {}
  friend auto operator<=>(const TraceAtom&, const TraceAtom&) = default;
  friend bool operator==(const TraceAtom&, const TraceAtom&) = default;
  std::string str() const;  // `dimF` or `TrF[...]`
};

/// Sorted multiset of trace atoms.
using TraceKey = std::vector<TraceAtom>;
TraceKey trace_key(const FWord& w);

class TraceExpr {
 public:
  TraceExpr() = default;
  TraceExpr(const TraceKey& key, const ScalarExpr& coeff) { add(key, coeff); }

  const std::map<TraceKey, ScalarExpr>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const TraceKey& key, const ScalarExpr& coeff);
  ScalarExpr coeff(const TraceKey& key) const;

  TraceExpr operator-() const;
  TraceExpr& operator+=(const TraceExpr& o);
  TraceExpr& operator-=(const TraceExpr& o);
  friend TraceExpr operator+(TraceExpr a, const TraceExpr& b) { return a += b; }
  friend TraceExpr operator-(TraceExpr a, const TraceExpr& b) { return a -= b; }
  friend TraceExpr operator*(const TraceExpr& a, const ScalarExpr& s);
  friend TraceExpr operator*(const ScalarExpr& s, const TraceExpr& a) { return a * s; }
  friend bool operator==(const TraceExpr&, const TraceExpr&) = default;

  TraceExpr specialize_n(long value) const;
  /// Drops every term whose coefficient involves the given symbol.
  TraceExpr without_symbol(Sym s) const;
  /// Keeps only the terms whose coefficient involves the given symbol.
  TraceExpr only_symbol(Sym s) const;

  /// `(3/8*pi*hp0*Omega)*dimF + (pi*Omega)*TrF[Phi[4]]`
  std::string str() const;

 private:
  std::map<TraceKey, ScalarExpr> terms_;
};

TraceExpr trace_F(const FPoly& p);
/// Tr_F of the empty word: the distinguished `dimF` atom.
TraceKey dimF_key();

FAtom parse_atom(std::string_view text);
FWord parse_word(std::string_view text);

/// Deterministic random assignment of exact matrices to atoms, for the numeric oracle.
/// Entries are drawn from {-2..2} + {-2..2} i. Starred atoms get the conjugate
/// transpose of their partner, skew atoms A - A^dagger, scalar-function atoms
/// (Gamma, Riem) a real multiple of the identity. Derivative atoms get their own
/// base matrix and then the same rule, so that adjoint commutes with Der.
class Assignment {
 public:
  Assignment(std::uint64_t seed, int rank);

  int rank() const { return rank_; }
  std::uint64_t seed() const { return seed_; }
  const GMatrix& matrix(const FAtom& a);
  GMatrix word(const FWord& w);
  GaussRational trace(const TraceAtom& t);
  /// Values of the commuting symbols; n is always 4.
  GaussRational symbol(Sym s) const;
  GaussRational scalar(const ScalarExpr& e) const;
  GaussRational eval(const TraceExpr& e);

 private:
  GMatrix random_matrix(std::string_view key) const;

  std::uint64_t seed_;
  int rank_;
  std::map<FAtom, GMatrix> cache_;
  std::array<GaussRational, kNumSyms> symvals_;
};

}  // namespace wres
