#include "wres/fword.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>

namespace wres {

namespace {

constexpr std::array<std::string_view, 11> kAtomNames = {
    "Phi", "PhiStar", "SigmaF", "SigmaFe", "OmegaF", "OmegaFStar",
    "RF",  "RFe",     "SpinConn", "Gamma", "Riem",
};

std::string_view atom_name(AtomKind k) { return kAtomNames[static_cast<std::size_t>(k)]; }

bool is_skew(AtomKind k) {
  return k == AtomKind::SigmaF || k == AtomKind::SigmaFe || k == AtomKind::RF || k == AtomKind::RFe ||
         k == AtomKind::SpinConn;
}

bool is_scalar_function(AtomKind k) { return k == AtomKind::Gamma || k == AtomKind::Riem; }

}  // namespace

FAtom FAtom::derived(int direction) const {
  if (direction < 1 || direction > 4) throw std::out_of_range("derivative direction must be in 1..4");
  if (nder >= 2) throw std::logic_error("derivative depth exceeds 2: " + str());
  FAtom a = *this;
  a.der[a.nder++] = static_cast<std::int8_t>(direction);
  if (a.nder == 2 && a.der[0] > a.der[1]) std::swap(a.der[0], a.der[1]);
  return a;
}

std::string FAtom::str() const {
  std::string s(atom_name(kind));
  s += "[" + std::to_string(i);
  if (is_two_index()) s += "," + std::to_string(j);
  s += "]";
  for (int k = nder - 1; k >= 0; --k) s = "D[" + std::to_string(der[k]) + "]{" + s + "}";
  return s;
}

std::optional<std::pair<int, FAtom>> make_curvature(AtomKind kind, int i, int j) {
  if (i == j) return std::nullopt;
  if (i < j) return std::pair{1, FAtom::make(kind, i, j)};
  return std::pair{-1, FAtom::make(kind, j, i)};
}

std::pair<int, FAtom> adjoint(const FAtom& a) {
  FAtom b = a;
  switch (a.kind) {
    case AtomKind::Phi: b.kind = AtomKind::PhiStar; return {1, b};
    case AtomKind::PhiStar: b.kind = AtomKind::Phi; return {1, b};
    case AtomKind::OmegaF: b.kind = AtomKind::OmegaFStar; return {1, b};
    case AtomKind::OmegaFStar: b.kind = AtomKind::OmegaF; return {1, b};
    case AtomKind::Gamma:
    case AtomKind::Riem: return {1, b};
    default: return {-1, b};
  }
}

std::string FWord::str() const {
  if (atoms.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (k) s += "*";
    s += atoms[k].str();
  }
  return s;
}

FWord word_mul(const FWord& a, const FWord& b) {
  FWord w = a;
  w.atoms.insert(w.atoms.end(), b.atoms.begin(), b.atoms.end());
  return w;
}

std::pair<int, FWord> adjoint(const FWord& w) {
  int sign = 1;
  FWord out;
  out.atoms.reserve(w.size());
  for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it) {
    auto [s, b] = adjoint(*it);
    sign *= s;
    out.atoms.push_back(b);
  }
  return {sign, out};
}

FWord cyclic_normal(const FWord& w) {
  const std::size_t n = w.size();
  if (n < 2) return w;
  std::size_t best = 0;
  auto less_rot = [&](std::size_t r, std::size_t s) {
    for (std::size_t k = 0; k < n; ++k) {
      const FAtom& x = w.atoms[(r + k) % n];
      const FAtom& y = w.atoms[(s + k) % n];
      if (x != y) return x < y;
    }
    return false;
  };
  for (std::size_t r = 1; r < n; ++r)
    if (less_rot(r, best)) best = r;
  FWord out;
  out.atoms.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.atoms.push_back(w.atoms[(best + k) % n]);
  return out;
}

std::string TraceAtom::str() const {
  if (word.empty()) return "dimF";
  return "TrF[" + word.str() + "]";
}

TraceKey trace_key(const FWord& w) { return {TraceAtom(w)}; }

TraceKey dimF_key() { return {TraceAtom(FWord{})}; }

void TraceExpr::add(const TraceKey& key, const ScalarExpr& coeff) {
  if (coeff.is_zero()) return;
  TraceKey k = key;
  std::sort(k.begin(), k.end());
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

ScalarExpr TraceExpr::coeff(const TraceKey& key) const {
  TraceKey k = key;
  std::sort(k.begin(), k.end());
  auto it = terms_.find(k);
  return it == terms_.end() ? ScalarExpr() : it->second;
}

TraceExpr TraceExpr::operator-() const {
  TraceExpr out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, -v);
  return out;
}

TraceExpr& TraceExpr::operator+=(const TraceExpr& o) {
  for (const auto& [k, v] : o.terms_) add(k, v);
  return *this;
}

TraceExpr& TraceExpr::operator-=(const TraceExpr& o) {
  for (const auto& [k, v] : o.terms_) add(k, -v);
  return *this;
}

TraceExpr operator*(const TraceExpr& a, const ScalarExpr& s) {
  TraceExpr out;
  for (const auto& [k, v] : a.terms_) out.add(k, v * s);
  return out;
}

TraceExpr TraceExpr::specialize_n(long value) const {
  TraceExpr out;
  for (const auto& [k, v] : terms_) out.add(k, v.specialize_n(value));
  return out;
}

namespace {

ScalarExpr filter_symbol(const ScalarExpr& e, Sym s, bool keep_with) {
  ScalarExpr out;
  for (const auto& [m, c] : e.terms())
    if ((m.degree(s) > 0) == keep_with) out.add(m, c);
  return out;
}

}  // namespace

TraceExpr TraceExpr::without_symbol(Sym s) const {
  TraceExpr out;
  for (const auto& [k, v] : terms_) out.add(k, filter_symbol(v, s, false));
  return out;
}

TraceExpr TraceExpr::only_symbol(Sym s) const {
  TraceExpr out;
  for (const auto& [k, v] : terms_) out.add(k, filter_symbol(v, s, true));
  return out;
}

std::string TraceExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    std::string key;
    for (std::size_t t = 0; t < k.size(); ++t) {
      if (t) key += "*";
      key += k[t].str();
    }
    std::string c = v.str();
    bool neg = false;
    if (v.terms().size() == 1 && !c.empty() && c[0] == '-') {
      neg = true;
      c.erase(0, 1);
    } else if (v.terms().size() > 1) {
      c = "(" + c + ")";
    }
    std::string term;
    if (key.empty())
      term = c;
    else if (c == "1")
      term = key;
    else
      term = c + "*" + key;
    if (first)
      out += neg ? "-" + term : term;
    else
      out += neg ? " - " + term : " + " + term;
    first = false;
  }
  return out;
}

TraceExpr trace_F(const FPoly& p) {
  TraceExpr out;
  for (const auto& [w, c] : p) out.add(trace_key(w), c);
  return out;
}

namespace {

class AtomParser {
 public:
  explicit AtomParser(std::string_view t) : t_(t) {}

  FWord word() {
    FWord w;
    skip();
    if (t_.substr(pos_) == "1") return w;
    w.atoms.push_back(atom());
    while (eat('*')) w.atoms.push_back(atom());
    skip();
    if (pos_ != t_.size()) fail("unexpected trailing input");
    return w;
  }

  FAtom single() {
    FAtom a = atom();
    skip();
    if (pos_ != t_.size()) fail("unexpected trailing input");
    return a;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at offset " + std::to_string(pos_) + " in '" + std::string(t_) + "'");
  }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < t_.size() && t_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  int index() {
    skip();
    if (pos_ >= t_.size() || !std::isdigit(static_cast<unsigned char>(t_[pos_]))) fail("expected index");
    int v = t_[pos_++] - '0';
    if (v < 1 || v > 4) fail("index out of range 1..4");
    return v;
  }
  FAtom atom() {
    skip();
    std::size_t start = pos_;
    while (pos_ < t_.size() && std::isalpha(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    std::string_view name = t_.substr(start, pos_ - start);
    if (name.empty()) fail("expected atom name");
    expect('[');
    int i = index();
    if (name == "D") {
      expect(']');
      expect('{');
      FAtom inner = atom();
      expect('}');
      return inner.derived(i);
    }
    auto it = std::find(kAtomNames.begin(), kAtomNames.end(), name);
    if (it == kAtomNames.end()) {
      pos_ = start;
      fail("unknown atom '" + std::string(name) + "'");
    }
    const auto kind = static_cast<AtomKind>(it - kAtomNames.begin());
    FAtom a = FAtom::make(kind, i);
    if (a.is_two_index()) {
      expect(',');
      a.j = static_cast<std::int8_t>(index());
      if (kind != AtomKind::Riem && a.i >= a.j) fail("curvature indices must be ascending");
    }
    expect(']');
    return a;
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

FAtom parse_atom(std::string_view text) { return AtomParser(text).single(); }

FWord parse_word(std::string_view text) { return AtomParser(text).word(); }

Assignment::Assignment(std::uint64_t seed, int rank) : seed_(seed), rank_(rank) {
  if (rank < 1) throw std::invalid_argument("oracle rank must be positive");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x5eedu};
  std::mt19937_64 eng(seq);
  for (int k = 0; k < kNumSyms; ++k) symvals_[k] = GaussRational(static_cast<long>(eng() % 7) + 1);
  symvals_[static_cast<int>(Sym::n)] = GaussRational(4);
}

GMatrix Assignment::random_matrix(std::string_view key) const {
  const std::uint64_t h = fnv1a(key);
  std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  std::mt19937_64 eng(seq);
  GMatrix m(rank_);
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c) {
      const long re = static_cast<long>(eng() % 5) - 2;
      const long im = static_cast<long>(eng() % 5) - 2;
      m.at(r, c) = GaussRational(Rational(re), Rational(im));
    }
  return m;
}

const GMatrix& Assignment::matrix(const FAtom& a) {
  auto it = cache_.find(a);
  if (it != cache_.end()) return it->second;

  FAtom base = a;
  bool starred = false;
  if (a.kind == AtomKind::PhiStar) {
    base.kind = AtomKind::Phi;
    starred = true;
  } else if (a.kind == AtomKind::OmegaFStar) {
    base.kind = AtomKind::OmegaF;
    starred = true;
  }
  GMatrix r = random_matrix(base.str());
  GMatrix m;
  if (is_scalar_function(a.kind)) {
    m = GMatrix::identity(rank_).scaled(GaussRational(r.at(0, 0).re()));
  } else if (is_skew(a.kind)) {
    m = r - r.adjoint();
  } else {
    m = starred ? r.adjoint() : r;
  }
  return cache_.emplace(a, std::move(m)).first->second;
}

GMatrix Assignment::word(const FWord& w) {
  GMatrix m = GMatrix::identity(rank_);
  for (const auto& a : w.atoms) m = m * matrix(a);
  return m;
}

GaussRational Assignment::trace(const TraceAtom& t) { return word(t.word).trace(); }

GaussRational Assignment::symbol(Sym s) const { return symvals_[static_cast<int>(s)]; }

GaussRational Assignment::scalar(const ScalarExpr& e) const {
  GaussRational total;
  for (const auto& [m, c] : e.terms()) {
    GaussRational v = c;
    for (int k = 0; k < kNumSyms; ++k)
      for (int p = 0; p < m.exp[k]; ++p) v = v * symvals_[k];
    total += v;
  }
  return total;
}

GaussRational Assignment::eval(const TraceExpr& e) {
  GaussRational total;
  for (const auto& [key, c] : e.terms()) {
    GaussRational v = scalar(c);
    for (const auto& t : key) v = v * trace(t);
    total += v;
  }
  return total;
}

}  // namespace wres
