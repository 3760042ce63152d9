#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wres/gauss.hpp"

namespace wres {

/// Dense square matrix over Q(i). Products skip zero entries, which keeps the
/// monomial Clifford generators cheap.
class GMatrix {
 public:
  GMatrix() = default;
  explicit GMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  static GMatrix identity(int n);

  int dim() const { return n_; }
  GaussRational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const GaussRational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  bool is_zero() const;
  GaussRational trace() const;
  GMatrix adjoint() const;  // conjugate transpose
  GMatrix scaled(const GaussRational& s) const;

  GMatrix operator-() const { return scaled(GaussRational(-1)); }
  GMatrix& operator+=(const GMatrix& o);
  GMatrix& operator-=(const GMatrix& o);
  friend GMatrix operator+(GMatrix a, const GMatrix& b) { return a += b; }
  friend GMatrix operator-(GMatrix a, const GMatrix& b) { return a -= b; }
  friend GMatrix operator*(const GMatrix& a, const GMatrix& b);
  friend bool operator==(const GMatrix&, const GMatrix&) = default;
  friend std::strong_ordering operator<=>(const GMatrix& a, const GMatrix& b);

  /// Kronecker product a (x) b.
  static GMatrix kron(const GMatrix& a, const GMatrix& b);
  /// In-place forms that avoid temporaries: *this += s * o and *this += a (x) b.
  void add_scaled(const GMatrix& o, const GaussRational& s);
  void add_kron(const GMatrix& a, const GMatrix& b);

  /// Row-major text: `[[1, 0], [0, -i]]`.
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<GaussRational> a_;
};

}  // namespace wres
