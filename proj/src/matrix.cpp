#include "wres/matrix.hpp"

#include <stdexcept>

namespace wres {

GMatrix GMatrix::identity(int n) {
  GMatrix m(n);
  for (int k = 0; k < n; ++k) m.at(k, k) = GaussRational(1);
  return m;
}

bool GMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

GaussRational GMatrix::trace() const {
  GaussRational t;
  for (int k = 0; k < n_; ++k) t += at(k, k);
  return t;
}

GMatrix GMatrix::adjoint() const {
  GMatrix m(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) m.at(c, r) = at(r, c).conj();
  return m;
}

GMatrix GMatrix::scaled(const GaussRational& s) const {
  GMatrix m(n_);
  if (s.is_zero()) return m;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!a_[k].is_zero()) m.a_[k] = a_[k] * s;
  return m;
}

GMatrix& GMatrix::operator+=(const GMatrix& o) {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
  return *this;
}

GMatrix& GMatrix::operator-=(const GMatrix& o) {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
  return *this;
}

GMatrix operator*(const GMatrix& a, const GMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
  const int n = a.n_;
  GMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const GaussRational& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        const GaussRational& y = b.at(k, c);
        if (y.is_zero()) continue;
        out.at(r, c) += x * y;
      }
    }
  return out;
}

std::strong_ordering operator<=>(const GMatrix& a, const GMatrix& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t k = 0; k < a.a_.size(); ++k) {
    auto c = a.a_[k] <=> b.a_[k];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

GMatrix GMatrix::kron(const GMatrix& a, const GMatrix& b) {
  const int n = a.n_ * b.n_;
  GMatrix out(n);
  for (int r1 = 0; r1 < a.n_; ++r1)
    for (int c1 = 0; c1 < a.n_; ++c1) {
      const GaussRational& x = a.at(r1, c1);
      if (x.is_zero()) continue;
      for (int r2 = 0; r2 < b.n_; ++r2)
        for (int c2 = 0; c2 < b.n_; ++c2) {
          const GaussRational& y = b.at(r2, c2);
          if (y.is_zero()) continue;
          out.at(r1 * b.n_ + r2, c1 * b.n_ + c2) = x * y;
        }
    }
  return out;
}

void GMatrix::add_scaled(const GMatrix& o, const GaussRational& s) {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  if (s.is_zero()) return;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] += o.a_[k] * s;
}

void GMatrix::add_kron(const GMatrix& a, const GMatrix& b) {
  if (n_ != a.n_ * b.n_) throw std::invalid_argument("matrix dimension mismatch");
  for (int r1 = 0; r1 < a.n_; ++r1)
    for (int c1 = 0; c1 < a.n_; ++c1) {
      const GaussRational& x = a.at(r1, c1);
      if (x.is_zero()) continue;
      for (int r2 = 0; r2 < b.n_; ++r2)
        for (int c2 = 0; c2 < b.n_; ++c2) {
          const GaussRational& y = b.at(r2, c2);
          if (y.is_zero()) continue;
          at(r1 * b.n_ + r2, c1 * b.n_ + c2) += x * y;
        }
    }
}

std::string GMatrix::str() const {
  std::string out = "[";
  for (int r = 0; r < n_; ++r) {
    out += r ? ", [" : "[";
    for (int c = 0; c < n_; ++c) {
      if (c) out += ", ";
      out += at(r, c).str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace wres
