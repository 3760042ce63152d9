#include "wres/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace wres {

namespace {

GMatrix pauli(int k) {
  GMatrix m(2);
  const GaussRational i = GaussRational::i();
  switch (k) {
    case 0:
      m = GMatrix::identity(2);
      break;
    case 1:
      m.at(0, 1) = 1;
      m.at(1, 0) = 1;
      break;
    case 2:
      m.at(0, 1) = -i;
      m.at(1, 0) = i;
      break;
    case 3:
      m.at(0, 0) = 1;
      m.at(1, 1) = -1;
      break;
    default:
      throw std::logic_error("pauli index");
  }
  return m;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("Clifford relation violated: " + what);
}

}  // namespace

CliffordModel CliffordModel::build_spin() {
  CliffordModel m;
  m.kind_ = ModelKind::spin4;
  m.dim_ = 4;
  const GaussRational i = GaussRational::i();
  // Hermitian generators gamma_k = s1 (x) s_k (k < 4), gamma_4 = s2 (x) 1; c = i gamma.
  for (int k = 1; k <= 3; ++k) m.c_[k - 1] = GMatrix::kron(pauli(1), pauli(k)).scaled(i);
  m.c_[3] = GMatrix::kron(pauli(2), pauli(0)).scaled(i);
  m.check_relations();
  return m;
}

CliffordModel CliffordModel::build_signature() {
  CliffordModel m;
  m.kind_ = ModelKind::signature4;
  m.dim_ = 16;
  for (int k = 0; k < 4; ++k) {
    GMatrix e(16), in(16);
    const int bit = 1 << k;
    for (int s = 0; s < 16; ++s) {
      const int sign = (std::popcount(static_cast<unsigned>(s & (bit - 1))) % 2) ? -1 : 1;
      if (s & bit) {
        in.at(s ^ bit, s) = sign;
      } else {
        e.at(s | bit, s) = sign;
      }
    }
    m.ext_[k] = e;
    m.inn_[k] = in;
    m.c_[k] = e - in;
    m.chat_[k] = e + in;
  }
  m.check_relations();
  return m;
}

void CliffordModel::check_relations() const {
  const GMatrix id = identity();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      GMatrix ac = c_[a] * c_[b] + c_[b] * c_[a];
      require(ac == (a == b ? id.scaled(-2) : GMatrix(dim_)), "c c + c c = -2 delta");
      if (!has_cohat()) continue;
      GMatrix hh = chat_[a] * chat_[b] + chat_[b] * chat_[a];
      require(hh == (a == b ? id.scaled(2) : GMatrix(dim_)), "chat chat + chat chat = 2 delta");
      require((c_[a] * chat_[b] + chat_[b] * c_[a]).is_zero(), "c chat + chat c = 0");
    }
  if (has_cohat()) {
    for (int a = 0; a < 4; ++a) {
      require(ext_[a] * inn_[a] + inn_[a] * ext_[a] == id, "eps iota + iota eps = 1");
      require((ext_[a] * ext_[a]).is_zero() && (inn_[a] * inn_[a]).is_zero(), "eps^2 = iota^2 = 0");
    }
  }
}

const CliffordModel& CliffordModel::spin() {
  static const CliffordModel m = build_spin();
  return m;
}

const CliffordModel& CliffordModel::signature() {
  static const CliffordModel m = build_signature();
  return m;
}

const CliffordModel& CliffordModel::get(ModelKind kind) {
  return kind == ModelKind::spin4 ? spin() : signature();
}

const GMatrix& CliffordModel::c(int i) const {
  if (i < 1 || i > 4) throw std::out_of_range("Clifford index must be in 1..4");
  return c_[i - 1];
}

const GMatrix& CliffordModel::chat(int i) const {
  if (!has_cohat()) throw std::logic_error("chat is not available in the spin model");
  if (i < 1 || i > 4) throw std::out_of_range("Clifford index must be in 1..4");
  return chat_[i - 1];
}

const GMatrix& CliffordModel::ext(int i) const {
  if (!has_cohat()) throw std::logic_error("exterior multiplication needs the signature model");
  return ext_.at(i - 1);
}

const GMatrix& CliffordModel::inn(int i) const {
  if (!has_cohat()) throw std::logic_error("interior multiplication needs the signature model");
  return inn_.at(i - 1);
}

int CliffordModel::form_degree(int basis_index) const {
  return std::popcount(static_cast<unsigned>(basis_index));
}

GaussRational trace_rep(const GMatrix& m) { return m.trace(); }

}  // namespace wres
