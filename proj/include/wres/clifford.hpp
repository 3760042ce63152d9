#pragma once

#include <array>
#include <string>

#include "wres/matrix.hpp"

namespace wres {

enum class ModelKind { spin4, signature4 };

/// Exact Clifford module on R^4 with c(e_i)c(e_j) + c(e_j)c(e_i) = -2 delta_ij.
/// The signature model also carries chat(e_i) with the +2 delta_ij relation.
class CliffordModel {
 public:
  static const CliffordModel& spin();
  static const CliffordModel& signature();
  static const CliffordModel& get(ModelKind kind);

  ModelKind kind() const { return kind_; }
  std::string name() const { return kind_ == ModelKind::spin4 ? "spin4" : "signature4"; }
  int rep_dim() const { return dim_; }
  bool has_cohat() const { return kind_ == ModelKind::signature4; }

  /// c(e_i), i in 1..4. e_4 is the inward normal dx_n.
  const GMatrix& c(int i) const;
  /// chat(e_i); throws for the spin model.
  const GMatrix& chat(int i) const;
  GMatrix identity() const { return GMatrix::identity(dim_); }

  /// Signature model only: exterior and interior multiplication by e_i^*.
  const GMatrix& ext(int i) const;
  const GMatrix& inn(int i) const;
  /// Signature model only: form degree of basis vector b (subset bitmask popcount).
  int form_degree(int basis_index) const;

 private:
  CliffordModel() = default;
  static CliffordModel build_spin();
  static CliffordModel build_signature();
  void check_relations() const;

  ModelKind kind_ = ModelKind::spin4;
  int dim_ = 0;
  std::array<GMatrix, 4> c_;
  std::array<GMatrix, 4> chat_;
  std::array<GMatrix, 4> ext_;
  std::array<GMatrix, 4> inn_;
};

GaussRational trace_rep(const GMatrix& m);

}  // namespace wres
