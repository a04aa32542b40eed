#pragma once

// Kac-Moody data: generalized Cartan matrices, symmetrizers, weights in
// kappa + Q, dominance order, and the Weyl dimension formula.

#include "kmcat/rational.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kmcat {

using IntVector = std::vector<int>;

/// Generalized Cartan matrix a (a_ii = 2) with its canonical symmetrizer d.
/// Indices are 0-based internally.
class CartanDatum {
 public:
  CartanDatum() = default;

  [[nodiscard]] int rank() const { return static_cast<int>(gcm_.rows()); }
  [[nodiscard]] int a(int i, int j) const { return gcm_(i, j); }
  /// Entry of the "d" matrix used by the quiver Hecke relations, i.e. -a_ij.
  [[nodiscard]] int d_ij(int i, int j) const { return -gcm_(i, j); }
  [[nodiscard]] int d(int i) const { return symmetrizer_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const Eigen::MatrixXi& gcm() const { return gcm_; }
  [[nodiscard]] const IntVector& symmetrizer() const { return symmetrizer_; }
  [[nodiscard]] bool finite_type() const { return finite_type_; }

  /// Symmetric bilinear form on the root lattice, (alpha_i, alpha_j) = d_i a_ij.
  [[nodiscard]] long root_form(const IntVector& x, const IntVector& y) const;

  friend bool operator==(const CartanDatum& x, const CartanDatum& y) {
    return x.gcm_ == y.gcm_;
  }

 private:
  friend CartanDatum validate_gcm(const Eigen::MatrixXi& matrix);
  Eigen::MatrixXi gcm_;
  IntVector symmetrizer_;
  bool finite_type_ = false;
};

/// Validates a generalized Cartan matrix and computes its symmetrizer.
/// Throws Error(NotGCM) or Error(NotSymmetrizable).
CartanDatum validate_gcm(const Eigen::MatrixXi& matrix);
CartanDatum validate_gcm(const std::vector<std::vector<int>>& rows);

/// True iff for every cycle i1 -> i2 -> ... -> i1 in the Dynkin graph the
/// products of a along and against the cycle agree. Used as an oracle for
/// validate_gcm's symmetrizer search; exponential in the rank.
bool cycle_products_consistent(const Eigen::MatrixXi& matrix);

/// Weight kappa - sum_j offset_j alpha_j, where kappa is recorded only through
/// its pairings anchor_i = <h_i, kappa>.
struct Weight {
  IntVector anchor;
  IntVector offset;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight anchored(const IntVector& anchor);

/// <h_i, lambda> = k_i - sum_j beta_j a_ij.
int pairing(const CartanDatum& datum, int i, const Weight& lambda);
int pairing(const CartanDatum& datum, int i, const IntVector& anchor, const IntVector& offset);

/// lambda <= mu in the dominance order. Throws Error(AnchorMismatch).
bool dominance_leq(const Weight& lambda, const Weight& mu);

/// Sum of |offset_j|.
int depth(const IntVector& offset);

bool is_dominant(const IntVector& anchor);

/// Positive roots in simple-root coordinates, by closing the simple roots under
/// simple reflections. Throws Error(NotFiniteType) past `cap` roots.
std::vector<IntVector> positive_roots(const CartanDatum& datum, std::size_t cap = 10000);

/// Dimension of L(kappa) by the Weyl dimension formula (finite type only).
mpz_class weyl_dim(const CartanDatum& datum, const IntVector& anchor);

/// Named test matrices: "A1", "A2", "B2", "G2", "A1xA1", "affA1".
Eigen::MatrixXi standard_gcm(std::string_view name);

}  // namespace kmcat
