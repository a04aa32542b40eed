#pragma once

// Truncated integrable modules L(kappa) and L'(kappa') built from the
// contravariant (Shapovalov) form, with explicit E_i / F_i matrices.

#include "kmcat/cartan.hpp"
#include "kmcat/crystal.hpp"
#include "kmcat/linalg.hpp"
#include "kmcat/report.hpp"

#include <map>
#include <optional>
#include <vector>

namespace kmcat {

class IntegrableModule {
 public:
  [[nodiscard]] const CartanDatum& datum() const { return datum_; }
  [[nodiscard]] const IntVector& anchor() const { return anchor_; }
  [[nodiscard]] int depth() const { return depth_; }
  [[nodiscard]] bool lowest() const { return lowest_; }
  [[nodiscard]] int rank() const { return datum_.rank(); }

  /// Offsets inside the truncation with nonzero spaces.
  [[nodiscard]] const std::map<IntVector, int>& dims() const { return dims_; }
  [[nodiscard]] int dim(const IntVector& offset) const;
  [[nodiscard]] int total_dim() const;
  [[nodiscard]] bool within(const IntVector& offset) const { return kmcat::depth(offset) <= depth_; }
  /// True when some level inside the truncation vanishes, so nothing lies beyond.
  [[nodiscard]] bool complete() const { return complete_; }

  /// E_i: offset -> offset - e_i and F_i: offset -> offset + e_i; nullopt
  /// when the target lies outside the truncation. Maps out of or into zero
  /// spaces are empty matrices of the right shape.
  [[nodiscard]] std::optional<MatrixQ> E(int i, const IntVector& offset) const;
  [[nodiscard]] std::optional<MatrixQ> F(int i, const IntVector& offset) const;
  /// Contravariant form on the chosen basis of a weight space.
  [[nodiscard]] MatrixQ gram(const IntVector& offset) const;

  [[nodiscard]] Character character() const;

 private:
  friend IntegrableModule build_highest_weight(const CartanDatum&, const IntVector&, int);
  friend IntegrableModule build_lowest_weight(const CartanDatum&, const IntVector&, int);
  friend Report module_construction_checks(const IntegrableModule&);

  CartanDatum datum_;
  IntVector anchor_;
  int depth_ = 0;
  bool lowest_ = false;
  bool complete_ = false;
  std::map<IntVector, int> dims_;
  std::map<std::pair<int, IntVector>, MatrixQ> e_, f_;  // keyed by source offset
  std::map<IntVector, MatrixQ> gram_;
  // candidate Gram matrices and pivot choices, kept for the construction checks
  std::map<IntVector, MatrixQ> candidate_gram_;
};

/// L(kappa) to depth `depth` (|offset| <= depth). Throws Error(NotDominant).
IntegrableModule build_highest_weight(const CartanDatum& datum, const IntVector& kappa, int depth);

/// L'(kappa') for antidominant kappa', mirrored from L(-kappa').
IntegrableModule build_lowest_weight(const CartanDatum& datum, const IntVector& kappa_prime, int depth);

/// Symmetry of the forms, adjointness of E_i and F_i, and vanishing of the
/// radical in the chosen coordinates.
Report module_construction_checks(const IntegrableModule& m);

/// (ad E_i)^{1 + d_ij}(E_j) = 0 and (ad F_i)^{1 + d_ij}(F_j) = 0 on every
/// weight space whose images stay inside the truncation; others are untested.
Report verify_serre(const IntegrableModule& m);

/// [E_i, F_j] = delta_ij <h_i, lambda> id on interior weight spaces.
Report verify_commutators(const IntegrableModule& m);

/// Every weight space is spanned by F_{i_n}^{(r_n)} ... F_{i_1}^{(r_1)} v.
Report divided_power_span_check(const IntegrableModule& m);

/// F_i reaches zero inside the truncation from every weight space.
Report verify_integrability(const IntegrableModule& m);

/// Irreducible constituents of a finite-type character, highest first:
/// (anchor of the highest weight, multiplicity). Negative coefficients or a
/// non-dominant leading weight yield nullopt.
std::optional<std::vector<std::pair<IntVector, long>>> weyl_decompose(const CartanDatum& datum, const Character& ch);

/// char L'(kappa') * char L(kappa) against the character of B'(kappa') x B(kappa)
/// on all complete weights, plus the Weyl decomposition in finite type.
/// Throws Error(IncompleteDepth) when no weight is complete.
Report tensor_character_check(const CartanDatum& datum, const IntVector& kappa_prime, const IntVector& kappa, int depth);

/// Construction checks, Serre, commutators, divided powers, integrability and
/// multiplicities against the crystal; Weyl dimension when complete.
Report module_suite(const CartanDatum& datum, const IntVector& kappa, int depth);

}  // namespace kmcat
