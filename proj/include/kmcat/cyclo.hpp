#pragma once

// Cyclotomic quotients H'_n(kappa) = H_n / <x_1^{k_{i_1}} e(i)> computed by
// linear algebra on the basis psi_w x^a e(i), their content blocks, and
// counts of simple modules.

#include "kmcat/klr.hpp"
#include "kmcat/linalg.hpp"
#include "kmcat/report.hpp"

#include <map>
#include <memory>
#include <tuple>
#include <vector>

namespace kmcat {

class CycloAlgebra {
 public:
  [[nodiscard]] const KLRParams& params() const { return params_; }
  [[nodiscard]] const IntVector& kappa() const { return kappa_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int dim() const { return static_cast<int>(basis_.size()); }
  [[nodiscard]] bool homogeneous() const { return params_.homogeneous(); }

  /// Representatives psi_w x^a e(i) of the quotient basis.
  [[nodiscard]] const std::vector<KLRKey>& basis() const { return basis_; }
  [[nodiscard]] int degree(int b) const { return degrees_[static_cast<std::size_t>(b)]; }
  [[nodiscard]] const IntVector& content(int b) const { return contents_[static_cast<std::size_t>(b)]; }
  /// Coordinates of basis(a) * basis(b).
  [[nodiscard]] const SparseVectorQ& product(int a, int b) const {
    return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  [[nodiscard]] const SparseVectorQ& unit() const { return unit_; }
  [[nodiscard]] SparseVectorQ multiply(const SparseVectorQ& u, const SparseVectorQ& v) const;

  /// Contents present in the algebra, in lexicographic order.
  [[nodiscard]] std::vector<IntVector> block_contents() const;
  /// Basis indices of the content block beta.
  [[nodiscard]] std::vector<int> block(const IntVector& beta) const;

  /// Smallest N with x_k^N e(i) = 0, keyed by (k, word); words with
  /// e(i) = 0 are listed with N = 0.
  [[nodiscard]] const std::map<std::pair<int, Word>, int>& nilpotency() const { return nilpotency_; }
  /// Build details: mode, caps, degree bound.
  [[nodiscard]] const Json& diagnostics() const { return diagnostics_; }

  /// Reduces an element of H_n to quotient coordinates.
  [[nodiscard]] SparseVectorQ reduce(const KLRElement& a) const;

 private:
  friend CycloAlgebra cyclo_build(const KLRParams&, const IntVector&, int, const std::vector<int>&);
  friend class CycloBuilder;

  KLRParams params_;
  IntVector kappa_;
  int n_ = 0;
  std::vector<KLRKey> basis_;
  std::vector<int> degrees_;
  std::vector<IntVector> contents_;
  std::vector<std::vector<SparseVectorQ>> table_;
  SparseVectorQ unit_;
  std::map<std::pair<int, Word>, int> nilpotency_;
  Json diagnostics_ = Json::object();

  // reduction data: per component (top, bottom, grade) the ideal echelon and
  // the map column -> basis index
  struct Component {
    std::map<KLRKey, int> index;
    SparseEchelon ideal;
    std::map<int, int> basis_of_column;
  };
  std::map<std::tuple<Word, Word, int>, Component> components_;
  int degree_bound_ = 0;
  std::shared_ptr<KLRAlgebra> engine_;
};

/// Builds H'_n(kappa). `dot_caps` is the saturation schedule; empty means
/// {n k_max, 2 n k_max, 3 n k_max}. Throws Error(NotDominant) or
/// Error(CapExceeded).
CycloAlgebra cyclo_build(const KLRParams& params, const IntVector& kappa, int n,
                         const std::vector<int>& dot_caps = {});

struct BlockDims {
  IntVector content;
  int dim = 0;
  std::map<int, int> graded;  // degree -> dimension; empty when not homogeneous
};

std::vector<BlockDims> cyclo_dims(const CycloAlgebra& algebra);

/// Number of simple modules of the content block beta: the dimension of the
/// centre of the block modulo its trace-form radical. Throws Error(NonSplit)
/// when central idempotents over Q do not account for the whole centre.
int count_simples(const CycloAlgebra& algebra, const IntVector& beta);

/// Associativity, unit, block orthogonality, nilpotency of the dots and
/// soundness of the degree bound.
Report cyclo_invariants(const CycloAlgebra& algebra, std::uint64_t seed = 1);

/// count_simples against |B(kappa)_{kappa - beta}| for all |beta| <= n_max.
Report theorem_t_check(const KLRParams& params, const IntVector& kappa, int n_max,
                       const std::string& cartan_label = "custom");

/// Per-block records {cartan, kappa, n, content, dim, graded_dim, simples, status};
/// blocks whose simple count is NonSplit are marked inconclusive.
Json cyclo_records(const CycloAlgebra& algebra, const std::string& cartan_label);

}  // namespace kmcat
