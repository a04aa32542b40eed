#pragma once

// Normal crystals: explicit coloured graphs with cached epsilon/phi, the
// Littelmann path model of B(kappa), tensor products, characters and DOT export.

#include "kmcat/cartan.hpp"
#include "kmcat/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kmcat {

class Crystal {
 public:
  struct Element {
    Weight wt;
    std::vector<int> f, e;      // target index or -1
    std::vector<int> eps, phi;  // cached string data
    bool frontier = false;      // i-strings may continue past the truncation
  };

  Crystal() = default;
  explicit Crystal(CartanDatum datum) : datum_(std::move(datum)) {}

  [[nodiscard]] const CartanDatum& datum() const { return datum_; }
  [[nodiscard]] int rank() const { return datum_.rank(); }
  [[nodiscard]] int size() const { return static_cast<int>(elements_.size()); }
  [[nodiscard]] const Element& element(int b) const { return elements_[static_cast<std::size_t>(b)]; }
  [[nodiscard]] const Weight& wt(int b) const { return element(b).wt; }
  [[nodiscard]] int f(int i, int b) const { return element(b).f[static_cast<std::size_t>(i)]; }
  [[nodiscard]] int e(int i, int b) const { return element(b).e[static_cast<std::size_t>(i)]; }
  [[nodiscard]] int eps(int i, int b) const { return element(b).eps[static_cast<std::size_t>(i)]; }
  [[nodiscard]] int phi(int i, int b) const { return element(b).phi[static_cast<std::size_t>(i)]; }
  [[nodiscard]] bool frontier(int b) const { return element(b).frontier; }

  /// Depth bound of a truncated crystal; nullopt when complete.
  [[nodiscard]] const std::optional<int>& truncation() const { return truncation_; }
  /// A weight space is complete when it lies within the truncation depth.
  [[nodiscard]] bool complete_weight(const IntVector& offset) const;

  int add(Weight wt);
  /// Sets f_i(b) = c and e_i(c) = b.
  void link(int i, int b, int c);
  void set_f(int i, int b, int c) { elements_[static_cast<std::size_t>(b)].f[static_cast<std::size_t>(i)] = c; }
  void set_e(int i, int b, int c) { elements_[static_cast<std::size_t>(b)].e[static_cast<std::size_t>(i)] = c; }
  void set_strings(int i, int b, int eps, int phi);
  void set_frontier(int b, bool v) { elements_[static_cast<std::size_t>(b)].frontier = v; }
  void set_truncation(std::optional<int> depth) { truncation_ = depth; }
  /// Fills eps/phi by walking the strings; frontier phi stays as set.
  void recompute_strings();

 private:
  CartanDatum datum_;
  std::vector<Element> elements_;
  std::optional<int> truncation_;
};

/// (C1)-(C4) and the string arithmetic over non-frontier elements.
Report verify_normal_axioms(const Crystal& c);

/// B(kappa) from Littelmann paths starting at the straight line to kappa.
/// In finite type the closure is complete and `depth` is ignored; otherwise
/// elements at depth `depth` form the frontier. Throws Error(NotDominant).
Crystal highest_weight_crystal(const CartanDatum& datum, const IntVector& kappa, int depth = 0);

/// B'(kappa') for antidominant kappa', by mirroring B(-kappa').
Crystal lowest_weight_crystal(const CartanDatum& datum, const IntVector& kappa_prime, int depth = 0);

/// Kashiwara tensor product: f_i acts on the left factor when
/// phi_i(b1) > eps_i(b2), e_i acts on the left factor when phi_i(b1) >= eps_i(b2).
/// Throws Error(DatumMismatch).
Crystal tensor(const Crystal& c1, const Crystal& c2);

/// Weight multiplicities keyed by offsets from the common anchor.
struct Character {
  IntVector anchor;
  std::map<IntVector, long> mult;

  friend bool operator==(const Character&, const Character&) = default;
};

/// Throws Error(AnchorMismatch) if elements have different anchors.
Character character(const Crystal& c);
/// Pointwise product of characters (convolution of offsets, sum of anchors).
Character convolve(const Character& a, const Character& b);
Json character_json(const Character& ch, const Crystal* completeness = nullptr);

/// Connected components of the coloured graph, as sorted element lists,
/// ordered by smallest element.
std::vector<std::vector<int>> components(const Crystal& c);

/// Deterministic DOT text: nodes in index order, edges b -> f_i(b) by (b, i).
std::string export_dot(const Crystal& c);

/// Suite for a generated B(kappa): axioms, Weyl dimension in finite type, and
/// the highest element.
Report crystal_suite(const CartanDatum& datum, const IntVector& kappa, int depth = 0);

}  // namespace kmcat
