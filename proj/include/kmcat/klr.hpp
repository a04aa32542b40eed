#pragma once

// Quiver Hecke algebras H_n on the basis psi_w x^a e(i).
//
// Strands are numbered 1..n from right to left and products stack the left
// factor on top. Letter p of a word is the colour of strand p, so e(i) has
// i_1 on the rightmost strand. psi_w e(i) = e(w.i) psi_w with (w.i)_{w(p)} = i_p.

#include "kmcat/cartan.hpp"
#include "kmcat/perm.hpp"
#include "kmcat/poly.hpp"
#include "kmcat/report.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace kmcat {

/// Parameters t_ij and s_ij^{pq} of the Q-polynomials.
class KLRParams {
 public:
  struct SEntry {
    int i, j, p, q;
    Rational value;
  };

  KLRParams() = default;
  /// Unlisted t default to 1. Listed s_ij^{pq} also set s_ji^{qp}.
  /// Throws Error(ParamMismatch) on violated constraints.
  KLRParams(CartanDatum datum, const std::map<std::pair<int, int>, Rational>& t,
            const std::vector<SEntry>& s);
  explicit KLRParams(CartanDatum datum) : KLRParams(std::move(datum), {}, {}) {}

  [[nodiscard]] const CartanDatum& datum() const { return datum_; }
  [[nodiscard]] int rank() const { return datum_.rank(); }
  [[nodiscard]] const Rational& t(int i, int j) const;
  [[nodiscard]] Rational s(int i, int j, int p, int q) const;
  [[nodiscard]] const std::vector<SEntry>& s_entries() const { return s_; }
  [[nodiscard]] bool homogeneous() const { return homogeneous_; }

  /// Terms c u^a v^b of Q_ij(u, v).
  struct QTerm {
    Rational c;
    int u, v;
  };
  [[nodiscard]] std::vector<QTerm> Q(int i, int j) const;

  friend bool operator==(const KLRParams& a, const KLRParams& b);

 private:
  CartanDatum datum_;
  std::map<std::pair<int, int>, Rational> t_;
  std::vector<SEntry> s_;  // nonzero entries, both orientations, sorted
  bool homogeneous_ = true;
};

using Word = std::array<std::int8_t, kMaxVars>;

std::string word_str(const Word& w, int n);
/// Colour multiplicities of the first n letters.
IntVector content(const Word& w, int n, int rank);

/// Basis element psi_w x^dots e(word); perm indexes SymmetricGroup order.
struct KLRKey {
  int perm = 0;
  Mono dots;
  Word word{};

  friend bool operator==(const KLRKey&, const KLRKey&) = default;
  friend bool operator<(const KLRKey& a, const KLRKey& b) {
    if (a.perm != b.perm) return a.perm < b.perm;
    if (a.word != b.word) return a.word < b.word;
    return a.dots.e < b.dots.e;
  }
};

class KLRElement {
 public:
  using Terms = std::map<KLRKey, Rational>;

  KLRElement() = default;
  explicit KLRElement(int n) : n_(n) {}

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add(const KLRKey& k, const Rational& c);
  void add(const KLRElement& o, const Rational& c);
  KLRElement& operator+=(const KLRElement& o);
  KLRElement& operator-=(const KLRElement& o);
  friend KLRElement operator+(KLRElement a, const KLRElement& b) { return a += b; }
  friend KLRElement operator-(KLRElement a, const KLRElement& b) { return a -= b; }
  friend KLRElement operator*(const Rational& c, const KLRElement& a);
  friend bool operator==(const KLRElement& a, const KLRElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_ = 0;
  Terms terms_;
};

/// Polynomial representation vectors: one polynomial per colour word.
using PolyVector = std::map<Word, Poly>;

/// Rewriting engine for H_n. Left multiplications by generators are memoised,
/// so an engine must not be shared between threads.
class KLRAlgebra {
 public:
  KLRAlgebra(KLRParams params, int n);

  [[nodiscard]] const KLRParams& params() const { return params_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const SymmetricGroup& group() const { return group_; }
  /// All of I^n in lexicographic order.
  [[nodiscard]] const std::vector<Word>& words() const { return words_; }

  [[nodiscard]] KLRElement basis(int perm, const Mono& dots, const Word& word) const;
  [[nodiscard]] KLRElement e(const Word& word) const;
  [[nodiscard]] KLRElement one() const;
  /// x_k e(word), psi_k e(word)
  [[nodiscard]] KLRElement x(int k, const Word& word) const;
  [[nodiscard]] KLRElement psi(int k, const Word& word) const;
  /// x_k and psi_k summed over all words.
  [[nodiscard]] KLRElement x(int k) const;
  [[nodiscard]] KLRElement psi(int k) const;

  [[nodiscard]] Word top_word(const KLRKey& key) const;
  [[nodiscard]] int degree(const KLRKey& key) const;

  [[nodiscard]] KLRElement mul(const KLRElement& a, const KLRElement& b) const;
  [[nodiscard]] KLRElement left_e(const Word& word, const KLRElement& a) const;
  [[nodiscard]] KLRElement left_x(int k, const KLRElement& a) const;
  [[nodiscard]] KLRElement left_psi(int k, const KLRElement& a) const;
  /// Product of a word in the generators: letters k > 0 are psi_k, k < 0 are
  /// x_{-k}, applied to `a` from the last letter to the first.
  [[nodiscard]] KLRElement left_word(const std::vector<int>& letters, const KLRElement& a) const;

  /// Polynomial representation: action of a on v.
  [[nodiscard]] PolyVector rep(const KLRElement& a, const PolyVector& v) const;
  [[nodiscard]] PolyVector rep_x(int k, const PolyVector& v) const;
  [[nodiscard]] PolyVector rep_psi(int k, const PolyVector& v) const;

  [[nodiscard]] std::string str(const KLRElement& a) const;

 private:
  const KLRElement& left_x_basis(int k, const KLRKey& key) const;
  const KLRElement& left_psi_basis(int k, const KLRKey& key) const;
  KLRElement psi_up(int k, const KLRKey& key) const;
  KLRElement psi_down(int k, const KLRKey& key) const;
  /// psi_{letters} x^dots e(word) for an arbitrary word in the psi's.
  KLRElement evaluate_word(const std::vector<int>& letters, const Mono& dots, const Word& word) const;
  /// Braid-relation correction C e(u) for the triple psi's at j, j+1, j+2.
  KLRElement braid_correction(int j, const Word& u) const;
  /// Follows a braid path starting from psi_{from} x^dots e(word), returning
  /// the signed corrections accumulated so that
  /// psi_{from} x^a e(i) = psi_{to} x^a e(i) + corrections.
  KLRElement path_corrections(std::vector<int> from, const std::vector<int>& to, const Mono& dots,
                              const Word& word) const;

  KLRParams params_;
  int n_;
  SymmetricGroup group_;
  std::vector<Word> words_;
  mutable std::map<std::pair<int, KLRKey>, KLRElement> x_cache_, psi_cache_;
};

KLRElement klr_mul(const KLRAlgebra& algebra, const KLRElement& a, const KLRElement& b);
PolyVector klr_poly_rep(const KLRAlgebra& algebra, const KLRElement& a, const PolyVector& v);

/// Common degree of all terms, nullopt if the terms differ in degree (the
/// zero element has degree 0). Throws Error(ParamsNotHomogeneous).
std::optional<int> klr_degree(const KLRAlgebra& algebra, const KLRElement& a);

/// Defining relations, the polynomial representation oracle, associativity,
/// and homogeneity, on all generators and on random elements.
Report klr_relation_suite(const KLRParams& params, int n, std::uint64_t seed, int random_pairs = 200);

/// Structure constants of the one-vertex algebra against the nil Hecke algebra.
Report klr_nilhecke_comparison(int n, std::uint64_t seed, int random_pairs = 100);

}  // namespace kmcat
