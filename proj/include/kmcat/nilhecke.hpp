#pragma once

// The nil Hecke algebra NH_n as the free left Pol_n-module on {T_w}.

#include "kmcat/perm.hpp"
#include "kmcat/poly.hpp"

#include <map>
#include <vector>

namespace kmcat {

/// sum_w f_w T_w with polynomial coefficients on the left.
class NHElement {
 public:
  NHElement() = default;
  explicit NHElement(int n) : n_(n) {}

  static NHElement one(int n);
  static NHElement poly(const Poly& f);
  static NHElement T(int n, int i);
  static NHElement T(const Perm& w);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::map<Perm, Poly>& coords() const { return coords_; }
  [[nodiscard]] bool is_zero() const { return coords_.empty(); }
  [[nodiscard]] Poly coeff(const Perm& w) const;

  /// Adds f T_w.
  void add(const Perm& w, const Poly& f);

  NHElement& operator+=(const NHElement& o);
  NHElement& operator-=(const NHElement& o);
  friend NHElement operator+(NHElement a, const NHElement& b) { return a += b; }
  friend NHElement operator-(NHElement a, const NHElement& b) { return a -= b; }
  friend NHElement operator*(Rational c, NHElement a);
  friend bool operator==(const NHElement& a, const NHElement& b) {
    return a.n_ == b.n_ && a.coords_ == b.coords_;
  }

  [[nodiscard]] std::string str() const;

 private:
  int n_ = 0;
  std::map<Perm, Poly> coords_;
};

/// Product in normal form. Throws Error(SizeMismatch).
NHElement nh_mul(const NHElement& a, const NHElement& b);
NHElement operator*(const NHElement& a, const NHElement& b);

/// Action on Pol_n, T_w acting by Demazure operators. Throws Error(SizeMismatch).
Poly nh_act(const NHElement& a, const Poly& f);

/// (-1)^{l(w_n)} X_1^{n-1} ... X_{n-1} T_{w_n}
NHElement pi(int n);

/// Square matrix with Sym_n entries.
using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b);

/// Matrix of f -> a.f in the basis {b_w}, rows and columns in all_perms(n)
/// order. Column u holds the coordinates of a.b_u.
PolyMatrix nh_to_matrix(const NHElement& a);

/// n! pairwise orthogonal idempotents summing to 1, the pullbacks of the
/// diagonal matrix units, ordered like all_perms(n). The first is pi(n).
std::vector<NHElement> decompose_identity(int n);

/// Pairs (A_w, B_w) with A_w B_w = e_w and B_w A_w = pi(n), one per entry of
/// decompose_identity(n).
std::vector<std::pair<NHElement, NHElement>> idempotent_conjugators(int n);

/// Polynomials b^w with d_{w_n}(b_u b^w) = delta_{u,w}, in all_perms(n) order.
std::vector<Poly> dual_basis(int n);

/// Checks (-1)^{l(w_{n+1})} pi_{n+1} f(X_1) X_2^{n-1} ... X_n T_{w_{n+1}} = pi_{n+1}
/// in NH_{n+1} and T_w X_1^m X_2^{n-1} ... X_n T_w = 0 for m < n, where f is
/// monic of degree n with the given coefficients (constant term first).
bool truncation_identity_check(int n, const std::vector<Rational>& f);

}  // namespace kmcat
