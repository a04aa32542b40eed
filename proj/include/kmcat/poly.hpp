#pragma once

// Multivariate polynomials over Q, the symmetric group action, Demazure
// operators, symmetric functions, and the b_w basis of Pol_n over Sym_n.

#include "kmcat/perm.hpp"
#include "kmcat/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kmcat {

inline constexpr int kMaxVars = 6;

/// Exponent vector. Unused trailing slots stay zero.
struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};

  [[nodiscard]] int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  std::uint8_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
  std::uint8_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Mono&, const Mono&) = default;
  friend Mono operator+(Mono a, const Mono& b) {
    for (int i = 0; i < kMaxVars; ++i) a[i] = static_cast<std::uint8_t>(a[i] + b[i]);
    return a;
  }
};

/// Graded lexicographic order: total degree first, then X_1 exponent, X_2, ...
struct GrLex {
  bool operator()(const Mono& a, const Mono& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e > b.e;
  }
};

class Poly {
 public:
  using Terms = std::map<Mono, Rational, GrLex>;

  Poly() = default;
  explicit Poly(int nvars);
  Poly(int nvars, const Rational& constant);

  static Poly variable(int nvars, int i);  // X_i, 1-based
  static Poly monomial(int nvars, const Mono& m, const Rational& c = Rational(1));

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const;
  [[nodiscard]] bool is_homogeneous() const;
  [[nodiscard]] Rational coeff(const Mono& m) const;
  [[nodiscard]] Poly homogeneous_part(int d) const;

  void add_term(const Mono& m, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  [[nodiscard]] Poly pow(unsigned e) const;
  /// Evaluates at a rational point (one value per variable).
  [[nodiscard]] Rational evaluate(const std::vector<Rational>& point) const;
  /// Substitutes X_i -> values[i-1] for polynomial values.
  [[nodiscard]] Poly substitute(const std::vector<Poly>& values) const;
  [[nodiscard]] std::string str() const;

 private:
  int nvars_ = 0;
  Terms terms_;
};

/// Polynomial action X_j -> X_{w(j)}, so act(v w) = act(v) o act(w).
Poly act_perm(const Perm& w, const Poly& f);
/// s_i acting on f.
Poly act_simple(int i, const Poly& f);
/// (s_i(f) - f) / (X_i - X_{i+1}), computed monomial by monomial.
Poly demazure(int i, const Poly& f);
/// Demazure operators along the canonical reduced word of w (rightmost first).
Poly demazure_word(const Perm& w, const Poly& f);

bool is_symmetric(const Poly& f);

Poly elementary_symmetric(int nvars, int r);
Poly complete_symmetric(int nvars, int r);
/// f(X_var) for a univariate f given by coefficients c_0, c_1, ...
Poly univariate(int nvars, int var, const std::vector<Rational>& coeffs);

/// X_1^{n-1} X_2^{n-2} ... X_{n-1}
Poly staircase(int n);
/// b_w = (-1)^{l(w)} T_w . staircase(n)
Poly schubert_b(const Perm& w, int n);

/// Coefficients c_w in Sym_n with f = sum_w c_w b_w, found by solving the
/// degreewise linear system in the monomial basis. Zero coefficients are
/// omitted. Throws Error(InternalInconsistency) if the solve fails.
std::map<Perm, Poly> sym_decompose(const Poly& f, int n);

/// Monomial symmetric polynomials of degree d in n variables (partitions of d
/// with at most n parts, in reverse lexicographic order).
std::vector<Poly> monomial_symmetric_basis(int n, int d);

}  // namespace kmcat
