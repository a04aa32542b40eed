#pragma once

// Exact rational scalar backed by GMP, usable as an Eigen scalar type.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace kmcat {

class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}                      // NOLINT(implicit)
  Rational(long n) : v_(n) {}                     // NOLINT(implicit)
  Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT(implicit)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }
  Rational operator+() const { return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
  [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }
  [[nodiscard]] const mpq_class& gmp() const { return v_; }

  /// Integer value; caller guarantees is_integer() and that it fits.
  [[nodiscard]] long to_long() const { return v_.get_num().get_si(); }
  [[nodiscard]] double to_double() const { return v_.get_d(); }

  /// "p" for integers, "p/q" otherwise (lowest terms, sign on numerator).
  [[nodiscard]] std::string str() const { return v_.get_str(); }

  [[nodiscard]] std::size_t hash() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class v_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

}  // namespace kmcat

template <>
struct std::hash<kmcat::Rational> {
  std::size_t operator()(const kmcat::Rational& r) const noexcept { return r.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<kmcat::Rational> : GenericNumTraits<kmcat::Rational> {
  using Real = kmcat::Rational;
  using NonInteger = kmcat::Rational;
  using Nested = kmcat::Rational;
  using Literal = kmcat::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
