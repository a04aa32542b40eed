#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmcat/nilhecke.hpp"
#include "kmcat/random.hpp"

using namespace kmcat;

namespace {

Poly X(int n, int i) { return Poly::variable(n, i); }
NHElement P(const Poly& f) { return NHElement::poly(f); }

NHElement random_element(SplitMix64& rng, int n) {
  const auto perms = all_perms(n);
  NHElement a(n);
  for (int t = 0; t < 3; ++t) {
    Poly f(n);
    for (int s = 0; s < 2; ++s) {
      Mono m;
      for (int i = 0; i < n; ++i) m[i] = static_cast<std::uint8_t>(rng.uniform(0, 2));
      f.add_term(m, Rational(rng.uniform(-2, 2)));
    }
    a.add(perms[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(perms.size()) - 1))], f);
  }
  return a;
}

}  // namespace

TEST_CASE("multiplication examples") {
  const auto T1 = NHElement::T(2, 1);
  CHECK((T1 * T1).is_zero());
  CHECK(T1 * P(X(2, 1)) == P(X(2, 2)) * T1 - NHElement::one(2));
  const NHElement p = P(-X(2, 1)) * T1;
  CHECK(p * p == p);
  CHECK(pi(2) == p);
  CHECK(pi(1) == NHElement::one(1));
}

TEST_CASE("braid relation for T") {
  const auto T1 = NHElement::T(3, 1), T2 = NHElement::T(3, 2);
  CHECK(T1 * T2 * T1 == T2 * T1 * T2);
  CHECK(T1 * T2 * T1 == NHElement::T(Perm::longest(3)));
}

TEST_CASE("action") {
  const Poly f = X(2, 1) * X(2, 1) + X(2, 2);
  CHECK(nh_act(NHElement::one(2), f) == f);
  CHECK(nh_act(NHElement::T(2, 1), X(2, 1)) == Poly(2, Rational(-1)));
  const NHElement lhs = NHElement::T(2, 1) * P(X(2, 1));
  const NHElement rhs = P(X(2, 2)) * NHElement::T(2, 1) - NHElement::one(2);
  for (const Poly& g : {X(2, 1), f, X(2, 2) * X(2, 2) * X(2, 1)}) CHECK(nh_act(lhs, g) == nh_act(rhs, g));
  CHECK(nh_act(pi(2), X(2, 1)) == X(2, 1));
  CHECK(nh_act(pi(2), Poly(2, Rational(1))).is_zero());
}

TEST_CASE("action compatibility and associativity, n = 3") {
  SplitMix64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_element(rng, 3), b = random_element(rng, 3), c = random_element(rng, 3);
    const Poly f = X(3, 1) * X(3, 1) * X(3, 3) - X(3, 2);
    CHECK(nh_act(a * b, f) == nh_act(a, nh_act(b, f)));
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("matrix representation") {
  const auto m1 = nh_to_matrix(NHElement::one(2));
  CHECK(m1[0][0] == Poly(2, Rational(1)));
  CHECK(m1[1][1] == Poly(2, Rational(1)));
  CHECK(m1[0][1].is_zero());
  CHECK(m1[1][0].is_zero());
  const auto t = nh_to_matrix(NHElement::T(2, 1));
  CHECK(t[1][0] == Poly(2, Rational(-1)));
  CHECK(t[0][0].is_zero());
  CHECK(t[0][1].is_zero());
  CHECK(t[1][1].is_zero());
  for (int n = 1; n <= 3; ++n) {
    const auto p = nh_to_matrix(pi(n));
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        CHECK(p[i][j] == Poly(n, Rational(i == 0 && j == 0 ? 1 : 0)));
  }
  SplitMix64 rng(4);
  for (int t = 0; t < 5; ++t) {
    const auto a = random_element(rng, 3), b = random_element(rng, 3);
    CHECK(nh_to_matrix(a * b) == poly_matmul(nh_to_matrix(a), nh_to_matrix(b)));
  }
}

TEST_CASE("decomposition of the identity") {
  CHECK(decompose_identity(1) == std::vector<NHElement>{NHElement::one(1)});
  for (int n = 2; n <= 3; ++n) {
    const auto e = decompose_identity(n);
    CHECK(e.size() == (n == 2 ? 2U : 6U));
    CHECK(e.front() == pi(n));
    NHElement sum(n);
    for (std::size_t i = 0; i < e.size(); ++i) {
      sum += e[i];
      for (std::size_t j = 0; j < e.size(); ++j) {
        const auto prod = e[i] * e[j];
        if (i == j) CHECK(prod == e[i]);
        else CHECK(prod.is_zero());
      }
    }
    CHECK(sum == NHElement::one(n));
    for (const auto& [a, b] : idempotent_conjugators(n)) {
      CHECK(b * a == pi(n));
    }
  }
}

TEST_CASE("truncation identity") {
  CHECK(truncation_identity_check(1, {Rational(0), Rational(1)}));
  CHECK(truncation_identity_check(1, {Rational(5), Rational(1)}));
  CHECK(truncation_identity_check(2, {Rational(0), Rational(0), Rational(1)}));
  CHECK(truncation_identity_check(2, {Rational(-3), Rational(7, 2), Rational(1)}));
  CHECK(truncation_identity_check(3, {Rational(1), Rational(0), Rational(2), Rational(1)}));
  CHECK_THROWS(truncation_identity_check(2, {Rational(1), Rational(2)}));
}
