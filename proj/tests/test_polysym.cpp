#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmcat/poly.hpp"

#include <random>

using namespace kmcat;

namespace {

Poly X(int n, int i) { return Poly::variable(n, i); }

Poly random_poly(std::mt19937& gen, int n, int max_deg, int terms) {
  std::uniform_int_distribution<int> e(0, max_deg), c(-3, 3);
  Poly p(n);
  for (int t = 0; t < terms; ++t) {
    Mono m;
    for (int i = 0; i < n; ++i) m[i] = static_cast<std::uint8_t>(e(gen));
    p.add_term(m, Rational(c(gen)));
  }
  return p;
}

}  // namespace

TEST_CASE("permutations") {
  const Perm w({2, 3, 1});
  CHECK(w.length() == 2);
  CHECK(Perm::from_word(3, w.reduced_word()) == w);
  CHECK((w * w.inverse()).is_identity());
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_perms(n);
    CHECK(perms.front().is_identity());
    CHECK(perms.back() == Perm::longest(n));
    for (const Perm& p : perms) {
      const auto word = p.reduced_word();
      CHECK(static_cast<int>(word.size()) == p.length());
      CHECK(Perm::from_word(n, word) == p);
    }
  }
  CHECK(Perm::longest(3).reduced_word() == std::vector<int>{1, 2, 1});
}

TEST_CASE("braid paths connect reduced words") {
  for (const Perm& w : all_perms(4)) {
    const auto target = w.reduced_word();
    std::vector<int> other = target;
    std::reverse(other.begin(), other.end());
    std::vector<int> rev_word;
    for (int r : w.inverse().reduced_word()) rev_word.push_back(r);
    std::reverse(rev_word.begin(), rev_word.end());
    auto path = braid_path(rev_word, target);
    for (const auto& m : path) apply_move(rev_word, m);
    CHECK(rev_word == target);
  }
}

TEST_CASE("Demazure operator examples") {
  CHECK(demazure(1, Poly(2, Rational(1))).is_zero());
  CHECK(demazure(1, X(2, 1)) == Poly(2, Rational(-1)));
  CHECK(demazure(1, X(2, 1) * X(2, 2)).is_zero());
  CHECK(demazure(1, X(2, 2)) == Poly(2, Rational(1)));
}

TEST_CASE("Demazure operator properties") {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    const Poly f = random_poly(gen, n, 3, 5), g = random_poly(gen, n, 3, 4);
    for (int i = 1; i < n; ++i) {
      const Poly df = demazure(i, f);
      CHECK(demazure(i, df).is_zero());
      CHECK(demazure(i, f * g) == df * g + act_simple(i, f) * demazure(i, g));
      CHECK(df.is_zero() == (act_simple(i, f) == f));
      // the defining quotient
      CHECK(df * (X(n, i) - X(n, i + 1)) == act_simple(i, f) - f);
      CHECK(df.degree() <= f.degree() - 1);
      const Poly top = f.homogeneous_part(f.degree());
      const Poly dtop = demazure(i, top);
      if (!dtop.is_zero()) CHECK((dtop.is_homogeneous() && dtop.degree() == top.degree() - 1));
    }
  }
}

TEST_CASE("permutation action") {
  const Poly x3 = X(3, 3);
  CHECK(act_perm(Perm::identity(3), x3) == x3);
  CHECK(act_perm(Perm::simple(2, 1), X(2, 1)) == X(2, 2));
  const Perm s1 = Perm::simple(3, 1), s2 = Perm::simple(3, 2);
  CHECK(act_perm(s1 * s2, x3) == act_perm(s1, act_perm(s2, x3)));
  CHECK(act_perm(s1 * s2, x3) == X(3, 1));
  std::mt19937 gen(8);
  const auto perms = all_perms(4);
  for (int t = 0; t < 50; ++t) {
    const Perm& v = perms[gen() % perms.size()];
    const Perm& w = perms[gen() % perms.size()];
    const Poly f = random_poly(gen, 4, 2, 4);
    CHECK(act_perm(v * w, f) == act_perm(v, act_perm(w, f)));
  }
}

TEST_CASE("Newton identity for elementary and complete symmetric functions") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m) {
      Poly sum(n);
      for (int r = 0; r <= m; ++r) {
        Poly t = elementary_symmetric(n, r) * complete_symmetric(n, m - r);
        if (r % 2) t = -t;
        sum += t;
      }
      CHECK(sum.is_zero());
    }
  CHECK(is_symmetric(elementary_symmetric(4, 2)));
  CHECK(is_symmetric(complete_symmetric(3, 3)));
  CHECK(complete_symmetric(3, 2).terms().size() == 6);
}

TEST_CASE("b_w basis") {
  CHECK(schubert_b(Perm::identity(1), 1) == Poly(1, Rational(1)));
  CHECK(schubert_b(Perm::simple(2, 1), 2) == Poly(2, Rational(1)));
  CHECK(schubert_b(Perm::identity(2), 2) == X(2, 1));
  for (int n = 1; n <= 4; ++n) CHECK(schubert_b(Perm::longest(n), n) == Poly(n, Rational(1)));
}

TEST_CASE("sym_decompose examples") {
  const auto one = sym_decompose(Poly(2, Rational(1)), 2);
  REQUIRE(one.size() == 1);
  CHECK(one.at(Perm::simple(2, 1)) == Poly(2, Rational(1)));
  const auto x1 = sym_decompose(X(2, 1), 2);
  REQUIRE(x1.size() == 1);
  CHECK(x1.at(Perm::identity(2)) == Poly(2, Rational(1)));
  const auto x2 = sym_decompose(X(2, 2), 2);
  REQUIRE(x2.size() == 2);
  CHECK(x2.at(Perm::identity(2)) == Poly(2, Rational(-1)));
  CHECK(x2.at(Perm::simple(2, 1)) == X(2, 1) + X(2, 2));
}

TEST_CASE("sym_decompose round trip") {
  std::mt19937 gen(17);
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 20; ++t) {
      const Poly f = random_poly(gen, n, 3, 6);
      Poly back(n);
      for (const auto& [w, c] : sym_decompose(f, n)) {
        CHECK(is_symmetric(c));
        back += c * schubert_b(w, n);
      }
      CHECK(back == f);
    }
}

TEST_CASE("formatting") {
  CHECK((X(2, 1) * X(2, 1) - X(2, 2) * Rational(3, 2) + Poly(2, Rational(1))).str() ==
        "X1^2 - 3/2*X2 + 1");
  CHECK(Poly(3).str() == "0");
}
