#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmcat/error.hpp"
#include "kmcat/klr.hpp"

using namespace kmcat;

namespace {

KLRParams named(const char* name) { return KLRParams(validate_gcm(standard_gcm(name))); }

Word word(std::initializer_list<int> letters) {
  Word w{};
  std::size_t p = 0;
  for (int l : letters) w[p++] = static_cast<std::int8_t>(l);
  return w;
}

void require_pass(const Report& r) {
  INFO(r.summary());
  CHECK_FALSE(r.any_fail());
}

}  // namespace

TEST_CASE("parameter validation") {
  const auto a2 = validate_gcm(standard_gcm("A2"));
  CHECK_THROWS_AS(KLRParams(a2, {{{0, 1}, Rational(0)}}, {}), Error);
  CHECK_THROWS_AS(KLRParams(a2, {{{0, 0}, Rational(2)}}, {}), Error);
  const auto a11 = validate_gcm(standard_gcm("A1xA1"));
  CHECK_THROWS_AS(KLRParams(a11, {{{0, 1}, Rational(2)}}, {}), Error);
  CHECK_NOTHROW(KLRParams(a11, {{{0, 1}, Rational(2)}, {{1, 0}, Rational(2)}}, {}));
  CHECK_THROWS_AS(KLRParams(a2, {}, {{0, 1, 1, 1, Rational(1)}}), Error);
  const auto aff = validate_gcm(standard_gcm("affA1"));
  const KLRParams p(aff, {}, {{0, 1, 1, 1, Rational(1)}});
  CHECK(p.s(1, 0, 1, 1) == Rational(1));
  CHECK(p.homogeneous());
  const KLRParams inhom(validate_gcm(std::vector<std::vector<int>>{{2, -3}, {-3, 2}}), {},
                        {{0, 1, 1, 1, Rational(1)}});
  CHECK_FALSE(inhom.homogeneous());
}

TEST_CASE("small products") {
  const KLRAlgebra A(named("A1xA1"), 2);
  CHECK(A.mul(A.e(word({0, 1})), A.e(word({1, 0}))).is_zero());
  CHECK(A.mul(A.psi(1, word({1, 0})), A.psi(1, word({0, 1}))) == A.e(word({0, 1})));
  const KLRAlgebra one(named("A1"), 2);
  CHECK(one.mul(one.psi(1), one.psi(1)).is_zero());
  const KLRAlgebra a2(named("A2"), 2);
  // psi_1^2 e(12) = x_1 + x_2 for t = 1
  CHECK(a2.mul(a2.psi(1), a2.psi(1, word({0, 1}))) == a2.x(1, word({0, 1})) + a2.x(2, word({0, 1})));
}

TEST_CASE("polynomial representation examples") {
  const KLRAlgebra A(named("A1xA1"), 2);
  const Poly one(2, Rational(1));
  const PolyVector v{{word({0, 1}), one}};
  CHECK(A.rep(A.e(word({0, 1})), v) == v);
  CHECK(A.rep(A.e(word({1, 0})), v).empty());
  CHECK(A.rep_psi(1, A.rep_psi(1, v)) == v);
}

TEST_CASE("degrees") {
  const KLRAlgebra A(named("A2"), 1);
  CHECK(klr_degree(A, A.e(word({0}))) == 0);
  CHECK(klr_degree(A, A.x(1, word({0}))) == 2);
  const KLRAlgebra one(named("A1"), 2);
  CHECK(klr_degree(one, one.psi(1, word({0, 0}))) == -2);
  CHECK(klr_degree(one, one.e(word({0, 0})) + one.x(1, word({0, 0}))) == std::nullopt);
  const KLRAlgebra b2(named("B2"), 2);
  CHECK(klr_degree(b2, b2.psi(1, word({0, 1}))) == 2);
  CHECK(klr_degree(b2, b2.x(2, word({0, 1}))) == 4);
  const KLRParams inhom(validate_gcm(std::vector<std::vector<int>>{{2, -3}, {-3, 2}}), {},
                        {{0, 1, 1, 1, Rational(1)}});
  CHECK_THROWS_AS(klr_degree(KLRAlgebra(inhom, 1), KLRElement(1)), Error);
}

TEST_CASE("relation suites") {
  require_pass(klr_relation_suite(named("A2"), 2, 1, 50));
  require_pass(klr_relation_suite(named("A1"), 3, 2, 50));
  require_pass(klr_relation_suite(named("B2"), 3, 3, 30));
  const auto aff = validate_gcm(standard_gcm("affA1"));
  require_pass(klr_relation_suite(KLRParams(aff, {}, {{0, 1, 1, 1, Rational(1)}}), 3, 4, 30));
  const KLRParams inhom(validate_gcm(std::vector<std::vector<int>>{{2, -3}, {-3, 2}}), {{{0, 1}, Rational(2)}},
                        {{0, 1, 1, 1, Rational(1)}, {0, 1, 2, 1, Rational(-1)}});
  require_pass(klr_relation_suite(inhom, 3, 5, 30));
  require_pass(klr_nilhecke_comparison(3, 6, 30));
}
