#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmcat/cyclo.hpp"
#include "kmcat/error.hpp"

using namespace kmcat;

namespace {

KLRParams named(const char* name) { return KLRParams(validate_gcm(standard_gcm(name))); }

int block_dim(const CycloAlgebra& a, const IntVector& beta) { return static_cast<int>(a.block(beta).size()); }

void require_pass(const Report& r) {
  INFO(r.summary());
  CHECK_FALSE(r.any_fail());
}

}  // namespace

TEST_CASE("one-vertex dimensions") {
  const auto a1 = named("A1");
  CHECK(cyclo_build(a1, {2}, 1).dim() == 2);
  CHECK(cyclo_build(a1, {2}, 3).dim() == 0);
  CHECK(cyclo_build(a1, {3}, 2).dim() == 12);
  CHECK(cyclo_build(a1, {1}, 1).dim() == 1);
  CHECK(cyclo_build(a1, {0}, 1).dim() == 0);
  CHECK(cyclo_build(a1, {5}, 0).dim() == 1);
}

TEST_CASE("graded dimensions of the one-vertex quotient") {
  // k = 2, n = 2 is M_2 over the cohomology of Gr(2, 2) = a point, shifted
  const auto alg = cyclo_build(named("A1"), {2}, 2);
  CHECK(alg.dim() == 4);
  const auto dims = cyclo_dims(alg);
  REQUIRE(dims.size() == 1);
  int total = 0;
  for (const auto& [d, c] : dims.front().graded) total += c;
  CHECK(total == 4);
  CHECK(dims.front().graded.count(-2) == 1);
  CHECK(dims.front().graded.count(2) == 1);
}

TEST_CASE("A2 blocks") {
  const auto alg = cyclo_build(named("A2"), {1, 0}, 1);
  CHECK(block_dim(alg, {1, 0}) == 1);
  CHECK(block_dim(alg, {0, 1}) == 0);
  const auto dims = cyclo_dims(alg);
  CHECK(dims.size() == 2);
  const auto alg2 = cyclo_build(named("A2"), {1, 0}, 2);
  CHECK(count_simples(alg2, {1, 1}) == 1);
  CHECK(count_simples(alg2, {2, 0}) == 0);
}

TEST_CASE("simple counts") {
  const auto a1 = named("A1");
  CHECK(count_simples(cyclo_build(a1, {2}, 1), {1}) == 1);
  CHECK(count_simples(cyclo_build(a1, {2}, 2), {2}) == 1);
  CHECK(count_simples(cyclo_build(a1, {3}, 2), {2}) == 1);
  CHECK(count_simples(cyclo_build(a1, {2}, 3), {3}) == 0);
}

TEST_CASE("invariants") {
  require_pass(cyclo_invariants(cyclo_build(named("A1"), {3}, 2)));
  require_pass(cyclo_invariants(cyclo_build(named("A2"), {1, 1}, 2)));
  require_pass(cyclo_invariants(cyclo_build(named("B2"), {1, 0}, 2)));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(cyclo_build(named("A1"), {-1}, 1), Error);
  CHECK_THROWS_AS(cyclo_build(named("A2"), {1}, 1), Error);
  try {
    (void)cyclo_build(named("A1"), {3}, 2, {1});
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("records") {
  const auto alg = cyclo_build(named("A2"), {1, 1}, 2);
  const Json recs = cyclo_records(alg, "A2");
  REQUIRE(recs.is_array());
  CHECK(recs.size() == 3);
  for (const auto& r : recs) CHECK(r["status"] == "ok");
}

TEST_CASE("inhomogeneous parameters saturate to the homogeneous dimension") {
  const auto c = validate_gcm(std::vector<std::vector<int>>{{2, -3}, {-3, 2}});
  const KLRParams hom(c), inh(c, {}, {{0, 1, 1, 1, Rational(1)}});
  REQUIRE_FALSE(inh.homogeneous());
  const auto a = cyclo_build(hom, {1, 1}, 2);
  const auto b = cyclo_build(inh, {1, 1}, 2);
  CHECK(a.dim() == 10);
  CHECK(b.dim() == 10);
  CHECK(b.diagnostics()["mode"] == "dot-truncation");
  CHECK(count_simples(b, {1, 1}) == count_simples(a, {1, 1}));
  require_pass(cyclo_invariants(b));
}

TEST_CASE("simple counts match the crystal") {
  for (int k = 0; k <= 3; ++k) {
    const Report r = theorem_t_check(named("A1"), {k}, 3, "A1");
    require_pass(r);
    CHECK(r.checks().size() == 4);
  }
  const Report a = theorem_t_check(named("A2"), {1, 0}, 2, "A2");
  require_pass(a);
  const Report b = theorem_t_check(named("A2"), {1, 1}, 2, "A2");
  require_pass(b);
  CHECK(b.exit_code() == 0);
}
