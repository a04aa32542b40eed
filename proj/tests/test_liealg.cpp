#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmcat/error.hpp"
#include "kmcat/liealg.hpp"

using namespace kmcat;

namespace {

CartanDatum named(const char* name) { return validate_gcm(standard_gcm(name)); }

void require_pass(const Report& r) {
  INFO(r.summary());
  CHECK_FALSE(r.any_fail());
}

const Check* find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks())
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("sl2 modules") {
  const auto a1 = named("A1");
  const IntegrableModule m = build_highest_weight(a1, {2}, 3);
  CHECK(m.complete());
  CHECK(m.dims() == std::map<IntVector, int>{{{0}, 1}, {{1}, 1}, {{2}, 1}});
  // E F v = <h, kappa> v on the highest vector
  const MatrixQ ef = *m.E(0, {1}) * *m.F(0, {0});
  CHECK(ef(0, 0) == Rational(2));
  require_pass(module_suite(a1, {2}, 3));
  const IntegrableModule cut = build_highest_weight(a1, {4}, 2);
  CHECK_FALSE(cut.complete());
  CHECK_FALSE(cut.F(0, {2}).has_value());
  CHECK(build_highest_weight(a1, {0}, 2).total_dim() == 1);
  CHECK_THROWS_AS(build_highest_weight(a1, {-1}, 2), Error);
}

TEST_CASE("rank two and three") {
  for (const char* name : {"A2", "B2", "G2", "A1xA1"})
    for (IntVector k : {IntVector{1, 0}, IntVector{0, 1}, IntVector{1, 1}}) {
      INFO(name);
      const auto d = named(name);
      const IntegrableModule m = build_highest_weight(d, k, 24);
      CHECK(m.complete());
      CHECK(mpz_class(m.total_dim()) == weyl_dim(d, k));
      require_pass(module_suite(d, k, 24));
    }
  const auto a2 = named("A2");
  const IntegrableModule adj = build_highest_weight(a2, {1, 1}, 4);
  CHECK(adj.dim({1, 1}) == 2);
  const Report serre = verify_serre(adj);
  require_pass(serre);
  CHECK(find(serre, "serre_E")->status == Status::Pass);
  Eigen::MatrixXi a3(3, 3);
  a3 << 2, -1, 0, -1, 2, -1, 0, -1, 2;
  require_pass(module_suite(validate_gcm(a3), {1, 0, 1}, 8));
}

TEST_CASE("affine basic representation") {
  const auto aff = named("affA1");
  const IntegrableModule m = build_highest_weight(aff, {1, 0}, 5);
  CHECK_FALSE(m.complete());
  CHECK(m.dim({2, 1}) == 1);
  CHECK(m.dim({2, 2}) == 2);
  const Report r = module_suite(aff, {1, 0}, 5);
  require_pass(r);
  CHECK(find(r, "serre_E")->status == Status::Pass);
  CHECK(find(r, "commutator")->status == Status::Pass);
  CHECK(find(r, "multiplicities_vs_crystal")->status == Status::Pass);
}

TEST_CASE("lowest weight modules") {
  const auto a2 = named("A2");
  const IntegrableModule lo = build_lowest_weight(a2, {0, -1}, 4);
  CHECK(lo.complete());
  CHECK(lo.total_dim() == 3);
  CHECK(lo.dim({0, -1}) == 1);
  require_pass(module_construction_checks(lo));
  require_pass(verify_commutators(lo));
  require_pass(verify_serre(lo));
  require_pass(divided_power_span_check(lo));
  require_pass(verify_integrability(lo));
}

TEST_CASE("tensor characters") {
  const auto a1 = named("A1");
  const Report s = tensor_character_check(a1, {-1}, {1}, 4);
  require_pass(s);
  CHECK(find(s, "weyl_decomposition")->detail == "3 + 1");

  const auto a2 = named("A2");
  const Report adj = tensor_character_check(a2, {-1, 0}, {1, 0}, 6);
  require_pass(adj);
  CHECK(find(adj, "weyl_decomposition")->detail == "8 + 1");
  const Report sym = tensor_character_check(a2, {0, -1}, {1, 0}, 6);
  require_pass(sym);
  CHECK(find(sym, "weyl_decomposition")->detail == "6 + 3");

  const auto aff = named("affA1");
  const Report mixed = tensor_character_check(aff, {0, 0}, {1, 0}, 4);
  require_pass(mixed);
  CHECK_THROWS_AS(tensor_character_check(aff, {-1, 0}, {1, 0}, 3), Error);
}

TEST_CASE("weyl decomposition rejects virtual characters") {
  const auto a1 = named("A1");
  Character ch;
  ch.anchor = {1};
  ch.mult[{0}] = 1;
  CHECK_FALSE(weyl_decompose(a1, ch).has_value());
  ch.mult[{1}] = 1;
  const auto d = weyl_decompose(a1, ch);
  REQUIRE(d.has_value());
  CHECK(d->size() == 1);
}
