#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmcat/crystal.hpp"
#include "kmcat/error.hpp"

using namespace kmcat;

namespace {

CartanDatum named(const char* name) { return validate_gcm(standard_gcm(name)); }

void require_pass(const Report& r) {
  INFO(r.summary());
  CHECK_FALSE(r.any_fail());
}

std::vector<std::size_t> sizes(const Crystal& c) {
  std::vector<std::size_t> out;
  for (const auto& comp : components(c)) out.push_back(comp.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

Crystal sl2_string(int k) {
  const auto a1 = named("A1");
  Crystal c(a1);
  for (int j = 0; j <= k; ++j) c.add(Weight{{k}, {j}});
  for (int j = 0; j < k; ++j) c.link(0, j, j + 1);
  c.recompute_strings();
  return c;
}

}  // namespace

TEST_CASE("axioms on hand-built crystals") {
  Crystal trivial(named("A2"));
  trivial.add(anchored({0, 0}));
  require_pass(verify_normal_axioms(trivial));

  const Crystal s = sl2_string(2);
  require_pass(verify_normal_axioms(s));
  CHECK(s.eps(0, 0) == 0);
  CHECK(s.phi(0, 0) == 2);
  CHECK(s.eps(0, 1) == 1);
  CHECK(s.phi(0, 1) == 1);
  CHECK(s.eps(0, 2) == 2);
  CHECK(s.phi(0, 2) == 0);

  Crystal broken = s;
  broken.set_f(0, 1, -1);
  const Report r = verify_normal_axioms(broken);
  bool c2_failed = false;
  for (const auto& chk : r.checks())
    if (chk.name == "C2_inverse") c2_failed = chk.status == Status::Fail;
  CHECK(c2_failed);
}

TEST_CASE("highest weight crystals have Weyl dimension") {
  CHECK(highest_weight_crystal(named("A1"), {3}).size() == 4);
  const auto a2 = named("A2");
  const Crystal v = highest_weight_crystal(a2, {1, 0});
  CHECK(v.size() == 3);
  const Character ch = character(v);
  CHECK(ch.mult.at({0, 0}) == 1);
  CHECK(ch.mult.at({1, 0}) == 1);
  CHECK(ch.mult.at({1, 1}) == 1);
  CHECK(highest_weight_crystal(a2, {1, 1}).size() == 8);
  CHECK(character(highest_weight_crystal(a2, {1, 1})).mult.at({1, 1}) == 2);
  for (const char* name : {"A2", "B2", "G2", "A1xA1"})
    for (IntVector k : {IntVector{1, 0}, IntVector{0, 1}, IntVector{1, 1}, IntVector{2, 1}}) {
      INFO(name);
      require_pass(crystal_suite(named(name), k));
    }
  CHECK(highest_weight_crystal(named("G2"), {1, 1}).size() == 64);
}

TEST_CASE("affine truncation") {
  const auto aff = named("affA1");
  const Crystal c = highest_weight_crystal(aff, {1, 0}, 3);
  require_pass(verify_normal_axioms(c));
  const Character ch = character(c);
  // basic representation of affine sl2: multiplicities 1,1,1,2 up to depth 3
  CHECK(ch.mult.at({0, 0}) == 1);
  CHECK(ch.mult.at({1, 0}) == 1);
  CHECK(ch.mult.at({1, 1}) == 1);
  CHECK(ch.mult.at({2, 1}) == 1);
  CHECK(c.complete_weight({2, 1}));
  CHECK_FALSE(c.complete_weight({2, 2}));
  const Crystal deeper = highest_weight_crystal(aff, {1, 0}, 4);
  CHECK(character(deeper).mult.at({2, 2}) == 2);
  require_pass(crystal_suite(aff, {1, 0}, 5));
}

TEST_CASE("tensor products") {
  const auto a1 = named("A1");
  const Crystal b = highest_weight_crystal(a1, {1});
  const Crystal t = tensor(b, b);
  CHECK(t.size() == 4);
  require_pass(verify_normal_axioms(t));
  CHECK(sizes(t) == std::vector<std::size_t>{3, 1});
  CHECK(character(t) == convolve(character(b), character(b)));

  const auto a2 = named("A2");
  const Crystal v = highest_weight_crystal(a2, {1, 0});
  const Crystal w = highest_weight_crystal(a2, {0, 1});
  const Crystal vw = tensor(v, w);
  require_pass(verify_normal_axioms(vw));
  CHECK(sizes(vw) == std::vector<std::size_t>{8, 1});
  CHECK(character(vw) == convolve(character(v), character(w)));

  const Crystal unit = highest_weight_crystal(a2, {0, 0});
  const Crystal uv = tensor(unit, v);
  CHECK(export_dot(uv) == export_dot(v));

  CHECK_THROWS_AS(tensor(b, v), Error);
}

TEST_CASE("lowest weight crystals") {
  const auto a2 = named("A2");
  const Crystal lo = lowest_weight_crystal(a2, {0, -1});
  CHECK(lo.size() == 3);
  require_pass(verify_normal_axioms(lo));
  const Crystal hi = highest_weight_crystal(a2, {1, 0});
  // lowest weight -Lambda_2 is the vector representation again: 3 x 3 = 6 + 3
  const Crystal t = tensor(lo, hi);
  require_pass(verify_normal_axioms(t));
  CHECK(sizes(t) == std::vector<std::size_t>{6, 3});
  const Crystal dual = lowest_weight_crystal(a2, {-1, 0});
  const Crystal adj = tensor(dual, hi);
  require_pass(verify_normal_axioms(adj));
  CHECK(sizes(adj) == std::vector<std::size_t>{8, 1});
}

TEST_CASE("dot export is deterministic") {
  const auto a1 = named("A1");
  const std::string one = export_dot(highest_weight_crystal(a1, {1}));
  CHECK(one == export_dot(highest_weight_crystal(a1, {1})));
  CHECK(one.find("b0 -> b1") != std::string::npos);
  const std::string triv = export_dot(highest_weight_crystal(a1, {0}));
  CHECK(triv.find("->") == std::string::npos);
}
