#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmcat/cartan.hpp"
#include "kmcat/error.hpp"

#include <random>

using namespace kmcat;

namespace {

CartanDatum named(const char* name) { return validate_gcm(standard_gcm(name)); }

}  // namespace

TEST_CASE("symmetrizers of the bundled matrices") {
  CHECK(named("A1").symmetrizer() == IntVector{1});
  CHECK(named("A2").symmetrizer() == IntVector{1, 1});
  CHECK(named("B2").symmetrizer() == IntVector{1, 2});
  CHECK(named("G2").symmetrizer() == IntVector{1, 3});
  CHECK(named("affA1").symmetrizer() == IntVector{1, 1});
  for (const char* name : {"A1", "A2", "B2", "G2", "A1xA1", "affA1"}) {
    const auto c = named(name);
    for (int i = 0; i < c.rank(); ++i)
      for (int j = 0; j < c.rank(); ++j) CHECK(c.d(i) * c.a(i, j) == c.d(j) * c.a(j, i));
  }
}

TEST_CASE("finite type detection") {
  for (const char* name : {"A1", "A2", "B2", "G2", "A1xA1"}) CHECK(named(name).finite_type());
  CHECK_FALSE(named("affA1").finite_type());
  CHECK_FALSE(validate_gcm(std::vector<std::vector<int>>{{2, -3}, {-3, 2}}).finite_type());
}

TEST_CASE("invalid matrices") {
  auto code = [](const std::vector<std::vector<int>>& m) {
    try {
      validate_gcm(m);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code({{3}}) == ErrorCode::NotGCM);
  CHECK(code({{2, 1}, {-1, 2}}) == ErrorCode::NotGCM);
  CHECK(code({{2, 0}, {-1, 2}}) == ErrorCode::NotGCM);
  CHECK(code({{2, -1}, {-1}}) == ErrorCode::NotGCM);
  const std::vector<std::vector<int>> cyc{{2, -1, -2}, {-2, 2, -1}, {-1, -2, 2}};
  CHECK(code(cyc) == ErrorCode::NotSymmetrizable);
}

TEST_CASE("cycle criterion agrees with the symmetrizer search") {
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> entry(0, 3);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Eigen::MatrixXi m(3, 3);
    for (int i = 0; i < 3; ++i) m(i, i) = 2;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const int x = entry(gen);
        m(i, j) = -x;
        m(j, i) = x == 0 ? 0 : -(1 + entry(gen) % 3);
      }
    bool symmetrizable = true;
    try {
      validate_gcm(m);
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::NotSymmetrizable);
      symmetrizable = false;
    }
    CHECK(symmetrizable == cycle_products_consistent(m));
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("pairing") {
  const auto a2 = named("A2");
  CHECK(pairing(a2, 0, Weight{{1, 0}, {0, 0}}) == 1);
  CHECK(pairing(a2, 0, Weight{{1, 0}, {1, 0}}) == -1);
  CHECK(pairing(a2, 1, Weight{{1, 0}, {1, 0}}) == 1);
  const auto b2 = named("B2");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Weight w{{2, 1}, {1, 3}};
      Weight lower = w;
      lower.offset[static_cast<std::size_t>(j)] += 1;
      CHECK(pairing(b2, i, lower) == pairing(b2, i, w) - b2.a(i, j));
    }
}

TEST_CASE("dominance order") {
  const Weight l{{1, 0}, {1, 0}}, m{{1, 0}, {0, 0}}, o{{1, 0}, {0, 1}};
  CHECK(dominance_leq(l, l));
  CHECK(dominance_leq(l, m));
  CHECK_FALSE(dominance_leq(m, l));
  CHECK_FALSE(dominance_leq(l, o));
  CHECK_FALSE(dominance_leq(o, l));
  CHECK_THROWS_AS(dominance_leq(l, Weight{{0, 1}, {0, 0}}), Error);

  std::mt19937 gen(3);
  std::uniform_int_distribution<int> c(0, 2);
  for (int t = 0; t < 500; ++t) {
    Weight x{{0, 0}, {c(gen), c(gen)}}, y{{0, 0}, {c(gen), c(gen)}}, z{{0, 0}, {c(gen), c(gen)}};
    if (dominance_leq(x, y) && dominance_leq(y, x)) CHECK(x == y);
    if (dominance_leq(x, y) && dominance_leq(y, z)) CHECK(dominance_leq(x, z));
  }
}

TEST_CASE("Weyl dimensions") {
  const auto a1 = named("A1");
  for (int k = 0; k < 6; ++k) CHECK(weyl_dim(a1, {k}) == k + 1);
  const auto a2 = named("A2");
  CHECK(weyl_dim(a2, {1, 0}) == 3);
  CHECK(weyl_dim(a2, {1, 1}) == 8);
  CHECK(weyl_dim(a2, {2, 0}) == 6);
  const auto b2 = named("B2");
  CHECK(positive_roots(b2).size() == 4);
  CHECK(weyl_dim(b2, {1, 0}) * weyl_dim(b2, {0, 1}) == 20);
  CHECK(positive_roots(named("G2")).size() == 6);
  CHECK(weyl_dim(named("G2"), {1, 0}) * weyl_dim(named("G2"), {0, 1}) == 7 * 14);
  CHECK_THROWS_AS(weyl_dim(named("affA1"), {1, 0}), Error);
}
