#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmcat/config.hpp"
#include "kmcat/error.hpp"
#include "kmcat/suites.hpp"

using namespace kmcat;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_config(text, "cfg");
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse and echo") {
  const KLRParams p = parse_config(R"({"cartan_matrix": [[2,-2],[-2,2]],
    "t": [{"i":0,"j":1,"value":"3/2"}],
    "s": [{"i":0,"j":1,"p":1,"q":1,"value":"1"}]})");
  CHECK(p.rank() == 2);
  CHECK(p.t(0, 1) == Rational(3, 2));
  CHECK(p.t(1, 0) == Rational(1));
  CHECK(p.s(1, 0, 1, 1) == Rational(1));
  CHECK(parse_config(config_json(p).dump()) == p);
  CHECK(parse_config(R"({"cartan_matrix": [[2]]})").rank() == 1);
}

TEST_CASE("bundled data files") {
  for (const char* name : {"a1", "a2", "b2", "g2", "a1xa1", "affine_a1"}) {
    INFO(name);
    const KLRParams p = load_config(std::string(KMCAT_DATA_DIR) + "/" + name + ".json");
    CHECK_FALSE(cartan_suite(p.datum()).any_fail());
  }
}

TEST_CASE("errors carry positions") {
  const std::string syntax = error_of("{\n  \"cartan_matrix\": [[2, -1],\n  [-1 2]]\n}");
  CHECK(syntax.find("line 3") != std::string::npos);
  CHECK(error_of(R"({"cartan_matrix": [[2,-1],[-1,2]], "t": [{"i":0,"j":5}]})").find("t[0]") != std::string::npos);
  CHECK(error_of(R"({"cartan_matrix": [[2,-1],[-1,2]], "x": 1})").find("unknown field") != std::string::npos);
  CHECK(error_of(R"({"cartan_matrix": [[2,-1],[-1,2]], "t": [{"i":0,"j":1,"value":"a/b"}]})").find("rational") != std::string::npos);
  CHECK_THROWS_AS(parse_config(R"({"cartan_matrix": [[2,1],[-1,2]]})"), Error);
  CHECK_THROWS_AS(load_config("/nonexistent/file.json"), Error);
}

TEST_CASE("suites") {
  CHECK_FALSE(cartan_suite(validate_gcm(standard_gcm("G2"))).any_fail());
  for (int n = 1; n <= 3; ++n) {
    const Report r = nilhecke_suite(n, 5, 20, 10);
    INFO(r.summary());
    CHECK_FALSE(r.any_fail());
  }
}
