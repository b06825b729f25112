#include <doctest.h>

#include "germ/errors.hpp"
#include "germ/parser.hpp"
#include "support.hpp"

using namespace germ;

TEST_SUITE("parser") {
  TEST_CASE("simple ideal") {
    IdealFile f = parse_ideal("vars x,y;\n x^2 - y^3;");
    REQUIRE(f.variables.size() == 2);
    REQUIRE(f.generators.size() == 1);
    CHECK(f.generators[0] == testsupport::P("x^2 - y^3", f.variables));
    CHECK_FALSE(f.assume_pure_dimensional);
  }

  TEST_CASE("three-generator ideal with comments") {
    IdealFile f = parse_ideal(
        "# example\nvars x,y,z;\n x*(x-z^3)*(x-2*z^2);\n y*(y-z^3)*(y-2*z^2);  # second\n "
        "(x+y)*(x+y-z^3);");
    REQUIRE(f.generators.size() == 3);
    auto v = f.variables;
    // expanded by hand
    CHECK(f.generators[0] == testsupport::P("x^3 - 2*x^2*z^2 - x^2*z^3 + 2*x*z^5", v));
    CHECK(f.generators[2].total_degree() == 4);
  }

  TEST_CASE("dangling operator is reported at the semicolon") {
    try {
      parse_ideal("vars x;\nx + ;");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 5);
    }
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_AS(parse_ideal("vars x;\n y;"), ParseError);
    CHECK_THROWS_AS(parse_ideal("vars x;\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal("vars x, x;\n x;"), ParseError);
    CHECK_THROWS_AS(parse_ideal("vars x;\n x - x;"), ParseError);
    CHECK_THROWS_AS(parse_ideal("vars x;\n 1/0*x;"), ParseError);
    CHECK_THROWS_AS(parse_ideal("vars x;\n 2x;"), ParseError);
    CHECK_THROWS_AS(parse_ideal("vars x;\n x $ 1;"), ParseError);
    CHECK_THROWS_AS(parse_ideal("vars x;\n x.5;"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x;"), ParseError);
  }

  TEST_CASE("directive and unary minus") {
    IdealFile f = parse_ideal("vars x, y;\nassume pure_dimensional;\n-x^2 + -(y - 3/6);");
    CHECK(f.assume_pure_dimensional);
    CHECK(f.generators[0] == testsupport::P("-x^2 - y + 1/2", f.variables));
  }

  TEST_CASE("round trip on random ideals") {
    testsupport::PolyGen gen(99);
    auto v = testsupport::vars({"x", "y", "z", "t1"});
    for (int t = 0; t < 300; ++t) {
      IdealFile f;
      f.variables = v;
      int k = gen.uniform(1, 4);
      for (int i = 0; i < k; ++i) f.generators.push_back(gen.nonzero(v, 6, 5));
      f.assume_pure_dimensional = gen.uniform(0, 1) == 1;
      IdealFile g = parse_ideal(print_ideal(f));
      REQUIRE(g.variables == f.variables);
      REQUIRE(g.generators.size() == f.generators.size());
      for (std::size_t i = 0; i < f.generators.size(); ++i) REQUIRE(g.generators[i] == f.generators[i]);
      REQUIRE(g.assume_pure_dimensional == f.assume_pure_dimensional);
    }
  }
}
