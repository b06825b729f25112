#include <doctest.h>

#include <random>

#include "germ/errors.hpp"
#include "germ/families.hpp"
#include "germ/numtopo.hpp"
#include "support.hpp"

using namespace germ;
using testsupport::P;

namespace {

double exact_value(const Polynomial& f, double x, double y) {
  Rational acc = 0, X(x), Y(y);
  for (const auto& t : f.terms()) {
    Rational v = t.coeff;
    for (Exponent e = 0; e < t.mono[0]; ++e) v *= X;
    for (Exponent e = 0; e < t.mono[1]; ++e) v *= Y;
    acc += v;
  }
  return acc.get_d();
}

}  // namespace

TEST_SUITE("numtopo") {
  TEST_CASE("interval arithmetic rounds outward") {
    Interval third = Interval::enclose(Rational(1, 3));
    CHECK(third.lo < third.hi);
    CHECK(Rational(third.lo) < Rational(1, 3));
    CHECK(Rational(third.hi) > Rational(1, 3));
    Interval s = third + third + third;
    CHECK(s.contains(1.0));
    Interval q = Interval(-2, 3).pow(2);
    CHECK(q.lo == 0);
    CHECK(q.hi == 9);
    CHECK(Interval(-2, -1).pow(3).hi == -1);
  }

  TEST_CASE("interval_eval examples") {
    auto v = testsupport::vars({"x", "y"});
    Interval a = interval_eval(P("x", v), Rect{1, 2, 0, 1});
    CHECK(a.lo == 1);
    CHECK(a.hi == 2);
    Interval b = interval_eval(P("x^2 - y", v), Rect{0, 1, 0, 1});
    CHECK(b.lo <= -1);
    CHECK(b.hi >= 1);
    Interval c = interval_eval(P("5", v), Rect{-3, 7, 2, 9});
    CHECK(c.lo == 5);
    CHECK(c.hi == 5);
  }

  TEST_CASE("inclusion on random cells") {
    testsupport::PolyGen gen(55);
    auto v = testsupport::vars({"x", "y"});
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 40; ++t) {
      Polynomial f = gen.poly(v, 8, 6);
      double x0 = -2 + 4 * unit(rng), y0 = -2 + 4 * unit(rng);
      double h = std::ldexp(1.0, -gen.uniform(0, 12));
      Rect cell{x0, x0 + h, y0, y0 + h};
      Interval range = interval_eval(f, cell);
      for (int k = 0; k < 1000; ++k) {
        double x = x0 + h * unit(rng), y = y0 + h * unit(rng);
        REQUIRE(range.contains(exact_value(f, x, y)));
      }
    }
  }

  TEST_CASE("circle has one component") {
    auto v = testsupport::vars({"x", "y"});
    auto spec = SectionSpec::make(P("x^2 + y^2 - 1", v), {}, Rect{-2, 2, -2, 2}, 1.0 / 64);
    ComponentCount c = count_components(spec);
    CHECK(c.count == 1);
    CHECK(c.status == CountStatus::heuristic);
    CHECK(c.cells_examined > 0);
  }

  TEST_CASE("disjoint circles") {
    auto v = testsupport::vars({"x", "y"});
    for (int k = 1; k <= 4; ++k) {
      Polynomial f = P("1", v);
      for (int i = 0; i < k; ++i)
        f = f * P("(x - " + std::to_string(3 * i) + ")^2 + y^2 - 1", v);
      auto spec = SectionSpec::make(f, {}, Rect{-2, 3.0 * k, -2, 2}, 1.0 / 128);
      CHECK(count_components(spec).count == k);
    }
  }

  TEST_CASE("sections of the families") {
    // g_3 at z = 3/4: six ovals, at least 2(l - 1)
    auto g = SectionSpec::make(family_g(3), {{"z", Rational(3, 4)}},
                               Rect{-45.0 / 64, 45.0 / 64, -45.0 / 64, 45.0 / 64}, 1.0 / 2048);
    CHECK(count_components(g).count >= 4);
    // f_3 at y = 1/100: three compact ovals
    auto f = SectionSpec::make(family_f(3, 3), {{"y", Rational(1, 100)}},
                               Rect{0, 0.06, -0.1, 0.1}, 1.0 / 4000);
    CHECK(count_components(f).count >= 3);
  }

  TEST_CASE("refinement does not lose the circle") {
    auto v = testsupport::vars({"x", "y"});
    Polynomial f = P("x^2 + y^2 - 1", v);
    std::int64_t prev = -1;
    for (int r = 16; r <= 256; r *= 2) {
      auto c = count_components(SectionSpec::make(f, {}, Rect{-2, 2, -2, 2}, 1.0 / r));
      if (prev >= 0) CHECK(c.count == prev);
      prev = c.count;
    }
  }

  TEST_CASE("spec validation and budget") {
    auto v = testsupport::vars({"x", "y", "z"});
    Polynomial f = P("x^2 + y^2 - z", v);
    CHECK_THROWS_AS(SectionSpec::make(f, {}, Rect{0, 1, 0, 1}, 0.1), Error);
    CHECK_THROWS_AS(SectionSpec::make(f, {{"w", 1}}, Rect{0, 1, 0, 1}, 0.1), Error);
    CHECK_THROWS_AS(SectionSpec::make(f, {{"z", 1}}, Rect{1, 0, 0, 1}, 0.1), Error);
    CHECK_THROWS_AS(SectionSpec::make(f, {{"z", 1}}, Rect{0, 1, 0, 1}, 0), Error);
    auto spec = SectionSpec::make(f, {{"z", 1}}, Rect{-2, 2, -2, 2}, 1.0 / 1024);
    spec.cell_budget = 100;
    CHECK_THROWS_AS(count_components(spec), ResourceError);
  }

  TEST_CASE("sum of squares keeps the common zeros") {
    auto v = testsupport::vars({"x", "y"});
    Polynomial f = sum_of_squares({P("x", v), P("y", v)});
    CHECK(f == P("x^2 + y^2", v));
  }
}
