#include "germ/numtopo.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "germ/errors.hpp"

namespace germ {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double v) { return std::nextafter(v, -kInf); }
double up(double v) { return std::nextafter(v, kInf); }

// Rounded sum plus the sign of its rounding error (TwoSum).
double add_err(double a, double b, double& err) {
  double s = a + b;
  double bb = s - a;
  err = (a - (s - bb)) + (b - bb);
  return s;
}

double add_down(double a, double b) {
  double e;
  double s = add_err(a, b, e);
  return e < 0.0 ? down(s) : s;
}
double add_up(double a, double b) {
  double e;
  double s = add_err(a, b, e);
  return e > 0.0 ? up(s) : s;
}
double mul_down(double a, double b) {
  double p = a * b;
  return std::fma(a, b, -p) < 0.0 ? down(p) : p;
}
double mul_up(double a, double b) {
  double p = a * b;
  return std::fma(a, b, -p) > 0.0 ? up(p) : p;
}

}  // namespace

Interval Interval::enclose(const Rational& q) {
  double d = q.get_d();
  int c = cmp(Rational(d), q);
  if (c == 0) return Interval(d);
  return c < 0 ? Interval(d, up(d)) : Interval(down(d), d);
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(add_down(a.lo, b.lo), add_up(a.hi, b.hi));
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(add_down(a.lo, -b.hi), add_up(a.hi, -b.lo));
}

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.lo >= 0.0 && b.lo >= 0.0) return Interval(mul_down(a.lo, b.lo), mul_up(a.hi, b.hi));
  double lo = std::min({mul_down(a.lo, b.lo), mul_down(a.lo, b.hi), mul_down(a.hi, b.lo),
                        mul_down(a.hi, b.hi)});
  double hi = std::max({mul_up(a.lo, b.lo), mul_up(a.lo, b.hi), mul_up(a.hi, b.lo),
                        mul_up(a.hi, b.hi)});
  return Interval(lo, hi);
}

Interval meet(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
}

namespace {

// Enclosure of x^e for a point x.
Interval point_pow(double x, unsigned e) {
  Interval result(1.0), base(x);
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

}  // namespace

Interval Interval::pow(unsigned e) const {
  if (e == 0) return Interval(1.0);
  if (e % 2 == 1) return Interval(point_pow(lo, e).lo, point_pow(hi, e).hi);
  if (lo >= 0.0) return Interval(point_pow(lo, e).lo, point_pow(hi, e).hi);
  if (hi <= 0.0) return Interval(point_pow(-hi, e).lo, point_pow(-lo, e).hi);
  return Interval(0.0, point_pow(std::max(-lo, hi), e).hi);
}

BivariatePoly::BivariatePoly(unsigned deg_u, unsigned deg_v)
    : du_(deg_u), dv_(deg_v), c_(static_cast<std::size_t>(deg_u + 1) * (deg_v + 1)) {}

BivariatePoly BivariatePoly::from_polynomial(const Polynomial& f, const std::string& u,
                                             const std::string& v,
                                             const std::map<std::string, Rational>& fixed) {
  const VarList& vars = f.vars();
  std::size_t iu = vars.index_of(u), iv = vars.index_of(v);
  if (iu == vars.size() || iv == vars.size() || iu == iv)
    throw Error("numtopo", "free variables must be two distinct ring variables");
  for (const auto& [name, value] : fixed) {
    std::size_t k = vars.index_of(name);
    if (k == vars.size()) throw Error("numtopo", "unknown variable '" + name + "' in --fix");
    if (k == iu || k == iv) throw Error("numtopo", "variable '" + name + "' is both fixed and free");
  }
  std::vector<const Rational*> value(vars.size(), nullptr);
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (k == iu || k == iv) continue;
    auto it = fixed.find(vars[k]);
    if (it == fixed.end())
      throw Error("numtopo", "variable '" + vars[k] + "' is neither fixed nor free");
    value[k] = &it->second;
  }

  std::map<std::pair<unsigned, unsigned>, Rational> acc;
  unsigned du = 0, dv = 0;
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (value[k] == nullptr) continue;
      for (Exponent e = 0; e < t.mono[k]; ++e) c *= *value[k];
    }
    if (sgn(c) == 0) continue;
    unsigned i = t.mono[iu], j = t.mono[iv];
    acc[{i, j}] += c;
    du = std::max(du, i);
    dv = std::max(dv, j);
  }
  BivariatePoly p(du, dv);
  for (const auto& [ij, c] : acc) p.coeff(ij.first, ij.second) = Interval::enclose(c);
  return p;
}

Interval BivariatePoly::horner(const Interval& u, const Interval& v) const {
  Interval outer(0.0);
  for (unsigned i = du_ + 1; i-- > 0;) {
    Interval inner(0.0);
    for (unsigned j = dv_ + 1; j-- > 0;) inner = inner * v + coeff(i, j);
    outer = outer * u + inner;
  }
  return outer;
}

namespace {

// 1D polynomial sum a_k t^k over the symmetric interval [-r, r], with a
// monotone refinement between the true endpoints t0 and t1.
Interval enclose_1d(const std::vector<Interval>& a, double r, const Interval& t0,
                    const Interval& t1) {
  Interval sym(-r, r);
  Interval value = a[0];
  Interval slope(0.0);
  for (std::size_t k = 1; k < a.size(); ++k) {
    value = value + a[k] * sym.pow(static_cast<unsigned>(k));
    slope = slope + a[k] * Interval(static_cast<double>(k)) * sym.pow(static_cast<unsigned>(k - 1));
  }
  if (slope.lo >= 0.0 || slope.hi <= 0.0) {
    auto at = [&](const Interval& t) {
      Interval acc(0.0);
      for (std::size_t k = a.size(); k-- > 0;) acc = acc * t + a[k];
      return acc;
    };
    value = meet(value, Interval::hull(at(t0), at(t1)));
  }
  return value;
}

}  // namespace

namespace {

// With `sign_only`, stops as soon as the enclosure excludes zero.
Interval enclose(const BivariatePoly& f, const Rect& cell, bool sign_only) {
  const unsigned du = f.deg_u(), dv = f.deg_v();
  Interval natural = f.horner(Interval(cell.xmin, cell.xmax), Interval(cell.ymin, cell.ymax));
  if (sign_only && !natural.contains_zero()) return natural;

  // Taylor shift to the cell center; the center is an exact double.
  double cx = 0.5 * (cell.xmin + cell.xmax), cy = 0.5 * (cell.ymin + cell.ymax);
  std::vector<Interval> b(static_cast<std::size_t>(du + 1) * (dv + 1));
  auto B = [&](unsigned i, unsigned j) -> Interval& { return b[i * (dv + 1) + j]; };
  for (unsigned i = 0; i <= du; ++i)
    for (unsigned j = 0; j <= dv; ++j) B(i, j) = f.coeff(i, j);
  Interval icx(cx), icy(cy);
  for (unsigned j = 0; j <= dv; ++j)
    for (unsigned k = 0; k < du; ++k)
      for (unsigned i = du - 1;; --i) {
        B(i, j) = B(i, j) + icx * B(i + 1, j);
        if (i == k) break;
      }
  for (unsigned i = 0; i <= du; ++i)
    for (unsigned k = 0; k < dv; ++k)
      for (unsigned j = dv - 1;; --j) {
        B(i, j) = B(i, j) + icy * B(i, j + 1);
        if (j == k) break;
      }

  Interval u0 = Interval(cell.xmin) - icx, u1 = Interval(cell.xmax) - icx;
  Interval v0 = Interval(cell.ymin) - icy, v1 = Interval(cell.ymax) - icy;
  double ru = std::max(-u0.lo, u1.hi), rv = std::max(-v0.lo, v1.hi);
  Interval U(-ru, ru), V(-rv, rv);

  std::vector<Interval> upow(du + 1), vpow(dv + 1);
  for (unsigned i = 0; i <= du; ++i) upow[i] = U.pow(i);
  for (unsigned j = 0; j <= dv; ++j) vpow[j] = V.pow(j);

  Interval taylor(0.0), du_enc(0.0), dv_enc(0.0);
  for (unsigned i = 0; i <= du; ++i)
    for (unsigned j = 0; j <= dv; ++j) {
      const Interval& c = B(i, j);
      if (c.lo == 0.0 && c.hi == 0.0) continue;
      taylor = taylor + c * (upow[i] * vpow[j]);
      if (i > 0) du_enc = du_enc + c * Interval(static_cast<double>(i)) * (upow[i - 1] * vpow[j]);
      if (j > 0) dv_enc = dv_enc + c * Interval(static_cast<double>(j)) * (upow[i] * vpow[j - 1]);
    }
  Interval result = meet(natural, taylor);
  if (sign_only && !result.contains_zero()) return result;

  // Monotone in u: the range is attained on the edges u = u0 and u = u1.
  if (result.contains_zero() && du > 0 && (du_enc.lo >= 0.0 || du_enc.hi <= 0.0)) {
    auto edge = [&](const Interval& ue) {
      std::vector<Interval> a(dv + 1, Interval(0.0));
      for (unsigned j = 0; j <= dv; ++j) {
        Interval acc(0.0);
        for (unsigned i = du + 1; i-- > 0;) acc = acc * ue + B(i, j);
        a[j] = acc;
      }
      return enclose_1d(a, rv, v0, v1);
    };
    result = meet(result, Interval::hull(edge(u0), edge(u1)));
  }
  if (result.contains_zero() && dv > 0 && (dv_enc.lo >= 0.0 || dv_enc.hi <= 0.0)) {
    auto edge = [&](const Interval& ve) {
      std::vector<Interval> a(du + 1, Interval(0.0));
      for (unsigned i = 0; i <= du; ++i) {
        Interval acc(0.0);
        for (unsigned j = dv + 1; j-- > 0;) acc = acc * ve + B(i, j);
        a[i] = acc;
      }
      return enclose_1d(a, ru, u0, u1);
    };
    result = meet(result, Interval::hull(edge(v0), edge(v1)));
  }
  return result;
}

}  // namespace

Interval interval_eval(const BivariatePoly& f, const Rect& cell) { return enclose(f, cell, false); }

Interval interval_eval(const Polynomial& f, const Rect& cell) {
  if (f.nvars() != 2) throw Error("numtopo", "interval_eval needs a polynomial in two variables");
  return interval_eval(BivariatePoly::from_polynomial(f, f.vars()[0], f.vars()[1], {}), cell);
}

SectionSpec SectionSpec::make(Polynomial f, std::map<std::string, Rational> fixed, Rect box,
                              double resolution) {
  std::vector<std::string> free;
  for (const auto& name : f.vars().names()) {
    if (fixed.count(name) == 0) free.push_back(name);
  }
  for (const auto& [name, value] : fixed)
    if (f.vars().index_of(name) == f.vars().size())
      throw Error("numtopo", "unknown variable '" + name + "' in --fix");
  if (free.size() != 2)
    throw Error("numtopo", "a section needs exactly 2 free variables, found " +
                               std::to_string(free.size()));
  if (!(box.xmin < box.xmax) || !(box.ymin < box.ymax))
    throw Error("numtopo", "empty box");
  if (!(resolution > 0.0)) throw Error("numtopo", "resolution must be positive");
  SectionSpec spec{std::move(f), std::move(fixed), free[0], free[1], box, resolution, 10'000'000,
                   std::nullopt};
  return spec;
}

std::string to_string(CountStatus s) {
  return s == CountStatus::heuristic ? "heuristic" : "certified-lower-bound";
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  std::uint32_t add() {
    parent.push_back(static_cast<std::uint32_t>(parent.size()));
    return parent.back();
  }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Node {
  unsigned level;
  std::uint64_t i, j;
};

}  // namespace

ComponentCount count_components(const SectionSpec& spec) {
  BivariatePoly f =
      BivariatePoly::from_polynomial(spec.f, spec.free_u, spec.free_v, spec.fixed_assignments);
  const Rect& box = spec.box;
  const double w = box.xmax - box.xmin, h = box.ymax - box.ymin;
  double ratio = std::max(w, h) / spec.resolution;
  unsigned depth = ratio <= 1.0 ? 0U : static_cast<unsigned>(std::ceil(std::log2(ratio)));
  if (depth > 30) throw ResourceError("numtopo", "resolution too fine for the box (depth > 30)");

  auto xs = [&](std::uint64_t i, unsigned level) {
    return box.xmin + w * std::ldexp(static_cast<double>(i), -static_cast<int>(level));
  };
  auto ys = [&](std::uint64_t j, unsigned level) {
    return box.ymin + h * std::ldexp(static_cast<double>(j), -static_cast<int>(level));
  };

  ComponentCount out;
  out.depth = depth;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> leaves;
  std::vector<Node> stack{{0, 0, 0}};
  while (!stack.empty()) {
    Node n = stack.back();
    stack.pop_back();
    if (++out.cells_examined > spec.cell_budget)
      throw ResourceError("numtopo", "cell budget of " + std::to_string(spec.cell_budget) +
                                         " exceeded");
    Rect cell{xs(n.i, n.level), xs(n.i + 1, n.level), ys(n.j, n.level), ys(n.j + 1, n.level)};
    if (!enclose(f, cell, true).contains_zero()) continue;
    if (n.level == depth) {
      leaves.emplace_back(n.i, n.j);
      continue;
    }
    for (std::uint64_t di = 2; di-- > 0;)
      for (std::uint64_t dj = 2; dj-- > 0;)
        stack.push_back({n.level + 1, 2 * n.i + di, 2 * n.j + dj});
  }
  std::sort(leaves.begin(), leaves.end());
  out.occupied_cells = leaves.size();

  UnionFind uf;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(leaves.size() * 2);
  auto key = [](std::uint64_t i, std::uint64_t j) { return (i << 32) | j; };
  for (const auto& [i, j] : leaves) index.emplace(key(i, j), uf.add());
  for (const auto& [i, j] : leaves) {
    std::uint32_t a = index.at(key(i, j));
    if (auto it = index.find(key(i + 1, j)); it != index.end()) uf.unite(a, it->second);
    if (auto it = index.find(key(i, j + 1)); it != index.end()) uf.unite(a, it->second);
  }
  for (std::uint32_t k = 0; k < uf.parent.size(); ++k)
    if (uf.find(k) == k) ++out.count;

  if (spec.csv_path) {
    std::ofstream csv(*spec.csv_path);
    if (!csv) throw Error("numtopo", "cannot write " + *spec.csv_path);
    csv.precision(17);
    csv << "xmin,xmax,ymin,ymax,component\n";
    for (const auto& [i, j] : leaves)
      csv << xs(i, depth) << ',' << xs(i + 1, depth) << ',' << ys(j, depth) << ','
          << ys(j + 1, depth) << ',' << uf.find(index.at(key(i, j))) << '\n';
  }
  return out;
}

Polynomial sum_of_squares(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("sum_of_squares: no generators");
  if (gens.size() == 1) return gens.front();
  Polynomial acc(gens.front().vars(), gens.front().order());
  for (const auto& g : gens) acc += g * g;
  return acc;
}

}  // namespace germ
