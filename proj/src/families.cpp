#include "germ/families.hpp"

#include <stdexcept>

#include "germ/errors.hpp"

namespace germ {

namespace {

Polynomial var(const VarList& vars, std::size_t i) { return Polynomial::variable(vars, i); }
Polynomial cst(const VarList& vars, const Rational& c) { return Polynomial::constant(vars, c); }

std::vector<std::string> coordinate_names(int n) {
  std::vector<std::string> names{"x", "y", "z"};
  for (int i = 1; i <= n - 3; ++i) names.push_back("t" + std::to_string(i));
  names.resize(static_cast<std::size_t>(n));
  return names;
}

// Basis of the linear forms vanishing on span(rows), by exact row reduction.
std::vector<std::vector<Rational>> annihilator(std::vector<std::vector<Rational>> rows, int n) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& e : rows[r]) e *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || sgn(rows[q][c]) == 0) continue;
      Rational f = rows[q][c];
      for (int k = 0; k < n; ++k) rows[q][k] -= f * rows[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> forms;
  for (int free = 0; free < n; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<Rational> a(static_cast<std::size_t>(n), 0);
    a[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) a[pivot_col[i]] = -rows[i][free];
    forms.push_back(std::move(a));
  }
  return forms;
}

std::size_t rank(std::vector<std::vector<Rational>> rows, int n) {
  return static_cast<std::size_t>(n) - annihilator(std::move(rows), n).size();
}

std::vector<Rational> moment_vector(int n, int t) {
  std::vector<Rational> v;
  Rational p = 1;
  for (int i = 0; i < n; ++i) {
    v.push_back(p);
    p *= t;
  }
  return v;
}

}  // namespace

Polynomial family_g(int l) {
  if (l < 2) throw std::invalid_argument("family_g: l must be >= 2");
  VarList vars({"x", "y", "z"});
  Polynomial x = var(vars, 0), y = var(vars, 1), z = var(vars, 2);
  Polynomial z2 = z * z;
  Polynomial circle = x * x + y * y - z2 * z2;
  Polynomial strips = cst(vars, 1);
  for (int i = 0; i <= 2 * l - 1; ++i) {
    Rational c(2 * i - 2 * l + 1, 2 * l);
    c.canonicalize();
    strips = strips * (y - z2.scaled(c));
  }
  return circle * circle + strips;
}

Polynomial family_f(int n, int l) {
  if (n < 3) throw std::invalid_argument("family_f: n must be >= 3");
  if (l < 2) throw std::invalid_argument("family_f: l must be >= 2");
  VarList vars(coordinate_names(n));
  Polynomial x = var(vars, 0), y = var(vars, 1), z = var(vars, 2);
  Polynomial f = cst(vars, 1);
  for (int r = 0; r <= 2 * l - 1; ++r) f = f * (x - y.scaled(r));
  f += z * z;
  for (int i = 3; i < n; ++i) f += var(vars, static_cast<std::size_t>(i)).pow(4);
  return f;
}

namespace {

VarList widened(const VarList& vars) {
  std::vector<std::string> names = vars.names();
  names.push_back(fresh_variable_name(vars, "w"));
  return VarList(std::move(names));
}

}  // namespace

std::vector<Polynomial> transform_product(std::span<const Polynomial> gens) {
  if (gens.empty()) throw std::invalid_argument("transform_product: no generators");
  VarList wider = widened(gens.front().vars());
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(extend_ring(g, wider));
  return out;
}

std::vector<Polynomial> transform_embed(std::span<const Polynomial> gens) {
  std::vector<Polynomial> out = transform_product(gens);
  const VarList& wider = out.front().vars();
  out.push_back(Polynomial::variable(wider, wider.size() - 1));
  return out;
}

LinearUnionPlanes linear_union_planes(int n, int d, int k, int l) {
  if (n < 1 || d < 0 || d > n || k < 0 || k > n || l < 0)
    throw std::invalid_argument("family_linear_union: parameters out of range");
  if (!(n - k < d) || d > k || 2 * (n - k) > n)
    throw std::invalid_argument(
        "family_linear_union: infeasible dimensions (need n-k < d <= k and 2(n-k) <= n)");
  // Points on the moment curve: any n of them are linearly independent.
  LinearUnionPlanes planes;
  int t = 1;
  for (int i = 0; i < d; ++i) planes.v.push_back(moment_vector(n, t++));
  for (int j = 0; j < l; ++j) {
    std::vector<std::vector<Rational>> basis;
    for (int i = 0; i < n - k; ++i) basis.push_back(moment_vector(n, t++));
    planes.w.push_back(std::move(basis));
  }

  // General position check, independent of the construction above.
  auto stacked_rank = [&](const std::vector<std::vector<Rational>>& a,
                          const std::vector<std::vector<Rational>>& b) {
    std::vector<std::vector<Rational>> rows = a;
    rows.insert(rows.end(), b.begin(), b.end());
    return rank(std::move(rows), n);
  };
  for (std::size_t i = 0; i < planes.w.size(); ++i) {
    if (stacked_rank(planes.v, planes.w[i]) != planes.v.size() + planes.w[i].size())
      throw Error("families", "linear_union: V meets W_" + std::to_string(i + 1));
    for (std::size_t j = i + 1; j < planes.w.size(); ++j)
      if (stacked_rank(planes.w[i], planes.w[j]) != planes.w[i].size() + planes.w[j].size())
        throw Error("families", "linear_union: W_" + std::to_string(i + 1) + " meets W_" +
                                    std::to_string(j + 1));
  }
  return planes;
}

std::vector<Polynomial> family_linear_union(int n, int d, int k, int l) {
  LinearUnionPlanes planes = linear_union_planes(n, d, k, l);
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  VarList vars(std::move(names));

  auto linear_ideal = [&](const std::vector<std::vector<Rational>>& span) {
    std::vector<Polynomial> forms;
    for (const auto& a : annihilator(span, n)) {
      Polynomial p(vars);
      for (int i = 0; i < n; ++i) p += var(vars, static_cast<std::size_t>(i)).scaled(a[i]);
      forms.push_back(p);
    }
    return forms;
  };

  std::vector<Polynomial> product = linear_ideal(planes.v);
  for (const auto& w : planes.w) {
    std::vector<Polynomial> factor = linear_ideal(w);
    std::vector<Polynomial> next;
    for (const auto& a : product)
      for (const auto& b : factor) next.push_back(a * b);
    product = std::move(next);
  }
  return product;
}

IdealFile as_ideal_file(std::vector<Polynomial> gens, bool pure) {
  if (gens.empty()) throw std::invalid_argument("as_ideal_file: no generators");
  IdealFile out;
  out.variables = gens.front().vars();
  out.generators = std::move(gens);
  out.assume_pure_dimensional = pure;
  return out;
}

}  // namespace germ
