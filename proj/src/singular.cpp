#include "germ/singular.hpp"

#include <stdexcept>

#include "germ/errors.hpp"
#include "germ/hilbert.hpp"

namespace germ {

namespace {

using Matrix = std::vector<std::vector<Polynomial>>;

// Laplace expansion along the first row.
Polynomial determinant(const Matrix& m) {
  const std::size_t c = m.size();
  if (c == 1) return m[0][0];
  Polynomial det(m[0][0].vars(), m[0][0].order());
  for (std::size_t col = 0; col < c; ++col) {
    if (m[0][col].is_zero()) continue;
    Matrix minor;
    minor.reserve(c - 1);
    for (std::size_t r = 1; r < c; ++r) {
      std::vector<Polynomial> row;
      row.reserve(c - 1);
      for (std::size_t k = 0; k < c; ++k)
        if (k != col) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * determinant(minor);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

}  // namespace

std::vector<Polynomial> jacobian_minors(std::span<const Polynomial> gens, int c) {
  if (gens.empty()) throw std::invalid_argument("jacobian_minors: no generators");
  const std::size_t n = gens.front().nvars();
  if (c < 1 || static_cast<std::size_t>(c) > std::min(gens.size(), n))
    throw std::invalid_argument("jacobian_minors: c = " + std::to_string(c) +
                                " outside [1, min(#gens, n)]");
  const auto uc = static_cast<std::size_t>(c);
  if (binomial(gens.size(), uc) * binomial(n, uc) > double(kMaxMinors))
    throw ResourceError("singular", "too many Jacobian minors requested");

  Matrix jac;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(g.derivative(j));
    jac.push_back(std::move(row));
  }
  std::vector<Polynomial> out;
  for (const auto& rows : subsets(gens.size(), uc)) {
    for (const auto& cols : subsets(n, uc)) {
      Matrix sub;
      for (auto r : rows) {
        std::vector<Polynomial> row;
        for (auto k : cols) row.push_back(jac[r][k]);
        sub.push_back(std::move(row));
      }
      Polynomial det = determinant(sub);
      if (!det.is_zero()) out.push_back(std::move(det));
    }
  }
  return out;
}

SingularLocusData singular_dimension(const TangentConeIdeal& cone, int n, int d,
                                     const BuchbergerOptions& options) {
  if (cone.generators.empty()) throw std::invalid_argument("singular_dimension: empty cone");
  if (d < 0 || d >= n) throw std::invalid_argument("singular_dimension: need 0 <= d < n");
  SingularLocusData out;
  out.sing_ideal_gens = cone.generators;
  const int c = n - d;
  if (static_cast<std::size_t>(c) <= cone.generators.size()) {
    auto minors = jacobian_minors(cone.generators, c);
    out.sing_ideal_gens.insert(out.sing_ideal_gens.end(), minors.begin(), minors.end());
  }
  GroebnerBasis gb = buchberger(out.sing_ideal_gens, MonomialOrder::grevlex(), options);
  HilbertData hd = hilbert_series(leading_ideal(gb), static_cast<std::size_t>(n));
  out.s = hd.dim_affine;
  out.empty = hd.dim_affine < 0;
  return out;
}

}  // namespace germ
