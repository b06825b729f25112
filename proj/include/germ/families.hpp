#pragma once

#include <span>
#include <vector>

#include "germ/parser.hpp"
#include "germ/polyring.hpp"

namespace germ {

/// (x^2 + y^2 - z^4)^2 + prod_{i=0}^{2l-1} (y - (2i - 2l + 1)/(2l) z^2), l >= 2.
/// Ovals degenerating onto a singular tangent line.
Polynomial family_g(int l);

/// prod_{r=0}^{2l-1} (x - r y) + z^2 + sum_{i=1}^{n-3} t_i^4 in Q[x, y, z, t1..],
/// n >= 3, l >= 2. Tangent cone V(z^2).
Polynomial family_f(int n, int l);

/// Product with a line: same generators, one more (unconstrained) variable.
std::vector<Polynomial> transform_product(std::span<const Polynomial> gens);

/// Embedding into a hyperplane: one more variable, added as a generator.
std::vector<Polynomial> transform_embed(std::span<const Polynomial> gens);

/// Union of a d-plane V and l planes W_i of dimension n - k through the
/// origin, all in general position; returned as the product of their linear
/// ideals. Requires n - k < d <= k and 2(n - k) <= n.
std::vector<Polynomial> family_linear_union(int n, int d, int k, int l);

/// Spanning vectors used for the planes, so callers can place sections.
struct LinearUnionPlanes {
  std::vector<std::vector<Rational>> v;               ///< basis of V
  std::vector<std::vector<std::vector<Rational>>> w;  ///< bases of W_1..W_l
};
LinearUnionPlanes linear_union_planes(int n, int d, int k, int l);

/// Wraps a family member as an ideal file; hypersurfaces and transforms of
/// them carry the pure-dimensional directive when `pure` is set.
IdealFile as_ideal_file(std::vector<Polynomial> gens, bool pure);

}  // namespace germ
