#pragma once

#include <span>
#include <vector>

#include "germ/groebner.hpp"
#include "germ/polyring.hpp"

namespace germ {

struct SingularLocusData {
  std::vector<Polynomial> sing_ideal_gens;  ///< cone generators + c x c minors
  /// Affine Zariski dimension over the algebraic closure; -1 when empty.
  int s = -1;
  bool empty = true;
};

/// Upper limit on binom(#gens, c) * binom(n, c).
inline constexpr std::size_t kMaxMinors = 100'000;

/// All nonzero c x c minors of the Jacobian matrix d g_i / d x_j, row-major
/// over (row subset, column subset) in lexicographic order.
std::vector<Polynomial> jacobian_minors(std::span<const Polynomial> gens, int c);

/// Jacobian criterion with expected codimension n - d on the (possibly
/// non-reduced) cone generators.
SingularLocusData singular_dimension(const TangentConeIdeal& cone, int n, int d,
                                     const BuchbergerOptions& options = {});

}  // namespace germ
