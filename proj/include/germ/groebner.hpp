#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "germ/polyring.hpp"

namespace germ {

struct BuchbergerOptions {
  /// Hard cap on S-pair reductions; exceeding it throws ResourceError.
  std::size_t max_pair_reductions = 1'000'000;
};

/// Reduced Groebner basis: monic elements sorted by ascending leading monomial.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> basis;
  std::vector<Polynomial> source;
  std::size_t pair_reductions = 0;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first, ties broken by basis index) and both Buchberger criteria.
GroebnerBasis buchberger(std::span<const Polynomial> gens, MonomialOrder order,
                         const BuchbergerOptions& options = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Direct check of the S-pair criterion: every S-polynomial of basis pairs
/// reduces to zero. Elements must share one ring and one order.
bool is_groebner_basis(std::span<const Polynomial> basis);

/// True when every generator reduces to zero modulo `basis`.
bool generates_within(std::span<const Polynomial> gens, std::span<const Polynomial> basis);

/// Generators of the initial ideal Init(I) of the local ring at the origin.
struct TangentConeIdeal {
  VarList vars;
  std::vector<Polynomial> generators;  ///< homogeneous, reduced grevlex basis
};

/// Homogenizes `f` to its total degree with variable 0 of `wider` as the
/// homogenizing variable; `wider` is [w, vars of f...].
Polynomial homogenize(const Polynomial& f, const VarList& wider);

/// Tangent cone by homogenization: a Groebner basis of the homogenized
/// generators under a graded order favouring w, dehomogenized, is a standard
/// basis for the local degree order; its initial parts generate Init(I).
/// Throws HypothesisError when I is the unit ideal at the origin.
TangentConeIdeal tangent_cone(std::span<const Polynomial> gens,
                              const BuchbergerOptions& options = {});

}  // namespace germ
