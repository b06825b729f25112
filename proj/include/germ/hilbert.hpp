#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "germ/groebner.hpp"
#include "germ/polyring.hpp"

namespace germ {

/// Hilbert series h(t)/(1-t)^n of S/M for a monomial ideal M in n variables.
struct HilbertData {
  std::size_t nvars = 0;
  std::vector<Integer> numerator;  ///< h(t), coefficient of t^i at index i
  /// Krull dimension of S/M; -1 when M is the unit ideal.
  int dim_affine = -1;
  /// h reduced by (1-t)^(n-dim), evaluated at 1. Zero only for the unit ideal.
  Integer degree = 0;
  /// Rational coefficients, constant term first; empty when dim_affine <= 0.
  std::vector<Rational> hilbert_polynomial;

  /// dim_K (S/M)_t, read off the series.
  Integer hilbert_function(unsigned t) const;
  /// Hilbert polynomial evaluated at t.
  Rational hilbert_polynomial_at(long t) const;
};

/// Minimal monomial generators of the leading-term ideal.
std::vector<Monomial> leading_ideal(const GroebnerBasis& gb);

std::vector<Monomial> minimalize(std::vector<Monomial> gens);

HilbertData hilbert_series(std::span<const Monomial> gens, std::size_t nvars);

struct GermMultiplicity {
  int d = 0;
  std::int64_t mu = 0;
};

/// Dimension and multiplicity of the germ at the origin, via its tangent cone.
GermMultiplicity germ_multiplicity(std::span<const Polynomial> gens,
                                   const BuchbergerOptions& options = {});

/// Same, starting from an already-computed tangent cone.
GermMultiplicity cone_multiplicity(const TangentConeIdeal& cone,
                                   const BuchbergerOptions& options = {});

}  // namespace germ
