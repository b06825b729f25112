#pragma once

#include "germ/polyring.hpp"

namespace germ {

/// Lowest-degree homogeneous part of a polynomial germ.
struct InitialForm {
  unsigned mu = 0;  ///< order of vanishing at the origin
  Polynomial init;  ///< homogeneous of degree mu
};

/// Throws std::invalid_argument on the zero polynomial.
InitialForm initial_part(const Polynomial& f);

/// f(eps*X) / eps^mu(f). Equals Init(f) at eps = 0 and f at eps = 1.
Polynomial conic_blowup(const Polynomial& f, const Rational& eps);

/// f(X / eps) * eps^mu(f); inverts conic_blowup for eps != 0.
Polynomial undo_conic_blowup(const Polynomial& g, unsigned mu, const Rational& eps);

}  // namespace germ
