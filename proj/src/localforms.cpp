#include "germ/localforms.hpp"

#include <stdexcept>

namespace germ {

namespace {

Rational rational_pow(const Rational& base, long e) {
  Rational out = 1;
  Rational b = e >= 0 ? base : Rational(1 / base);
  for (unsigned long k = static_cast<unsigned long>(e >= 0 ? e : -e); k != 0; k >>= 1) {
    if (k & 1u) out *= b;
    b *= b;
  }
  return out;
}

}  // namespace

InitialForm initial_part(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("initial_part: zero polynomial");
  unsigned mu = f.terms().front().mono.degree();
  for (const auto& t : f.terms()) mu = std::min(mu, t.mono.degree());
  std::vector<Term> low;
  for (const auto& t : f.terms())
    if (t.mono.degree() == mu) low.push_back(t);
  return {mu, Polynomial::from_terms(f.vars(), std::move(low), f.order())};
}

Polynomial conic_blowup(const Polynomial& f, const Rational& eps) {
  InitialForm in = initial_part(f);
  if (sgn(eps) == 0) return in.init;
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms())
    terms.push_back({t.coeff * rational_pow(eps, long(t.mono.degree()) - long(in.mu)), t.mono});
  return Polynomial::from_terms(f.vars(), std::move(terms), f.order());
}

Polynomial undo_conic_blowup(const Polynomial& g, unsigned mu, const Rational& eps) {
  if (sgn(eps) == 0) throw std::invalid_argument("undo_conic_blowup: eps must be nonzero");
  std::vector<Term> terms;
  terms.reserve(g.size());
  for (const auto& t : g.terms())
    terms.push_back({t.coeff * rational_pow(eps, long(mu) - long(t.mono.degree())), t.mono});
  return Polynomial::from_terms(g.vars(), std::move(terms), g.order());
}

}  // namespace germ
