#pragma once

#include <random>
#include <string>
#include <vector>

#include "germ/parser.hpp"
#include "germ/polyring.hpp"

namespace testsupport {

using germ::Monomial;
using germ::Polynomial;
using germ::Rational;
using germ::VarList;

inline VarList vars(std::vector<std::string> names) { return VarList(std::move(names)); }

inline Polynomial P(const std::string& text, const VarList& v) {
  return germ::parse_polynomial(text, v);
}

// Random polynomials with small integer and rational coefficients.
struct PolyGen {
  std::mt19937_64 rng;
  explicit PolyGen(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Rational coeff() {
    int num = uniform(-9, 9);
    if (num == 0) num = 1;
    int den = uniform(0, 3) == 0 ? uniform(1, 5) : 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Monomial monomial(std::size_t n, int max_deg) {
    std::vector<germ::Exponent> e(n, 0);
    int budget = uniform(0, max_deg);
    for (int k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1))];
    return Monomial(e);
  }

  Polynomial poly(const VarList& v, int max_terms, int max_deg,
                  germ::MonomialOrder order = germ::MonomialOrder::grevlex()) {
    std::vector<germ::Term> terms;
    int t = uniform(0, max_terms);
    for (int k = 0; k < t; ++k) terms.push_back({coeff(), monomial(v.size(), max_deg)});
    return Polynomial::from_terms(v, std::move(terms), order);
  }

  Polynomial nonzero(const VarList& v, int max_terms, int max_deg,
                     germ::MonomialOrder order = germ::MonomialOrder::grevlex()) {
    for (;;) {
      Polynomial p = poly(v, max_terms, max_deg, order);
      if (!p.is_zero()) return p;
    }
  }
};

// Naive top-reduction written only in terms of ring operations; an oracle
// for the library's own normal form.
inline Polynomial naive_reduce(Polynomial f, const std::vector<Polynomial>& basis) {
  Polynomial rem(f.vars(), f.order());
  while (!f.is_zero()) {
    const germ::Term lt = f.leading_term();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lt.mono)) {
        f -= g.times_term(lt.coeff / g.leading_coeff(), lt.mono / g.leading_monomial());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Polynomial head = Polynomial::monomial(f.vars(), lt.coeff, lt.mono, f.order());
      rem += head;
      f -= head;
    }
  }
  return rem;
}

inline Polynomial naive_spoly(const Polynomial& f, const Polynomial& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_term(1 / f.leading_coeff(), l / f.leading_monomial()) -
         g.times_term(1 / g.leading_coeff(), l / g.leading_monomial());
}

// Independent Groebner criterion check.
inline bool all_spolys_reduce(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!naive_reduce(naive_spoly(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

// Number of degree-t monomials in n variables not divisible by any generator.
inline long brute_force_count(const std::vector<Monomial>& gens, std::size_t n, unsigned t) {
  long count = 0;
  std::vector<germ::Exponent> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      Monomial m(e);
      bool standard = true;
      for (const auto& g : gens) standard = standard && !g.divides(m);
      if (standard) ++count;
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, t);
  return count;
}

}  // namespace testsupport
