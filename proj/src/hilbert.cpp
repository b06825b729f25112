#include "germ/hilbert.hpp"

#include <algorithm>

namespace germ {

namespace {

using UPoly = std::vector<Integer>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly add(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

UPoly shift(const UPoly& a, unsigned k) {
  if (a.empty()) return a;
  UPoly out(k, 0);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

UPoly multiply(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Integer eval_at_one(const UPoly& p) {
  Integer s = 0;
  for (const auto& c : p) s += c;
  return s;
}

// Exact division by (1 - t); requires p(1) == 0.
UPoly divide_one_minus_t(const UPoly& p) {
  // p = (1 - t) q  =>  q_i = sum_{j<=i} p_j
  UPoly q(p.size() > 0 ? p.size() - 1 : 0, 0);
  Integer run = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    run += p[i];
    q[i] = run;
  }
  trim(q);
  return q;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!Monomial::coprime(gens[i], gens[j])) return false;
  return true;
}

// Numerator of the Hilbert series of S/M by the pivot recursion
// N(M) = N(M + (x)) + t * N(M : x).
UPoly numerator(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {};
  if (pairwise_coprime(gens)) {
    UPoly out{1};
    for (const auto& g : gens) {
      UPoly factor(g.degree() + 1, 0);
      factor[0] = 1;
      factor[g.degree()] = -1;
      out = multiply(out, factor);
    }
    return out;
  }
  std::size_t pivot = 0, best = 0;
  for (std::size_t v = 0; v < nvars; ++v) {
    std::size_t count = 0;
    for (const auto& g : gens) count += g[v] != 0;
    if (count > best) {
      best = count;
      pivot = v;
    }
  }
  Monomial x(nvars);
  x.set(pivot, 1);

  std::vector<Monomial> plus = gens;
  plus.push_back(x);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g[pivot] != 0 ? g / x : g);

  return add(numerator(std::move(plus), nvars), shift(numerator(std::move(colon), nvars), 1));
}

Integer binomial(long top, long bottom) {
  if (bottom < 0 || top < bottom) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), Integer(top).get_mpz_t(), static_cast<unsigned long>(bottom));
  return out;
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return a.exponents() < b.exponents();
            });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool covered = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Monomial> leading_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lts;
  lts.reserve(gb.basis.size());
  for (const auto& g : gb.basis) lts.push_back(g.leading_monomial());
  return minimalize(std::move(lts));
}

HilbertData hilbert_series(std::span<const Monomial> gens, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.size() != nvars)
      throw std::invalid_argument("hilbert_series: monomial length does not match nvars");
  HilbertData out;
  out.nvars = nvars;
  out.numerator = numerator(std::vector<Monomial>(gens.begin(), gens.end()), nvars);
  if (out.numerator.empty()) return out;  // unit ideal

  UPoly h = out.numerator;
  std::size_t cancelled = 0;
  while (eval_at_one(h) == 0) {
    h = divide_one_minus_t(h);
    ++cancelled;
  }
  out.dim_affine = static_cast<int>(nvars - cancelled);
  out.degree = eval_at_one(h);

  const int d = out.dim_affine;
  if (d >= 1) {
    // HP(t) = sum_j h_j * C(t - j + d - 1, d - 1)
    std::vector<Rational> hp(static_cast<std::size_t>(d), 0);
    Integer fact = 1;
    for (int m = 2; m <= d - 1; ++m) fact *= m;
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (h[j] == 0) continue;
      std::vector<Rational> prod{Rational(1)};
      for (int m = 1; m <= d - 1; ++m) {
        // multiply by (t + (m - j))
        Rational c = m - static_cast<long>(j);
        std::vector<Rational> next(prod.size() + 1, 0);
        for (std::size_t i = 0; i < prod.size(); ++i) {
          next[i] += prod[i] * c;
          next[i + 1] += prod[i];
        }
        prod = std::move(next);
      }
      for (std::size_t i = 0; i < prod.size(); ++i)
        hp[i] += prod[i] * Rational(h[j]) / Rational(fact);
    }
    for (auto& c : hp) c.canonicalize();
    out.hilbert_polynomial = std::move(hp);
  }
  return out;
}

Integer HilbertData::hilbert_function(unsigned t) const {
  Integer s = 0;
  for (std::size_t j = 0; j < numerator.size() && j <= t; ++j) {
    if (nvars == 0) {
      if (j == t) s += numerator[j];
      continue;
    }
    s += numerator[j] * binomial(static_cast<long>(t - j + nvars - 1), static_cast<long>(nvars - 1));
  }
  return s;
}

Rational HilbertData::hilbert_polynomial_at(long t) const {
  Rational s = 0, power = 1;
  for (const auto& c : hilbert_polynomial) {
    s += c * power;
    power *= t;
  }
  return s;
}

GermMultiplicity cone_multiplicity(const TangentConeIdeal& cone,
                                   const BuchbergerOptions& options) {
  GroebnerBasis gb = buchberger(cone.generators, MonomialOrder::grevlex(), options);
  HilbertData hd = hilbert_series(leading_ideal(gb), cone.vars.size());
  return {hd.dim_affine, hd.degree.get_si()};
}

GermMultiplicity germ_multiplicity(std::span<const Polynomial> gens,
                                   const BuchbergerOptions& options) {
  return cone_multiplicity(tangent_cone(gens, options), options);
}

}  // namespace germ
