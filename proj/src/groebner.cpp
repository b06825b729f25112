#include "germ/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "germ/errors.hpp"
#include "germ/localforms.hpp"

namespace germ {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  Monomial l = Monomial::lcm(lf.mono, lg.mono);
  return f.times_term(1 / lf.coeff, l / lf.mono) - g.times_term(1 / lg.coeff, l / lg.mono);
}

namespace {

struct PairKey {
  unsigned degree;
  std::size_t i;
  std::size_t j;
  bool operator<(const PairKey& o) const {
    return std::tie(degree, i, j) < std::tie(o.degree, o.i, o.j);
  }
};

// Reduced form of a minimal basis: interreduce tails, monic, sorted ascending.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, const MonomialOrder& order) {
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& a = g[j].leading_monomial();
      const Monomial& b = g[i].leading_monomial();
      if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    // Leading term survives: no other leading monomial divides it.
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, MonomialOrder order,
                         const BuchbergerOptions& options) {
  if (gens.empty()) throw std::invalid_argument("buchberger: no generators");
  GroebnerBasis out;
  out.order = order;
  const VarList& vars = gens.front().vars();

  std::vector<Polynomial> g;
  for (const auto& f : gens) {
    if (f.is_zero()) throw std::invalid_argument("buchberger: zero generator");
    if (!(f.vars() == vars)) throw std::invalid_argument("buchberger: variable lists differ");
    out.source.push_back(f);
    g.push_back(f.with_order(order).monic());
  }

  std::set<PairKey> queue;
  std::vector<std::vector<char>> pending;
  auto add_element = [&](std::size_t k) {
    pending.emplace_back(k + 1, 0);
    for (auto& row : pending) row.resize(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      unsigned deg = Monomial::lcm(g[i].leading_monomial(), g[k].leading_monomial()).degree();
      queue.insert({deg, i, k});
      pending[k][i] = pending[i][k] = 1;
    }
  };
  for (std::size_t k = 0; k < g.size(); ++k) add_element(k);

  while (!queue.empty()) {
    PairKey p = *queue.begin();
    queue.erase(queue.begin());
    pending[p.i][p.j] = pending[p.j][p.i] = 0;

    const Monomial& li = g[p.i].leading_monomial();
    const Monomial& lj = g[p.j].leading_monomial();
    if (Monomial::coprime(li, lj)) continue;
    Monomial l = Monomial::lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (pending[p.i][k] || pending[p.j][k]) continue;
      if (g[k].leading_monomial().divides(l)) chain = true;
    }
    if (chain) continue;

    if (++out.pair_reductions > options.max_pair_reductions)
      throw ResourceError("groebner", "pair-reduction budget of " +
                                          std::to_string(options.max_pair_reductions) +
                                          " exceeded");
    Polynomial h = normal_form(s_polynomial(g[p.i], g[p.j]), g);
    if (h.is_zero()) continue;
    g.push_back(h.monic());
    add_element(g.size() - 1);
  }

  out.basis = reduce_basis(std::move(g), order);
  return out;
}

bool is_groebner_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

bool generates_within(std::span<const Polynomial> gens, std::span<const Polynomial> basis) {
  if (basis.empty()) return false;
  for (const auto& f : gens)
    if (!normal_form(f.with_order(basis.front().order()), basis).is_zero()) return false;
  return true;
}

Polynomial homogenize(const Polynomial& f, const VarList& wider) {
  if (wider.size() != f.nvars() + 1)
    throw std::invalid_argument("homogenize: ring must add exactly one variable");
  int d = f.total_degree();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e;
    e.reserve(wider.size());
    e.push_back(static_cast<Exponent>(d - static_cast<int>(t.mono.degree())));
    e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(wider, std::move(terms), MonomialOrder::graded_with_first(0));
}

namespace {

Polynomial dehomogenize(const Polynomial& f, const VarList& narrow) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(narrow, std::move(terms), MonomialOrder::grevlex());
}

}  // namespace

TangentConeIdeal tangent_cone(std::span<const Polynomial> gens,
                              const BuchbergerOptions& options) {
  if (gens.empty()) throw std::invalid_argument("tangent_cone: no generators");
  const VarList& vars = gens.front().vars();
  std::vector<std::string> names{fresh_variable_name(vars, "w")};
  names.insert(names.end(), vars.names().begin(), vars.names().end());
  VarList wider(std::move(names));

  std::vector<Polynomial> homog;
  for (const auto& f : gens) {
    if (f.is_zero()) throw std::invalid_argument("tangent_cone: zero generator");
    homog.push_back(homogenize(f, wider));
  }
  GroebnerBasis gb = buchberger(homog, MonomialOrder::graded_with_first(0), options);

  std::vector<Polynomial> inits;
  for (const auto& h : gb.basis) {
    InitialForm in = initial_part(dehomogenize(h, vars));
    if (in.mu == 0)
      throw HypothesisError("groebner", "unit ideal: the germ is empty at the origin");
    inits.push_back(in.init);
  }
  GroebnerBasis cone = buchberger(inits, MonomialOrder::grevlex(), options);
  return {vars, std::move(cone.basis)};
}

}  // namespace germ
