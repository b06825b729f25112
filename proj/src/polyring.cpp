#include "germ/polyring.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace germ {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  out.degree_ += other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  assert(other.divides(*this));
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= other.exps_[i];
  out.degree_ -= other.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

// ----------------------------------------------------------- MonomialOrder

namespace {

int sign_of(long v) { return (v > 0) - (v < 0); }

int compare_revlex_tail(const std::vector<Exponent>& a, const std::vector<Exponent>& b,
                        std::size_t skip) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (i == skip) continue;
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  switch (kind) {
    case OrderKind::lex:
      for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
      return 0;
    case OrderKind::grlex:
      if (a.degree() != b.degree()) return sign_of(long(a.degree()) - long(b.degree()));
      for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
      return 0;
    case OrderKind::grevlex:
      if (a.degree() != b.degree()) return sign_of(long(a.degree()) - long(b.degree()));
      return compare_revlex_tail(ea, eb, ea.size());
    case OrderKind::graded_distinguished:
      if (a.degree() != b.degree()) return sign_of(long(a.degree()) - long(b.degree()));
      if (ea[distinguished] != eb[distinguished])
        return ea[distinguished] > eb[distinguished] ? 1 : -1;
      return compare_revlex_tail(ea, eb, distinguished);
  }
  return 0;
}

// ----------------------------------------------------------------- VarList

std::size_t VarList::index_of(const std::string& name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  return static_cast<std::size_t>(it - names_->begin());
}

std::string fresh_variable_name(const VarList& vars, const std::string& stem) {
  if (vars.index_of(stem) == vars.size()) return stem;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (vars.index_of(candidate) == vars.size()) return candidate;
  }
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(VarList vars, MonomialOrder order)
    : vars_(std::move(vars)), order_(order) {}

Polynomial::Polynomial(VarList vars, MonomialOrder order, std::vector<Term> sorted_terms)
    : vars_(std::move(vars)), order_(order), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::from_terms(VarList vars, std::vector<Term> terms, MonomialOrder order) {
  for (const auto& t : terms)
    if (t.mono.size() != vars.size())
      throw std::invalid_argument("monomial length does not match variable count");
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && sgn(merged.back().coeff) == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && sgn(merged.back().coeff) == 0) merged.pop_back();
  return Polynomial(std::move(vars), order, std::move(merged));
}

Polynomial Polynomial::constant(VarList vars, const Rational& c, MonomialOrder order) {
  std::size_t n = vars.size();
  return monomial(std::move(vars), c, Monomial(n), order);
}

Polynomial Polynomial::variable(VarList vars, std::size_t index, MonomialOrder order) {
  if (index >= vars.size()) throw std::out_of_range("variable index out of range");
  Monomial m(vars.size());
  m.set(index, 1);
  return monomial(std::move(vars), Rational(1), std::move(m), order);
}

Polynomial Polynomial::monomial(VarList vars, const Rational& c, Monomial m,
                                MonomialOrder order) {
  if (m.size() != vars.size())
    throw std::invalid_argument("monomial length does not match variable count");
  std::vector<Term> terms;
  if (sgn(c) != 0) terms.push_back({c, std::move(m)});
  return Polynomial(std::move(vars), order, std::move(terms));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::total_degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  std::vector<Term> terms = terms_;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  return Polynomial(vars_, order, std::move(terms));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coeff();
  return scaled(inv);
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(vars_, order_);
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  if (sgn(c) == 0) return Polynomial(vars_, order_);
  Polynomial out(*this);
  for (auto& t : out.terms_) {
    t.coeff *= c;
    t.mono = t.mono * m;
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    Exponent e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    terms.push_back({t.coeff * e, std::move(m)});
  }
  return from_terms(vars_, std::move(terms), order_);
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(vars_, 1, order_);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

void Polynomial::require_compatible(const Polynomial& g, const char* op) const {
  if (!(vars_ == g.vars_))
    throw std::invalid_argument(std::string(op) + ": variable lists differ");
  if (!(order_ == g.order_))
    throw std::invalid_argument(std::string(op) + ": monomial orders differ");
}

void Polynomial::add_scaled_product(const Rational& c, const Monomial& m, const Polynomial& g) {
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size()) gm = g.terms_[j].mono * m;
    int cmp = i == terms_.size()     ? -1
              : j == g.terms_.size() ? 1
                                     : order_.compare(terms_[i].mono, gm);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({c * g.terms_[j++].coeff, std::move(gm)});
    } else {
      Rational s = terms_[i].coeff + c * g.terms_[j].coeff;
      if (sgn(s) != 0) out.push_back({std::move(s), std::move(terms_[i].mono)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_compatible(g, "add");
  add_scaled_product(1, Monomial(nvars()), g);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  require_compatible(g, "subtract");
  add_scaled_product(-1, Monomial(nvars()), g);
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.require_compatible(g, "mul");
  std::vector<Term> terms;
  terms.reserve(f.size() * g.size());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) terms.push_back({a.coeff * b.coeff, a.mono * b.mono});
  return Polynomial::from_terms(f.vars_, std::move(terms), f.order_);
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (!(vars_ == g.vars_) || terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != g.terms_[i].coeff || !(terms_[i].mono == g.terms_[i].mono))
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    bool negative = sgn(t.coeff) < 0;
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(t.coeff);
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      Exponent e = t.mono[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }

// ---------------------------------------------------------------- Division

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      MonomialOrder order) {
  std::vector<Polynomial> divs;
  divs.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) throw std::invalid_argument("divide: zero divisor");
    if (!(d.vars() == f.vars())) throw std::invalid_argument("divide: variable lists differ");
    divs.push_back(d.with_order(order));
  }
  Polynomial p = f.with_order(order);
  std::vector<std::vector<Term>> quot(divs.size());
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term lt = p.terms_.front();
    bool reduced = false;
    for (std::size_t i = 0; i < divs.size(); ++i) {
      const Term& dl = divs[i].leading_term();
      if (!dl.mono.divides(lt.mono)) continue;
      Rational c = lt.coeff / dl.coeff;
      Monomial m = lt.mono / dl.mono;
      p.add_scaled_product(-c, m, divs[i]);
      quot[i].push_back({std::move(c), std::move(m)});
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      p.terms_.erase(p.terms_.begin());
    }
  }
  DivisionResult result{{}, Polynomial(f.vars(), order, std::move(rem))};
  for (auto& q : quot) result.quotients.push_back(Polynomial(f.vars(), order, std::move(q)));
  return result;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  Polynomial p = f;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& lt = p.terms_.front();
    const Polynomial* hit = nullptr;
    for (const auto& d : divisors) {
      if (d.leading_monomial().divides(lt.mono)) {
        hit = &d;
        break;
      }
    }
    if (hit == nullptr) {
      rem.push_back(lt);
      p.terms_.erase(p.terms_.begin());
      continue;
    }
    Rational c = lt.coeff / hit->leading_coeff();
    Monomial m = lt.mono / hit->leading_monomial();
    p.add_scaled_product(-c, m, *hit);
  }
  return Polynomial(f.vars(), f.order(), std::move(rem));
}

Polynomial extend_ring(const Polynomial& f, const VarList& wider) {
  if (wider.size() < f.nvars())
    throw std::invalid_argument("extend_ring: target ring is smaller");
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (wider[i] != f.vars()[i])
      throw std::invalid_argument("extend_ring: target ring does not extend the source");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e = t.mono.exponents();
    e.resize(wider.size(), 0);
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(wider, std::move(terms), f.order());
}

}  // namespace germ
