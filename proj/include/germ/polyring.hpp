#pragma once

// Exact multivariate polynomials over Q with dense exponent vectors.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace germ {

using Rational = mpq_class;
using Integer = mpz_class;
using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, Exponent e);

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const noexcept {
    return exps_ == other.exps_;
  }

 private:
  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

enum class OrderKind {
  grevlex,
  grlex,
  lex,
  /// Total degree, then the exponent of one distinguished variable (larger
  /// wins), then grevlex. Used to homogenize towards the lowest-degree part.
  graded_distinguished,
};

struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t distinguished = 0;

  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder grlex() { return {OrderKind::grlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder graded_with_first(std::size_t var) {
    return {OrderKind::graded_distinguished, var};
  }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder&) const = default;
};

/// Shared, immutable list of variable names. Equality is by content.
class VarList {
 public:
  VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit VarList(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }

  /// Index of `name`, or size() when absent.
  std::size_t index_of(const std::string& name) const;

  bool operator==(const VarList& other) const {
    return names_ == other.names_ || *names_ == *other.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

struct Term {
  Rational coeff;
  Monomial mono;
};

class Polynomial;
struct DivisionResult;
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      MonomialOrder order);
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

class Polynomial {
 public:
  /// The zero polynomial in the given ring.
  explicit Polynomial(VarList vars, MonomialOrder order = MonomialOrder::grevlex());

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(VarList vars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial constant(VarList vars, const Rational& c,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial variable(VarList vars, std::size_t index,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial monomial(VarList vars, const Rational& c, Monomial m,
                             MonomialOrder order = MonomialOrder::grevlex());

  const VarList& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_homogeneous() const noexcept;

  /// Leading data under the active order. Require a nonzero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  /// Maximal total degree; -1 for the zero polynomial.
  int total_degree() const noexcept;

  /// Coefficient of `m`, zero when absent.
  Rational coefficient(const Monomial& m) const;

  /// Explicit re-sort under another order.
  Polynomial with_order(MonomialOrder order) const;

  Polynomial monic() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Rational& c, const Monomial& m) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial pow(unsigned e) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  /// Same ring and identical canonical term lists.
  bool operator==(const Polynomial& g) const;

  /// Human-readable form in the ideal-file grammar, e.g. "x^2 - 3/2*y^3".
  std::string to_string() const;

 private:
  Polynomial(VarList vars, MonomialOrder order, std::vector<Term> sorted_terms);
  void require_compatible(const Polynomial& g, const char* op) const;
  // this += c * m * g, terms merged in order
  void add_scaled_product(const Rational& c, const Monomial& m, const Polynomial& g);

  friend DivisionResult divide(const Polynomial&, std::span<const Polynomial>,
                               MonomialOrder);
  friend Polynomial normal_form(const Polynomial&, std::span<const Polynomial>);

  VarList vars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division. Divisors are tried in list order; the remainder
/// has no monomial divisible by any divisor's leading monomial.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      MonomialOrder order);

/// Remainder-only division (full normal form), used by Buchberger.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

/// Appends fresh variables to the ring, keeping all exponents.
Polynomial extend_ring(const Polynomial& f, const VarList& wider);

/// Returns a variable name not already in `vars`, preferring `stem`.
std::string fresh_variable_name(const VarList& vars, const std::string& stem);

}  // namespace germ
