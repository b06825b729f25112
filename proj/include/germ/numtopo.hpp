#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "germ/polyring.hpp"

namespace germ {

/// Closed interval of doubles, rounded outward on every operation.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double v) : lo(v), hi(v) {}  // NOLINT: implicit point interval
  Interval(double l, double h) : lo(l), hi(h) {}

  static Interval enclose(const Rational& q);
  static Interval hull(const Interval& a, const Interval& b);

  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
  double width() const { return hi - lo; }

  /// [a^e] using the exact shape of x^e (even powers are nonnegative).
  Interval pow(unsigned e) const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Intersection of two enclosures of the same quantity.
Interval meet(const Interval& a, const Interval& b);

struct Rect {
  double xmin, xmax, ymin, ymax;
};

/// Dense polynomial in two variables with interval coefficients;
/// coeff(i, j) multiplies u^i v^j.
class BivariatePoly {
 public:
  BivariatePoly(unsigned deg_u, unsigned deg_v);

  /// Substitutes `fixed` exactly, then rounds coefficients outward. Every
  /// variable other than the two free ones must be fixed.
  static BivariatePoly from_polynomial(const Polynomial& f, const std::string& u,
                                       const std::string& v,
                                       const std::map<std::string, Rational>& fixed);

  unsigned deg_u() const { return du_; }
  unsigned deg_v() const { return dv_; }
  Interval& coeff(unsigned i, unsigned j) { return c_[i * (dv_ + 1) + j]; }
  const Interval& coeff(unsigned i, unsigned j) const { return c_[i * (dv_ + 1) + j]; }

  /// Nested Horner evaluation over interval arguments.
  Interval horner(const Interval& u, const Interval& v) const;

 private:
  unsigned du_, dv_;
  std::vector<Interval> c_;
};

/// Enclosure of f over the cell: Horner form intersected with a centered
/// Taylor form, tightened further when a partial derivative keeps its sign.
Interval interval_eval(const BivariatePoly& f, const Rect& cell);
/// Convenience overload for a polynomial in exactly two variables.
Interval interval_eval(const Polynomial& f, const Rect& cell);

struct SectionSpec {
  Polynomial f;
  std::map<std::string, Rational> fixed_assignments;
  /// The two remaining variables, in ring order.
  std::string free_u, free_v;
  Rect box;
  double resolution;
  std::uint64_t cell_budget = 10'000'000;
  std::optional<std::string> csv_path;

  /// Derives the free variables from the ring and validates the spec.
  static SectionSpec make(Polynomial f, std::map<std::string, Rational> fixed, Rect box,
                          double resolution);
};

enum class CountStatus { certified_lower_bound, heuristic };
std::string to_string(CountStatus s);

struct ComponentCount {
  std::int64_t count = 0;
  CountStatus status = CountStatus::heuristic;
  std::uint64_t cells_examined = 0;
  std::uint64_t occupied_cells = 0;
  unsigned depth = 0;
};

/// Quadtree subdivision down to the resolution; occupied leaves are merged
/// through shared edges. Throws ResourceError past the cell budget.
ComponentCount count_components(const SectionSpec& spec);

/// Reduces a list of generators to one equation with the same real zeros.
Polynomial sum_of_squares(const std::vector<Polynomial>& gens);

}  // namespace germ
