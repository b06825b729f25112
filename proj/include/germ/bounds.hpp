#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "germ/crofton.hpp"
#include "germ/polyring.hpp"

namespace germ {

/// A non-negative quantity or the explicit "unbounded" marker.
template <class T>
class Extended {
 public:
  Extended(T value) : value_(std::move(value)) {}  // NOLINT: implicit by intent
  static Extended unbounded() { return Extended(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  const T& value() const { return value_.value(); }

  bool operator==(const Extended& o) const { return value_ == o.value_; }

 private:
  Extended() = default;
  std::optional<T> value_;
};

using CountBound = Extended<Integer>;
using RealBound = Extended<double>;

enum class GermCase { empty, zero_dim, bounded, unbounded };
enum class PureDimSource { hypersurface_auto, user_flag, unknown };

/// Which exponent feeds the sigma_l bound inside the Lipschitz-Killing sum:
/// n - l - 1 (sections of dimension n - l) or l - 1 (the alternative reading).
enum class LkExponent { codimension, dimension };

std::string_view to_string(GermCase c);
std::string_view to_string(PureDimSource s);
std::string_view to_string(LkExponent e);

struct CaseClassification {
  int k = 0;
  GermCase kind = GermCase::unbounded;
  PureDimSource pure_dim_source = PureDimSource::unknown;
  std::string reason;
};

/// s = -1 encodes an empty singular locus. Requires 2 <= k <= n - 1.
CaseClassification classify(int n, int d, int s, int k, PureDimSource pure);

/// 0, mu, mu (2mu - 1)^(k-1) or unbounded according to the case.
CountBound betti_sum_bound(const Integer& mu, int k, GermCase kind);

/// (D + 1)(2D + 1)^(n - l - 1) with D the sum of the generator degrees.
Integer op_bound(std::span<const int> degrees, int n, int l);

/// Bound on the l-th local polar invariant. Requires 1 <= l <= n.
CountBound sigma_bound(const Integer& mu, int n, int d, int s, int l, PureDimSource pure,
                       LkExponent exponent = LkExponent::codimension);

/// Bound on the k-th local Lipschitz-Killing invariant, 1 <= k <= d.
/// k = d gives mu (the density). For k < d the sigma_l bounds for
/// k <= l < d need s < k and a pure-dimensional complexification; otherwise
/// the result is unbounded (no bound available).
RealBound lipschitz_killing_bound(const Integer& mu, int n, int d, int s, int k,
                                  PureDimSource pure, const CroftonMatrix& m,
                                  LkExponent exponent = LkExponent::codimension);

struct KBound {
  CaseClassification classification;
  CountBound betti_sum_bound = CountBound::unbounded();
};

template <class T>
struct IndexedBound {
  int index = 0;
  Extended<T> bound = Extended<T>::unbounded();
};

struct ReportFlags {
  LkExponent lk_exponent = LkExponent::codimension;
  std::size_t budget = 0;
  std::optional<std::pair<int, int>> requested_k;
};

/// Everything computed for one germ.
struct GermReport {
  std::string input;
  std::vector<std::string> vars;
  int n = 0;
  std::vector<int> degrees;
  std::vector<std::string> tangent_cone_generators;
  int d = 0;
  std::int64_t mu = 0;
  int s = -1;  ///< -1: empty singular locus
  PureDimSource pure_dim_source = PureDimSource::unknown;
  std::vector<KBound> per_k;
  std::vector<IndexedBound<Integer>> sigma_bounds;  ///< l = 1..n
  std::vector<IndexedBound<double>> lk_bounds;      ///< k = 1..d
  CountBound density_bound = CountBound::unbounded();
  Integer op_baseline_density = 0;
  ReportFlags flags;
};

}  // namespace germ
