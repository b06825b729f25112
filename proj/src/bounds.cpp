#include "germ/bounds.hpp"

#include <numeric>
#include <stdexcept>

namespace germ {

std::string_view to_string(GermCase c) {
  switch (c) {
    case GermCase::empty: return "empty";
    case GermCase::zero_dim: return "zero_dim";
    case GermCase::bounded: return "bounded";
    case GermCase::unbounded: return "unbounded";
  }
  return "?";
}

std::string_view to_string(PureDimSource s) {
  switch (s) {
    case PureDimSource::hypersurface_auto: return "hypersurface-auto";
    case PureDimSource::user_flag: return "user-flag";
    case PureDimSource::unknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(LkExponent e) {
  switch (e) {
    case LkExponent::codimension: return "default";
    case LkExponent::dimension: return "paper-display";
  }
  return "?";
}

namespace {

Integer ipow(const Integer& base, long e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

Integer oleinik_petrovsky(const Integer& mu, long exponent) {
  return mu * ipow(2 * mu - 1, exponent);
}

}  // namespace

CaseClassification classify(int n, int d, int s, int k, PureDimSource pure) {
  if (k < 2 || k > n - 1)
    throw std::invalid_argument("classify: k = " + std::to_string(k) + " outside [2, " +
                                std::to_string(n - 1) + "]");
  CaseClassification c{k, GermCase::unbounded, pure, {}};
  if (k < n - d) {
    c.kind = GermCase::empty;
    c.reason = "k < n - d: generic affine k-planes avoid the germ";
  } else if (k == n - d) {
    c.kind = GermCase::zero_dim;
    c.reason = "k = n - d: generic sections are finite with at most mu points";
  } else if (k >= n - s) {
    c.kind = GermCase::unbounded;
    c.reason = "k >= n - s: pure-dimensional counter-example families of type (n, k, s) exist";
  } else if (pure == PureDimSource::unknown) {
    c.kind = GermCase::unbounded;
    c.reason =
        "pure dimensionality of the complexification not established; counter-example "
        "families without it exist for every s";
  } else {
    c.kind = GermCase::bounded;
    c.reason = "n - d < k < n - s with pure-dimensional complexification";
  }
  return c;
}

CountBound betti_sum_bound(const Integer& mu, int k, GermCase kind) {
  switch (kind) {
    case GermCase::empty: return Integer(0);
    case GermCase::zero_dim: return mu;
    case GermCase::bounded: return oleinik_petrovsky(mu, k - 1);
    case GermCase::unbounded: return CountBound::unbounded();
  }
  return CountBound::unbounded();
}

Integer op_bound(std::span<const int> degrees, int n, int l) {
  if (l >= n) throw std::invalid_argument("op_bound: requires l < n");
  if (l < 0) throw std::invalid_argument("op_bound: requires l >= 0");
  Integer total = 0;
  for (int d : degrees) total += d;
  return (total + 1) * ipow(2 * total + 1, n - l - 1);
}

CountBound sigma_bound(const Integer& mu, int n, int d, int s, int l, PureDimSource pure,
                       LkExponent exponent) {
  if (l < 1 || l > n) throw std::invalid_argument("sigma_bound: l outside [1, n]");
  if (l > d) return Integer(0);
  if (l == d) return mu;
  if (s < l && pure != PureDimSource::unknown)
    return oleinik_petrovsky(mu, exponent == LkExponent::codimension ? n - l - 1 : l - 1);
  return CountBound::unbounded();
}

RealBound lipschitz_killing_bound(const Integer& mu, int n, int d, int s, int k,
                                  PureDimSource pure, const CroftonMatrix& m,
                                  LkExponent exponent) {
  if (k < 1 || k > d) throw std::invalid_argument("lipschitz_killing_bound: k outside [1, d]");
  if (m.n() < d) throw std::invalid_argument("lipschitz_killing_bound: matrix too small");
  double total = m.at(k, d) * mu.get_d();
  for (int l = k; l < d; ++l) {
    CountBound sigma = sigma_bound(mu, n, d, s, l, pure, exponent);
    if (!sigma.is_finite()) return RealBound::unbounded();
    total += m.at(k, l) * sigma.value().get_d();
  }
  return total;
}

}  // namespace germ
