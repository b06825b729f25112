#include "germ/analysis.hpp"

#include <algorithm>

#include "germ/crofton.hpp"
#include "germ/groebner.hpp"
#include "germ/hilbert.hpp"
#include "germ/singular.hpp"

namespace germ {

AnalysisResult analyze(const IdealFile& ideal, const AnalyzeOptions& options) {
  AnalysisResult result;
  GermReport& r = result.report;
  BuchbergerOptions bopts;
  bopts.max_pair_reductions = options.budget;

  r.input = options.input_label;
  r.vars = ideal.variables.names();
  r.n = static_cast<int>(ideal.variables.size());
  for (const auto& g : ideal.generators) r.degrees.push_back(g.total_degree());

  TangentConeIdeal cone = tangent_cone(ideal.generators, bopts);
  for (const auto& g : cone.generators) r.tangent_cone_generators.push_back(g.to_string());
  GermMultiplicity m = cone_multiplicity(cone, bopts);
  r.d = m.d;
  r.mu = m.mu;
  r.s = singular_dimension(cone, r.n, r.d, bopts).s;

  if (ideal.generators.size() == 1)
    r.pure_dim_source = PureDimSource::hypersurface_auto;
  else if (ideal.assume_pure_dimensional || options.assume_pure_dimensional)
    r.pure_dim_source = PureDimSource::user_flag;
  else
    r.pure_dim_source = PureDimSource::unknown;

  r.flags.lk_exponent = options.lk_exponent;
  r.flags.budget = options.budget;
  r.flags.requested_k = options.k_range;

  int lo = 2, hi = r.n - 1;
  if (options.k_range) {
    auto [a, b] = *options.k_range;
    if (a < lo || b > hi || a > b)
      result.k_range_violation = "requested k range " + std::to_string(a) + ".." +
                                 std::to_string(b) + " outside [2, " + std::to_string(hi) + "]";
    lo = std::max(lo, a);
    hi = std::min(hi, b);
  }
  const Integer mu(static_cast<long>(r.mu));
  for (int k = lo; k <= hi; ++k) {
    KBound kb;
    kb.classification = classify(r.n, r.d, r.s, k, r.pure_dim_source);
    kb.betti_sum_bound = betti_sum_bound(mu, k, kb.classification.kind);
    r.per_k.push_back(std::move(kb));
  }

  for (int l = 1; l <= r.n; ++l)
    r.sigma_bounds.push_back(
        {l, sigma_bound(mu, r.n, r.d, r.s, l, r.pure_dim_source, options.lk_exponent)});
  if (r.d >= 1) {
    CroftonMatrix M(r.n);
    for (int k = 1; k <= r.d; ++k)
      r.lk_bounds.push_back({k, lipschitz_killing_bound(mu, r.n, r.d, r.s, k, r.pure_dim_source,
                                                         M, options.lk_exponent)});
  }
  r.density_bound = mu;
  r.op_baseline_density = op_bound(r.degrees, r.n, r.d);
  return result;
}

}  // namespace germ
