#include "germ/report.hpp"

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

#ifndef GERM_VERSION
#define GERM_VERSION "0.0.0"
#endif

namespace germ {

namespace {

using Json = nlohmann::ordered_json;

Json integer(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return Json(std::strtod(buf, nullptr));
}

Json bound(const CountBound& b) { return b.is_finite() ? integer(b.value()) : Json("unbounded"); }
Json bound(const RealBound& b) { return b.is_finite() ? real(b.value()) : Json("unbounded"); }

}  // namespace

const char* version() { return GERM_VERSION; }

std::string emit_report(const GermReport& r) {
  Json j;
  j["input"] = r.input;
  j["n"] = r.n;
  j["vars"] = r.vars;
  j["degrees"] = r.degrees;
  j["tangent_cone_generators"] = r.tangent_cone_generators;
  j["dimension_d"] = r.d;
  j["multiplicity_mu"] = r.mu;
  j["singular_dimension_s"] = r.s;
  j["pure_dimensional"] = {{"value", r.pure_dim_source != PureDimSource::unknown},
                           {"source", std::string(to_string(r.pure_dim_source))}};

  Json per_k = Json::array();
  for (const auto& kb : r.per_k) {
    Json e;
    e["k"] = kb.classification.k;
    e["case"] = std::string(to_string(kb.classification.kind));
    e["betti_sum_bound"] = bound(kb.betti_sum_bound);
    e["reason"] = kb.classification.reason;
    per_k.push_back(std::move(e));
  }
  j["per_k"] = std::move(per_k);

  Json sigma = Json::array();
  for (const auto& s : r.sigma_bounds) sigma.push_back({{"l", s.index}, {"bound", bound(s.bound)}});
  j["sigma_bounds"] = std::move(sigma);

  Json lk = Json::array();
  for (const auto& b : r.lk_bounds) lk.push_back({{"k", b.index}, {"bound", bound(b.bound)}});
  j["lk_bounds"] = std::move(lk);

  j["density_bound"] = bound(r.density_bound);
  j["op_baseline_density"] = integer(r.op_baseline_density);

  Json flags;
  flags["lk_exponent"] = std::string(to_string(r.flags.lk_exponent));
  flags["budget"] = r.flags.budget;
  if (r.flags.requested_k)
    flags["k_range"] = {r.flags.requested_k->first, r.flags.requested_k->second};
  else
    flags["k_range"] = nullptr;
  flags["dimensions"] = "zariski, over the algebraic closure";
  j["flags"] = std::move(flags);

  j["versions"] = {{"germbound", GERM_VERSION}, {"gmp", gmp_version}};
  return j.dump(2) + "\n";
}

}  // namespace germ
