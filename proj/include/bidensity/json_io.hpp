#pragma once

#include <json.hpp>

#include "bidensity/certify.hpp"
#include "bidensity/exact.hpp"
#include "bidensity/gap.hpp"
#include "bidensity/spectral.hpp"
#include "bidensity/suites.hpp"

namespace bidensity {

// Key order is part of the output contract: identical inputs must serialize
// to byte-identical JSON (schemas under docs/).
using ordered_json = nlohmann::ordered_json;

inline ordered_json certificate_to_json(const Certificate& c) {
  ordered_json j;
  j["variant"] = variant_name(c.variant);
  j["x"] = c.x_set;
  j["y"] = c.y_set;
  j["edges"] = c.edges;
  j["density"] = c.density;
  j["lambda"] = c.lambda;
  j["guarantee_factor"] = c.guarantee_factor;
  j["min_side_factor"] = c.min_side_factor;
  j["side"] = c.side;
  j["converged"] = c.converged;
  return j;
}

inline ordered_json exact_m_to_json(const ExactMResult& m) {
  ordered_json j;
  j["value"] = m.value;
  j["edges"] = m.edges;
  j["x"] = m.x_witness;
  j["y"] = m.y_witness;
  j["subsets_scanned"] = m.subsets_scanned;
  return j;
}

inline ordered_json spectral_to_json(const SpectralResult& s) {
  ordered_json j;
  j["lambda_max"] = s.lambda_max;
  j["iterations"] = s.iterations;
  j["residual"] = s.residual;
  j["converged"] = s.converged;
  return j;
}

inline ordered_json gap_report_to_json(const GapReport& r) {
  ordered_json j;
  j["s"] = r.s;
  j["t"] = r.t;
  j["n"] = r.n;
  j["log_n"] = r.log_n;
  j["lambda_base"] = r.lambda_base;
  j["lambda_t"] = r.lambda_t;
  j["log_lambda_t"] = r.log_lambda_t;
  j["level_ratio"] = r.level.ratio;
  j["level_q_witness"] = r.level.q_witness;
  j["level_bound_ok"] = r.level.bound_ok;
  j["m_upper"] = r.upper.m_upper;
  j["log_m_upper"] = r.upper.log_m_upper;
  j["ratio_bound"] = r.upper.ratio_bound;
  j["lambda_ge_4"] = r.upper.lambda_ge_4;
  j["target_scaling"] = r.target_scaling;
  j["recipe_t"] = r.recipe_t;
  j["recipe_log_n"] = r.recipe_log_n;
  j["materialized"] = r.materialized;
  if (r.materialized) {
    j["measured_lambda"] = r.measured_lambda;
    j["lambda_agrees"] = r.lambda_agrees;
    j["certificate"] = certificate_to_json(*r.certificate);
    if (r.exact_m)
      j["m_exact"] = exact_m_to_json(*r.exact_m);
    else
      j["m_exact"] = nullptr;
    j["ordering_ok"] = r.ordering_ok;
  }
  return j;
}

inline ordered_json suite_result_to_json(const SuiteResult& s) {
  ordered_json j;
  j["suite"] = s.name;
  j["checked"] = s.checked;
  j["failed"] = s.failed;
  j["soft_flagged"] = s.soft_flagged;
  j["failures"] = s.failures;
  j["trace"] = s.trace;
  return j;
}

}  // namespace bidensity
