#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>

#include "bidensity/certify.hpp"
#include "bidensity/errors.hpp"
#include "bidensity/exact.hpp"
#include "bidensity/gap.hpp"
#include "bidensity/io.hpp"
#include "bidensity/json_io.hpp"
#include "bidensity/parallel.hpp"
#include "bidensity/spectral.hpp"
#include "bidensity/suites.hpp"

namespace {

// Exit codes: 0 ok, 1 guarantee violation, 2 parse error, 3 non-convergence,
// 4 degenerate input, 5 cap/budget exceeded, 64 usage.
enum ExitCode {
  kOk = 0,
  kGuaranteeViolation = 1,
  kParseError = 2,
  kNonConvergence = 3,
  kDegenerateInput = 4,
  kCapExceeded = 5,
  kUsage = 64,
};

struct RunConfig {
  double tol = 1e-10;
  int max_iter = -1;
  int cap = 26;
  std::int64_t budget = 200000000;
  std::uint64_t seed = 0;
  bool json = false;
};

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--tol", cfg.tol, "convergence tolerance (relative)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-iter", cfg.max_iter,
                  "power-iteration cap (-1 = 100n+1000)");
  sub->add_option("--cap", cfg.cap, "exact-search vertex cap")
      ->check(CLI::Range(1, 30));
  sub->add_option("--budget", cfg.budget, "memory budget in ordered pairs");
  sub->add_option("--seed", cfg.seed, "seed for randomized suites");
  sub->add_flag("--json", cfg.json, "machine-readable JSON output");
}

void emit(const bidensity::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void report_remap(const bidensity::LoadedGraph& loaded) {
  if (!loaded.remapped) return;
  std::cerr << "note: sparse vertex ids remapped to dense indices:";
  for (std::size_t v = 0; v < loaded.original_ids.size(); ++v)
    std::cerr << " " << v << "<-" << loaded.original_ids[v];
  std::cerr << "\n";
}

int cmd_lambda(const std::string& path, const RunConfig& cfg) {
  const auto loaded = bidensity::load_graph_file(path);
  report_remap(loaded);
  const auto& g = loaded.graph;
  const bidensity::SpectralResult spec =
      bidensity::lambda_max(g, {cfg.tol, cfg.max_iter});
  const bidensity::DegreeStats stats = bidensity::degree_stats(g);
  const double slack = 1e-9 * std::max(1.0, spec.lambda_max);
  const bool bound_ok = stats.rms <= spec.lambda_max + slack &&
                        spec.lambda_max <= stats.max + slack;
  if (cfg.json) {
    bidensity::ordered_json j;
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["lambda_max"] = spec.lambda_max;
    j["rms_degree"] = stats.rms;
    j["max_degree"] = stats.max;
    j["bound_ok"] = bound_ok;
    j["iterations"] = spec.iterations;
    j["residual"] = spec.residual;
    j["converged"] = spec.converged;
    emit(j);
  } else {
    std::cout << "n = " << g.vertex_count() << ", edges = " << g.edge_count()
              << "\n";
    std::cout.precision(10);
    std::cout << std::fixed;
    std::cout << "lambda_max = " << spec.lambda_max << "\n";
    std::cout << "bound chain: rms " << stats.rms << " <= lambda "
              << spec.lambda_max << " <= max degree " << stats.max << " : "
              << (bound_ok ? "ok" : "VIOLATED") << "\n";
    std::cout.unsetf(std::ios::fixed);
    std::cout << "converged = " << (spec.converged ? "yes" : "no") << " ("
              << spec.iterations << " iterations, residual " << spec.residual
              << ")\n";
  }
  if (!spec.converged) return kNonConvergence;
  return bound_ok ? kOk : kGuaranteeViolation;
}

int cmd_certify(const std::string& path, const std::string& variant_name,
                const RunConfig& cfg) {
  const auto loaded = bidensity::load_graph_file(path);
  report_remap(loaded);
  const bidensity::Variant variant = bidensity::variant_from_name(variant_name);
  const bidensity::Certificate cert =
      bidensity::certify(loaded.graph, variant, {cfg.tol, cfg.max_iter});
  const bool verified = bidensity::verify_certificate(loaded.graph, cert);
  if (cfg.json) {
    emit(bidensity::certificate_to_json(cert));
  } else {
    std::cout << "certificate (" << bidensity::variant_name(cert.variant)
              << ", side " << cert.side << ")\n";
    std::cout << "  |X| = " << cert.x_set.size() << ", |Y| = " << cert.y_set.size()
              << ", e(X,Y) = " << cert.edges << "\n";
    std::cout << "  density  = " << cert.density << "\n";
    std::cout << "  lambda   = " << cert.lambda << "\n";
    std::cout << "  guarantee: density " << cert.density << " >= "
              << cert.guarantee_factor << " * lambda = "
              << cert.guarantee_factor * cert.lambda << " : "
              << (cert.density >= cert.guarantee_factor * cert.lambda - 1e-9
                      ? "ok"
                      : "VIOLATED")
              << "\n";
    std::cout << "  min-side corollary factor = " << cert.min_side_factor << "\n";
    std::cout << "  verified = " << (verified ? "yes" : "NO") << "\n";
  }
  if (!cert.converged) return kNonConvergence;
  return verified ? kOk : kGuaranteeViolation;
}

int cmd_m_exact(const std::string& path, const RunConfig& cfg) {
  const auto loaded = bidensity::load_graph_file(path);
  report_remap(loaded);
  bidensity::ExactOptions opts;
  opts.cap = cfg.cap;
  const bidensity::ExactMResult m = bidensity::m_exact(loaded.graph, opts);
  if (cfg.json) {
    emit(bidensity::exact_m_to_json(m));
  } else {
    std::cout << "M = " << m.value << " (e = " << m.edges << ", |X| = "
              << m.x_witness.size() << ", |Y| = " << m.y_witness.size() << ")\n";
    std::cout << "X =";
    for (int v : m.x_witness) std::cout << " " << v;
    std::cout << "\nY =";
    for (int v : m.y_witness) std::cout << " " << v;
    std::cout << "\nsubsets scanned = " << m.subsets_scanned << "\n";
  }
  return kOk;
}

int cmd_bounds(const std::string& path, const RunConfig& cfg) {
  const auto loaded = bidensity::load_graph_file(path);
  report_remap(loaded);
  bidensity::ExactOptions opts;
  opts.cap = cfg.cap;
  const bidensity::BoundsReport report =
      bidensity::bounds_check(loaded.graph, opts, {cfg.tol, cfg.max_iter});
  const bool ok =
      report.ok_avg_le_m && report.ok_m_le_delta && report.ok_m_le_lambda;
  if (cfg.json) {
    bidensity::ordered_json j;
    j["avg_degree"] = report.avg;
    j["m_exact"] = report.m_value;
    j["max_degree"] = report.delta;
    j["lambda_max"] = report.lambda;
    j["ok_avg_le_m"] = report.ok_avg_le_m;
    j["ok_m_le_delta"] = report.ok_m_le_delta;
    j["ok_m_le_lambda"] = report.ok_m_le_lambda;
    emit(j);
  } else {
    std::cout << "avg " << report.avg << " <= M " << report.m_value
              << " <= max degree " << report.delta << " : "
              << (report.ok_avg_le_m && report.ok_m_le_delta ? "ok" : "VIOLATED")
              << "\n";
    std::cout << "M " << report.m_value << " <= lambda " << report.lambda
              << " : " << (report.ok_m_le_lambda ? "ok" : "VIOLATED") << "\n";
  }
  return ok ? kOk : kGuaranteeViolation;
}

int cmd_gap(int s, int t, bool materialize, const RunConfig& cfg) {
  bidensity::GapReportOptions opts;
  opts.materialize = materialize;
  opts.exact_cap = cfg.cap;
  opts.budget_ordered_pairs = cfg.budget;
  opts.spectral = {cfg.tol, cfg.max_iter};
  const bidensity::GapReport report = bidensity::gap_report({s, t}, opts);
  if (cfg.json) {
    emit(bidensity::gap_report_to_json(report));
  } else {
    std::cout << "s = " << report.s << ", t = " << report.t
              << ", n = " << report.n << " (log n = " << report.log_n << ")\n";
    std::cout << "lambda^t = " << report.lambda_t << " (lambda = "
              << report.lambda_base << ")\n";
    std::cout << "level ratio = " << report.level.ratio
              << " (q = " << report.level.q_witness << ", bound "
              << (report.level.bound_ok ? "ok" : "VIOLATED") << ")\n";
    std::cout << "M upper bound = " << report.upper.m_upper
              << " (ratio to lambda^t = " << report.upper.ratio_bound << ")\n";
    if (!report.upper.lambda_ge_4)
      std::cout << "caveat: lambda < 4, tensor-optimization hypothesis not met\n";
    std::cout << "target scaling (log log n / log n)^(1/8) = "
              << report.target_scaling << "\n";
    std::cout << "asymptotic recipe: t = s^8 = " << report.recipe_t
              << " (log n = " << report.recipe_log_n << "), not materialized\n";
    if (report.materialized) {
      std::cout << "measured lambda_max = " << report.measured_lambda << " ("
                << (report.lambda_agrees ? "agrees" : "DISAGREES")
                << " with lambda^t)\n";
      std::cout << "certificate density = " << report.certificate->density << "\n";
      if (report.exact_m)
        std::cout << "exact M = " << report.exact_m->value << "\n";
      std::cout << "ordering = " << (report.ordering_ok ? "ok" : "VIOLATED")
                << "\n";
    }
  }
  if (report.materialized && !report.ordering_ok) return kGuaranteeViolation;
  return kOk;
}

int cmd_verify_lemmas(const std::string& suite, const RunConfig& cfg) {
  bidensity::SuiteResult result;
  if (suite == "rounding")
    result = bidensity::run_rounding_suite(cfg.seed);
  else if (suite == "entropy")
    result = bidensity::run_entropy_suite();
  else if (suite == "binest")
    result = bidensity::run_binest_suite();
  else if (suite == "deviation")
    result = bidensity::run_deviation_suite();
  else if (suite == "tensor")
    result = bidensity::run_tensor_suite();
  else
    throw bidensity::precondition_error("unknown suite: " + suite);
  if (cfg.json) {
    emit(bidensity::suite_result_to_json(result));
  } else {
    std::cout << "suite " << result.name << ": " << (result.checked - result.failed)
              << "/" << result.checked << " pass";
    if (result.soft_flagged > 0)
      std::cout << " (" << result.soft_flagged << " soft flags)";
    std::cout << "\n";
    for (const auto& f : result.failures) std::cout << "  FAIL " << f << "\n";
  }
  return result.failed == 0 ? kOk : kGuaranteeViolation;
}

}  // namespace

int main(int argc, char** argv) {
  bidensity::apply_thread_cap_from_env();
  CLI::App app{
      "bidensity: largest adjacency eigenvalue, maximum bi-average degree, and "
      "constructive density certificates"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string path, variant = "t1", suite = "rounding";
  int gap_s = 1, gap_t = 1;
  bool materialize = false;

  auto* lambda = app.add_subcommand("lambda", "largest eigenvalue and bound chain");
  lambda->add_option("file", path, "graph file (edge list or MatrixMarket)")
      ->required();
  add_common(lambda, cfg);

  auto* certify = app.add_subcommand("certify", "constructive (X,Y) certificate");
  certify->add_option("file", path)->required();
  certify->add_option("--variant", variant, "t1 | t2 | t3")
      ->check(CLI::IsMember({"t1", "t2", "t3"}));
  add_common(certify, cfg);

  auto* mexact = app.add_subcommand("m-exact", "exact maximum bi-average degree");
  mexact->add_option("file", path)->required();
  add_common(mexact, cfg);

  auto* bounds = app.add_subcommand("bounds", "check avg <= M <= max degree, M <= lambda");
  bounds->add_option("file", path)->required();
  add_common(bounds, cfg);

  auto* gap = app.add_subcommand("gap", "tensor-power gap construction report");
  gap->add_option("--s", gap_s, "base parameter s")->required()->check(CLI::PositiveNumber);
  gap->add_option("--t", gap_t, "tensor power t")->required()->check(CLI::PositiveNumber);
  gap->add_flag("--materialize", materialize, "build the graph and measure");
  add_common(gap, cfg);

  auto* lemmas = app.add_subcommand("verify-lemmas", "randomized/grid lemma suites");
  lemmas->add_option("--suite", suite,
                     "rounding | entropy | deviation | binest | tensor")
      ->check(CLI::IsMember({"rounding", "entropy", "deviation", "binest", "tensor"}));
  add_common(lemmas, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (lambda->parsed()) return cmd_lambda(path, cfg);
    if (certify->parsed()) return cmd_certify(path, variant, cfg);
    if (mexact->parsed()) return cmd_m_exact(path, cfg);
    if (bounds->parsed()) return cmd_bounds(path, cfg);
    if (gap->parsed()) return cmd_gap(gap_s, gap_t, materialize, cfg);
    if (lemmas->parsed()) return cmd_verify_lemmas(suite, cfg);
  } catch (const bidensity::parse_error& e) {
    std::cerr << "parse error";
    if (e.line() > 0) {
      std::cerr << " at line " << e.line();
      if (e.column() > 0) std::cerr << ", column " << e.column();
    }
    std::cerr << ": " << e.what() << "\n";
    return kParseError;
  } catch (const bidensity::degenerate_input_error& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kDegenerateInput;
  } catch (const bidensity::cap_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const bidensity::budget_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const bidensity::precondition_error& e) {
    std::cerr << "invalid request: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
