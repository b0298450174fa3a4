#include "smoothlab/experiments.hpp"

#include "smoothlab/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace smoothlab {

using nlohmann::json;

VerifyConfig ExperimentConfig::verify_config() const {
  VerifyConfig v;
  v.seed = seed;
  v.tol = tol;
  v.function_id = function_id;
  v.norm = norm;
  v.r = r;
  v.q = q;
  return v;
}

namespace {

double parse_p(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return NormParams::inf;
    return std::stod(s);
  }
  return j.get<double>();
}

} // namespace

void apply_config_json(ExperimentConfig& config, const std::string& json_text) {
  const json j = json::parse(json_text);
  if (!j.is_object())
    throw std::invalid_argument("config: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "function") config.function_id = value.get<std::string>();
    else if (key == "p") config.norm.p = parse_p(value);
    else if (key == "alpha") config.norm.alpha = value.get<double>();
    else if (key == "beta") config.norm.beta = value.get<double>();
    else if (key == "r") config.r = value.get<int>();
    else if (key == "q") config.q = value.get<int>();
    else if (key == "m") config.m = value.get<int>();
    else if (key == "y") config.y = value.get<double>();
    else if (key == "n_list") config.n_list = value.get<std::vector<int>>();
    else if (key == "delta_list")
      config.delta_list = value.get<std::vector<double>>();
    else if (key == "grid") config.grid_size = value.get<int>();
    else if (key == "zrule") config.zrule = value.get<int>();
    else if (key == "samples_per_axis")
      config.samples_per_axis = value.get<int>();
    else if (key == "resolution") config.resolution = value.get<int>();
    else if (key == "seed") config.seed = value.get<std::uint64_t>();
    else if (key == "tol") config.tol = value.get<double>();
    else if (key == "checks")
      config.checks = value.get<std::vector<std::string>>();
    else
      throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

std::vector<SweepRow> run_bestapprox_sweep(const ExperimentConfig& config) {
  const FunctionRep f = FunctionRep::named(config.function_id);
  std::vector<SweepRow> rows;
  rows.reserve(config.n_list.size());
  for (int n : config.n_list)
    rows.push_back({static_cast<double>(n), best_approx(f, n, config.norm).value});
  return rows;
}

std::vector<ModulusResult> run_modulus_sweep(const ExperimentConfig& config) {
  const FunctionRep f = FunctionRep::named(config.function_id);
  return modulus_decay(f, config.r, config.norm, config.delta_list,
                       config.samples_per_axis, config.translate_options());
}

std::vector<SweepRow> run_translate_profile(const ExperimentConfig& config) {
  const FunctionRep f = FunctionRep::named(config.function_id);
  const FunctionRep tf = apply_T(f, config.y, config.translate_options());
  const std::vector<double>& nodes =
      interior_chebyshev_nodes(config.grid_size);
  std::vector<SweepRow> rows;
  rows.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    rows.push_back({nodes[i], tf.grid_values()[i]});
  return rows;
}

EquivalenceReport run_equivalence(const ExperimentConfig& config) {
  const ClassParams cls{config.norm, config.r,
                        std::numeric_limits<double>::quiet_NaN()};
  const auto [lambda0, window] = validate_class(cls);

  EquivalenceReport report;
  report.lambda0 = lambda0;
  report.window = window;

  report.bestapprox_rows = run_bestapprox_sweep(config);
  for (const ModulusResult& m : run_modulus_sweep(config))
    report.modulus_rows.push_back({m.delta, m.value});

  auto positive_count = [](const std::vector<SweepRow>& rows) {
    return std::count_if(rows.begin(), rows.end(),
                         [](const SweepRow& r) { return r.value > 1e-12; });
  };
  if (positive_count(report.bestapprox_rows) < 3 ||
      positive_count(report.modulus_rows) < 3) {
    report.degenerate = true;
    report.pass = true;
    report.note =
        "degenerate: sweep vanishes (constant or polynomial input), no fit";
    return report;
  }

  std::vector<std::pair<double, double>> e_pts, w_pts;
  for (const SweepRow& r : report.bestapprox_rows)
    e_pts.emplace_back(r.scale, r.value);
  for (const SweepRow& r : report.modulus_rows)
    w_pts.emplace_back(r.scale, r.value);
  report.fit_bestapprox = decay_fit(e_pts, FitOrientation::decay_in_scale);
  report.fit_modulus = decay_fit(w_pts, FitOrientation::growth_in_scale);

  const double le = report.fit_bestapprox.exponent;
  const double lw = report.fit_modulus.exponent;
  const bool agree = std::abs(le - lw) <= 0.15;
  const bool inside = le > window.lo && le < window.hi && lw > window.lo &&
                      lw < window.hi;
  report.pass = agree && inside;
  std::ostringstream note;
  note << "lambda_E=" << le << " lambda_w=" << lw << " window=(" << window.lo
       << "," << window.hi << ")";
  report.note = note.str();
  return report;
}

namespace {

json config_to_json(const ExperimentConfig& config) {
  json j;
  j["function"] = config.function_id;
  if (config.norm.is_sup()) j["p"] = "inf";
  else j["p"] = config.norm.p;
  j["alpha"] = config.norm.alpha;
  j["beta"] = config.norm.beta;
  j["r"] = config.r;
  j["q"] = config.q;
  j["seed"] = config.seed;
  return j;
}

json fit_to_json(const DecayFit& f) {
  json j;
  j["exponent"] = f.exponent;
  j["log_constant"] = f.log_constant;
  j["residual"] = f.residual;
  j["points_used"] = f.points_used;
  return j;
}

} // namespace

std::string equivalence_json(const EquivalenceReport& report,
                             const ExperimentConfig& config) {
  json j;
  j["config"] = config_to_json(config);
  j["degenerate"] = report.degenerate;
  j["pass"] = report.pass;
  j["note"] = report.note;
  j["lambda0"] = report.lambda0;
  j["window"] = {report.window.lo, report.window.hi};
  if (!report.degenerate) {
    j["fit_bestapprox"] = fit_to_json(report.fit_bestapprox);
    j["fit_modulus"] = fit_to_json(report.fit_modulus);
  }
  return j.dump(2);
}

JacksonReport run_jackson(const ExperimentConfig& config) {
  const JacksonKernel kernel{config.q, config.m};
  const int degree_bound = kernel.cosine_degree();
  const int Kmax = degree_bound + 16;
  const FunctionRep f = FunctionRep::named(config.function_id);

  JacksonReport report;
  report.degree_bound = degree_bound;
  report.coeffs = jackson_approximant(f, config.r, kernel, Kmax);

  double tail_sq = 0.0, total_sq = 0.0;
  for (int jdx = 0; jdx <= Kmax; ++jdx) {
    const double mass =
        report.coeffs.coeffs[jdx] * report.coeffs.coeffs[jdx] /
        jacobi22_norm2(jdx);
    total_sq += mass;
    if (jdx > degree_bound) tail_sq += mass;
  }
  report.tail_rel = total_sq > 0.0 ? std::sqrt(tail_sq / total_sq) : 0.0;
  report.a_bound = report.coeffs.coeffs[degree_bound];
  report.pass = report.tail_rel <= config.tol;
  return report;
}

std::string jackson_json(const JacksonReport& report,
                         const ExperimentConfig& config) {
  json j;
  j["config"] = config_to_json(config);
  j["m"] = config.m;
  j["degree_bound"] = report.degree_bound;
  j["tail_rel"] = report.tail_rel;
  j["a_at_bound"] = report.a_bound;
  j["pass"] = report.pass;
  j["coeffs"] = report.coeffs.coeffs;
  return j.dump(2);
}

} // namespace smoothlab
