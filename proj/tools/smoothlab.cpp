#include "smoothlab/experiments.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace smoothlab;

namespace {

struct FlagOverrides {
  std::optional<std::string> config_path;
  std::optional<std::string> p;
  std::optional<double> alpha, beta, y, tol;
  std::optional<int> r, q, m, grid, zrule, samples, resolution;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> function_id, out, format;
  std::vector<int> n_values;
  std::vector<double> delta_values;
  std::vector<std::string> checks;
};

void add_common_options(CLI::App* cmd, FlagOverrides& flags) {
  cmd->add_option("--config", flags.config_path,
                  "JSON config file; flags override its keys");
  cmd->add_option("--p", flags.p, "norm exponent in [1,inf]; 'inf' allowed");
  cmd->add_option("--alpha", flags.alpha, "weight exponent at +1");
  cmd->add_option("--beta", flags.beta, "weight exponent at -1");
  cmd->add_option("--r", flags.r, "difference order");
  cmd->add_option("--q", flags.q, "kernel sharpness parameter");
  cmd->add_option("--m", flags.m, "kernel concentration parameter");
  cmd->add_option("--y", flags.y, "translation parameter in [-1,1]");
  cmd->add_option("--n", flags.n_values, "degree bound; repeat for a sweep");
  cmd->add_option("--delta", flags.delta_values,
                  "step bound; repeat for a sweep");
  cmd->add_option("--function", flags.function_id,
                  "catalog id, e.g. abspow:a=0,s=1");
  cmd->add_option("--out", flags.out, "output path (prefix for equivalence)");
  cmd->add_option("--format", flags.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", flags.seed, "RNG seed");
  cmd->add_option("--tol", flags.tol, "tolerance for checks");
  cmd->add_option("--grid", flags.grid, "interior grid size");
  cmd->add_option("--zrule", flags.zrule, "kernel quadrature order");
  cmd->add_option("--samples-per-axis", flags.samples,
                  "modulus search samples per axis");
  cmd->add_option("--resolution", flags.resolution, "sup-norm grid size");
  cmd->add_option("--checks", flags.checks, "check names; repeat to select");
}

ExperimentConfig build_config(const FlagOverrides& flags) {
  ExperimentConfig config;
  if (flags.config_path) {
    std::ifstream in(*flags.config_path);
    if (!in) throw std::runtime_error("cannot open config file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    apply_config_json(config, buffer.str());
  }
  if (flags.p) {
    if (*flags.p == "inf" || *flags.p == "infinity")
      config.norm.p = NormParams::inf;
    else
      config.norm.p = std::stod(*flags.p);
  }
  if (flags.alpha) config.norm.alpha = *flags.alpha;
  if (flags.beta) config.norm.beta = *flags.beta;
  if (flags.r) config.r = *flags.r;
  if (flags.q) config.q = *flags.q;
  if (flags.m) config.m = *flags.m;
  if (flags.y) config.y = *flags.y;
  if (!flags.n_values.empty()) config.n_list = flags.n_values;
  if (!flags.delta_values.empty()) config.delta_list = flags.delta_values;
  if (flags.function_id) config.function_id = *flags.function_id;
  if (flags.seed) config.seed = *flags.seed;
  if (flags.tol) config.tol = *flags.tol;
  if (flags.grid) config.grid_size = *flags.grid;
  if (flags.zrule) config.zrule = *flags.zrule;
  if (flags.samples) config.samples_per_axis = *flags.samples;
  if (flags.resolution) config.resolution = *flags.resolution;
  if (!flags.checks.empty()) config.checks = flags.checks;
  return config;
}

void emit(const std::string& text, const std::optional<std::string>& out) {
  if (out) {
    std::ofstream file(*out);
    file << text;
  } else {
    std::cout << text;
  }
}

std::string rows_csv(const ExperimentConfig& config,
                     const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(rows.size());
  for (const SweepRow& r : rows) pairs.emplace_back(r.scale, r.value);
  write_sweep_csv(os, config.function_id, config.norm, config.r, pairs);
  return os.str();
}

std::string rows_json(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ",";
    os << "{\"scale\":" << format_double(rows[i].scale)
       << ",\"value\":" << format_double(rows[i].value) << "}";
  }
  os << "]\n";
  return os.str();
}

int cmd_translate(const ExperimentConfig& config, const FlagOverrides& flags) {
  const std::vector<SweepRow> rows = run_translate_profile(config);
  const bool json = flags.format && *flags.format == "json";
  emit(json ? rows_json(rows) : rows_csv(config, rows), flags.out);
  return 0;
}

int cmd_modulus(const ExperimentConfig& config, const FlagOverrides& flags) {
  const std::vector<ModulusResult> sweep = run_modulus_sweep(config);
  if (flags.format && *flags.format == "json") {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      if (i) os << ",";
      os << to_json(sweep[i]);
    }
    os << "]\n";
    emit(os.str(), flags.out);
  } else {
    std::vector<SweepRow> rows;
    for (const ModulusResult& m : sweep) rows.push_back({m.delta, m.value});
    emit(rows_csv(config, rows), flags.out);
  }
  return 0;
}

int cmd_bestapprox(const ExperimentConfig& config, const FlagOverrides& flags) {
  const std::vector<SweepRow> rows = run_bestapprox_sweep(config);
  const bool json = flags.format && *flags.format == "json";
  emit(json ? rows_json(rows) : rows_csv(config, rows), flags.out);
  return 0;
}

int cmd_jackson(const ExperimentConfig& config, const FlagOverrides& flags) {
  const JacksonReport report = run_jackson(config);
  emit(jackson_json(report, config) + "\n", flags.out);
  return report.pass ? 0 : 1;
}

int cmd_equivalence(const ExperimentConfig& config,
                    const FlagOverrides& flags) {
  const EquivalenceReport report = run_equivalence(config);
  const std::string summary = equivalence_json(report, config) + "\n";
  if (flags.out) {
    const std::string prefix = *flags.out;
    {
      std::ofstream file(prefix + "_bestapprox.csv");
      file << rows_csv(config, report.bestapprox_rows);
    }
    {
      std::ofstream file(prefix + "_modulus.csv");
      file << rows_csv(config, report.modulus_rows);
    }
    std::ofstream file(prefix + "_summary.json");
    file << summary;
  }
  std::cout << summary;
  return report.pass ? 0 : 1;
}

int cmd_verify(const ExperimentConfig& config, const FlagOverrides& flags) {
  const std::vector<std::string>& names =
      config.checks.empty() ? check_names() : config.checks;
  const std::vector<CheckReport> reports =
      run_checks(names, config.verify_config());
  const std::string text = to_json(reports) + "\n";
  if (flags.out) emit(text, flags.out);
  std::cout << text;
  for (const CheckReport& r : reports)
    if (!r.passed) return 1;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted polynomial approximation laboratory on [-1,1]"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const ExperimentConfig&, const FlagOverrides&);
  };
  const Sub subs[] = {
      {"equivalence",
       "best-approximation vs modulus decay exponents with class validation",
       cmd_equivalence},
      {"translate", "profile of the translated function on the grid",
       cmd_translate},
      {"modulus", "modulus of smoothness sweep over step bounds", cmd_modulus},
      {"bestapprox", "best-approximation sweep over degrees", cmd_bestapprox},
      {"jackson", "kernel approximant degree report", cmd_jackson},
      {"verify", "run named lemma/theorem checks; nonzero exit on failure",
       cmd_verify},
  };

  FlagOverrides flags;
  std::vector<std::pair<CLI::App*, const Sub*>> wired;
  for (const Sub& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    add_common_options(cmd, flags);
    wired.emplace_back(cmd, &sub);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& [cmd, sub] : wired) {
      if (cmd->parsed()) return sub->run(build_config(flags), flags);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
