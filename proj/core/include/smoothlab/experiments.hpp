#pragma once

#include "smoothlab/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace smoothlab {

/// One reproducible experiment record. Populated from a JSON config file with
/// per-flag overrides at the CLI (flags win).
struct ExperimentConfig {
  std::string function_id = "abspow:a=0,s=1";
  NormParams norm{2.0, 1.25, 1.25};
  int r = 2;
  int q = 3;
  int m = 4;
  double y = 0.5;
  std::vector<int> n_list = {4, 8, 16, 32, 64, 128};
  std::vector<double> delta_list = {0.25,    0.125,     0.0625,
                                    0.03125, 0.015625,  0.0078125};
  int grid_size = 257;
  int zrule = 48;
  int samples_per_axis = 8;
  int resolution = 512;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::vector<std::string> checks; ///< empty = full shipped suite

  TranslateOptions translate_options() const { return {grid_size, zrule}; }
  VerifyConfig verify_config() const;
};

/// Merge keys from a JSON object into the config. Unknown keys are an error.
void apply_config_json(ExperimentConfig& config, const std::string& json_text);

struct SweepRow {
  double scale;
  double value;
};

std::vector<SweepRow> run_bestapprox_sweep(const ExperimentConfig& config);
std::vector<ModulusResult> run_modulus_sweep(const ExperimentConfig& config);
/// (x, T_y f(x)) over the grid.
std::vector<SweepRow> run_translate_profile(const ExperimentConfig& config);

struct EquivalenceReport {
  bool degenerate = false;
  bool pass = false;
  std::string note;
  double lambda0 = 0.0;
  Window window;
  DecayFit fit_bestapprox;
  DecayFit fit_modulus;
  std::vector<SweepRow> bestapprox_rows;
  std::vector<SweepRow> modulus_rows;
};

/// Best-approximation and modulus sweeps plus fitted decay exponents; passes
/// when the exponents agree within 0.15 and both lie in the admissible
/// window. Refuses (throws ClassParameterError) on inadmissible class
/// parameters.
EquivalenceReport run_equivalence(const ExperimentConfig& config);
std::string equivalence_json(const EquivalenceReport& report,
                             const ExperimentConfig& config);

struct JacksonReport {
  int degree_bound = 0;
  double tail_rel = 0.0;
  double a_bound = 0.0;
  bool pass = false;
  SpectralFn coeffs;
};

JacksonReport run_jackson(const ExperimentConfig& config);
std::string jackson_json(const JacksonReport& report,
                         const ExperimentConfig& config);

} // namespace smoothlab
