#pragma once

#include "smoothlab/approx.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace smoothlab {

/// Outcome of one lemma/theorem check. `worst` holds the worst ratio or the
/// maximal violation, depending on the check; `witness` describes the input
/// achieving it.
struct CheckReport {
  std::string name;
  bool passed = false;
  double worst = 0.0;
  double slope = std::numeric_limits<double>::quiet_NaN();
  std::string witness;
  long samples = 0;
  double tolerance = 0.0;
  std::string notes;
};

/// Exponents of the translation-boundedness inequality. gamma1*gamma2 = 0 and
/// gamma3 follows the p-dependent case split.
struct BoundExponents {
  double gamma = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double gamma3 = 0.0;
  double epsilon = 0.25;

  static BoundExponents from(const NormParams& params, double epsilon = 0.25);
};

/// Parameters of the norm-transfer estimate: lambda must exceed
/// lambda0 = 2 max(rho, sigma) for the check to be meaningful.
struct TransferParams {
  double rho = 0.0;
  double sigma = 0.0;
  double lambda = std::numeric_limits<double>::quiet_NaN(); ///< NaN = fit it

  double lambda0() const { return 2.0 * std::max(rho, sigma); }
};

/// Constant-bearing inequalities are asserted as bounded, non-trending ratio
/// sequences: log-log slope of the running max <= 0.1 and no single ratio
/// above 10x the median.
struct TrendSummary {
  double slope = 0.0;
  double worst = 0.0;
  double median = 0.0;
  bool bounded = false;
};
TrendSummary assess_bounded_ratios(
    std::span<const std::pair<double, double>> scale_ratio);

CheckReport check_elementary(long n_samples, std::uint64_t seed);
CheckReport check_eigen(int nu_max, double tol, std::uint64_t seed = 7);
CheckReport check_adjoint(
    const std::vector<std::pair<std::string, std::string>>& pairs, double tol);
CheckReport check_adjoint_random(int n_pairs, std::uint64_t seed, double tol);
CheckReport check_bernstein_markov(const NormParams& params, double rho,
                                   double sigma, int n_max, int trials,
                                   std::uint64_t seed);
CheckReport check_bound_T(const NormParams& params,
                          const BoundExponents& exponents,
                          std::span<const double> t_grid,
                          std::span<const std::string> catalog_subset);
CheckReport check_rho_sigma(const std::string& f_id, const NormParams& params,
                            const TransferParams& transfer, int N_max);
CheckReport check_degree_Q(const std::string& f_id, int r, int q, int m,
                           double tol);
CheckReport check_direct(const std::string& f_id, const ClassParams& params,
                         std::span<const int> n_list);
CheckReport check_inverse(const std::string& f_id, const ClassParams& params,
                          std::span<const double> delta_list);

/// Configuration of the shipped check suite.
struct VerifyConfig {
  std::uint64_t seed = 0;
  double tol = 1e-8;
  long elementary_samples = 1000000;
  int eigen_nu_max = 12;
  int adjoint_pairs = 20;
  int bm_n_max = 64;
  int bm_trials = 200;
  std::string function_id = "abspow:a=0,s=1";
  NormParams norm{2.0, 1.25, 1.25};
  int r = 2;
  int q = 3;
};

const std::vector<std::string>& check_names();
CheckReport run_check(const std::string& name, const VerifyConfig& config);
std::vector<CheckReport> run_checks(std::span<const std::string> names,
                                    const VerifyConfig& config);

} // namespace smoothlab
