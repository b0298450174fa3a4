#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace smoothlab {

enum class WeightKind { legendre, chebyshev1, jacobi };

/// Gauss rule on (-1,1). Nodes are strictly increasing and strictly interior;
/// weights are positive. A rule of a given order integrates polynomials up to
/// degree 2*order-1 exactly against its weight.
struct QuadRule {
  WeightKind kind = WeightKind::legendre;
  double a = 0.0; ///< Jacobi exponent on (1-x); unused for other kinds
  double b = 0.0; ///< Jacobi exponent on (1+x); unused for other kinds
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadRule gauss_legendre(int order);
QuadRule gauss_chebyshev1(int order);
QuadRule gauss_jacobi(int order, double a, double b);

double integrate(const QuadRule& rule, const std::function<double(double)>& f);

/// Known endpoint behavior of an integrand on [-1,1]: f ~ (1+x)^at_minus1 near
/// -1 and f ~ (1-x)^at_plus1 near +1. Both exponents must exceed -1.
struct EndpointExponents {
  double at_minus1 = 0.0;
  double at_plus1 = 0.0;
};

/// Adaptive integration over (-1,1) with dyadic panel grading toward both
/// endpoints (panel ratio 1/2) and bisection refinement of interior panels.
/// `interior_breaks` mark known kink locations; panel boundaries are placed
/// there. Estimated relative error of the result is <= tol; otherwise throws
/// AccuracyNotReached with the best estimate.
double integrate_adaptive(const std::function<double(double)>& f,
                          EndpointExponents exps, double tol,
                          const std::vector<double>& interior_breaks = {});

/// General-interval version. Grading toward an endpoint is enabled per side;
/// the corresponding exponent describes the integrand there ((x-lo)^exp_lo,
/// (hi-x)^exp_hi).
double integrate_adaptive_ab(const std::function<double(double)>& f, double lo,
                             double hi, double tol, bool grade_lo, bool grade_hi,
                             double exp_lo = 0.0, double exp_hi = 0.0,
                             const std::vector<double>& breaks = {});

// --- on-disk cache of node/weight tables (CSV, 17 significant digits) ---

std::string rule_cache_filename(WeightKind kind, int order, double a, double b);
void save_rule_csv(const QuadRule& rule, const std::string& dir);
std::optional<QuadRule> load_rule_csv(WeightKind kind, int order, double a,
                                      double b, const std::string& dir);
/// Loads from `cache_dir` when present, otherwise computes and stores.
QuadRule gauss_jacobi_cached(int order, double a, double b,
                             const std::string& cache_dir);

} // namespace smoothlab
