#pragma once

#include "smoothlab/function.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace smoothlab {

/// Parameters of the weighted L_p norm ||f (1-x)^alpha (1+x)^beta||_p.
struct NormParams {
  double p = 2.0; ///< in [1, inf]; use infinity() for the sup norm
  double alpha = 0.0;
  double beta = 0.0;

  bool is_sup() const { return std::isinf(p); }
  /// Throws std::invalid_argument unless p >= 1 and the weight is admissible:
  /// p*alpha > -1 and p*beta > -1 for finite p; alpha, beta >= 0 for p = inf.
  void validate() const;

  static constexpr double inf = std::numeric_limits<double>::infinity();
};

struct Window {
  double lo = 0.0;
  double hi = 0.0;
};

/// Parameters of the smoothness/approximation classes: r-th modulus with
/// decay exponent lambda in the admissible window (lambda0, 2r).
struct ClassParams {
  NormParams norm;
  int r = 1;
  double lambda = std::numeric_limits<double>::quiet_NaN(); ///< NaN = unset

  double lambda0() const;
};

/// Weighted norm of f. For p < inf the integral is computed adaptively to the
/// given tolerance; for p = inf the maximum is taken over a resolution-point
/// interior grid with one golden-section refinement around the best cell.
double weighted_norm(const FunctionRep& f, const NormParams& params,
                     int resolution = 512, double tol = 1e-9);

/// Checks the coincidence-theorem constraints for (p, alpha, beta, r) and
/// returns (lambda0, admissible window). Throws ClassParameterError naming the
/// violated bound. A finite ClassParams::lambda is checked against the window.
std::pair<double, Window> validate_class(const ClassParams& params);

FunctionRep to_grid(const FunctionRep& f, int size = 257);
FunctionRep to_spectral(const FunctionRep& f, int K, int rule_order = 0);

} // namespace smoothlab
