#pragma once

#include "smoothlab/function.hpp"

#include <utility>

namespace smoothlab {

struct TranslateOptions {
  int grid_size = 257;
  int zrule_order = 48;
};

/// Sample point of the translation kernel geometry: R = x cos t - z
/// sqrt(1-x^2) sin t, with y = cos t. Always -1 <= R <= 1; the slack_*
/// quantities are the exact kernel inequalities and are nonnegative.
struct TranslationKernelPoint {
  double x, z, t, y, R;

  static TranslationKernelPoint make(double x, double z, double t);

  double slack_si_x() const;  ///< (1-R^2) - (1-x^2)(1-z^2)
  double slack_si_y() const;  ///< (1-R^2) - (1-y^2)(1-z^2)
  double slack_combo() const; ///< (1-R^2) - (x sqrt(1-y^2) + y z sqrt(1-x^2))^2
};

// Pointwise evaluation of the translation operators at a single x.
double apply_T1_at(const FunctionRep& f, double y, double x,
                   int zrule_order = 48);
double apply_T2_at(const FunctionRep& f, double y, double x,
                   int zrule_order = 48);
double apply_T_at(const FunctionRep& f, double y, double x,
                  int zrule_order = 48);
double apply_hatT_at(const FunctionRep& f, double t, double x,
                     int zrule_order = 48);

// Grid-valued application on the fixed interior grid.
FunctionRep apply_T1(const FunctionRep& f, double y, int zrule_order = 48,
                     int grid_size = 257);
FunctionRep apply_T2(const FunctionRep& f, double y, int zrule_order = 48,
                     int grid_size = 257);
/// T_y = T_{1;y} + (3/2)(1-y^2) T_{2;y}.
FunctionRep apply_T(const FunctionRep& f, double y, TranslateOptions opts = {});
/// Direct evaluation of the phi-integral form; agrees with apply_T at
/// y = cos t and is even in t.
FunctionRep apply_hatT(const FunctionRep& f, double t,
                       TranslateOptions opts = {});

/// Coefficient k is multiplied by eigenvalue_R(k, y).
SpectralFn apply_T_spectral(const SpectralFn& s, double y);

/// Both sides of the self-adjointness identity
///   integral f T_{k;y} g (1-x^2)^2 dx = integral g T_{k;y} f (1-x^2)^2 dx
/// for k in {1,2}, each computed independently.
std::pair<double, double> adjoint_pair(const FunctionRep& f,
                                       const FunctionRep& g, double y, int k,
                                       int zrule_order = 48, double tol = 1e-10);

} // namespace smoothlab
