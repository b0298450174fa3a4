#pragma once

#include "smoothlab/translate.hpp"
#include "smoothlab/wspace.hpp"

#include <span>
#include <vector>

namespace smoothlab {

struct ModulusResult {
  double delta = 0.0;
  double value = 0.0;
  std::vector<double> argmax_t; ///< maximizing steps, componentwise <= delta
  long samples_used = 0;
};

/// Iterated generalized difference: g_0 = f, g_i = hatT_{t_i} g_{i-1} -
/// g_{i-1}. Each iterate lives on the fixed interior grid (barycentric
/// reinterpolation between iterations).
FunctionRep difference(const FunctionRep& f, std::span<const double> t,
                       TranslateOptions opts = {});

/// Coefficient k is multiplied by prod_i (R_k(cos t_i) - 1).
SpectralFn difference_spectral(const SpectralFn& s, std::span<const double> t);

/// Generalized modulus of smoothness of order r at step bound delta: maximum
/// of the weighted norm of the r-fold difference over a geometric grid on
/// [0, delta]^r (ratio 1/2, includes 0 and delta). hatT is even in t, so
/// nonnegative steps cover the full sup; ties break toward the
/// lexicographically smallest tuple.
ModulusResult modulus(const FunctionRep& f, int r, double delta,
                      const NormParams& params, int samples_per_axis = 8,
                      TranslateOptions opts = {});

/// Modulus at each delta with shared sampling parameters. Deltas must be
/// positive and decreasing.
std::vector<ModulusResult> modulus_decay(const FunctionRep& f, int r,
                                         const NormParams& params,
                                         std::span<const double> deltas,
                                         int samples_per_axis = 8,
                                         TranslateOptions opts = {});

} // namespace smoothlab
