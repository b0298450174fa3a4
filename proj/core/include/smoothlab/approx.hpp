#pragma once

#include "smoothlab/smoothness.hpp"

#include <span>
#include <utility>
#include <vector>

namespace smoothlab {

/// Generalized Jackson kernel A(t) = (sin(mt/2)/sin(t/2))^{2(q+2)}: an even,
/// nonnegative cosine polynomial of degree (q+2)(m-1).
struct JacksonKernel {
  int q = 3;
  int m = 1;

  int cosine_degree() const { return (q + 2) * (m - 1); }
};

double kernel_eval(const JacksonKernel& k, double t);

/// gamma_m = integral over [0,pi] of A(t) sin^3 t dt. Exact via the cos t
/// substitution (the integrand becomes a polynomial); cached per (q, m).
double kernel_gamma(const JacksonKernel& k);

/// Spectral multipliers sigma_j = (1/gamma_m) integral (R_j(cos t) - 1) A(t)
/// sin^3 t dt for j = 0..Kmax. sigma_j = -1 exactly above the cosine degree.
std::vector<double> jackson_sigma(const JacksonKernel& k, int Kmax);

/// (1/gamma_m) integral over [0,pi] of t^lambda A(t) sin^3 t dt.
double jackson_moment(const JacksonKernel& k, double lambda, double tol = 1e-9);

/// Spectral coefficients of the Jackson-type approximant P with
/// a_j(P) = a_j(f) (1 + (-1)^{r+1} sigma_j^r); coefficients above the cosine
/// degree vanish. Requires Kmax >= (q+2)(m-1).
SpectralFn jackson_approximant(const FunctionRep& f, int r,
                               const JacksonKernel& k, int Kmax,
                               int rule_order = 0);

/// Quadrature-only oracle for the same approximant, r in {1,2}: iterated
/// kernel-weighted averages of the translated function, no spectral
/// multipliers involved.
FunctionRep jackson_direct(const FunctionRep& f, int r, const JacksonKernel& k,
                           TranslateOptions opts = {}, int yrule_order = 0);

struct BestApprox {
  double value = 0.0;   ///< discretized-norm minimum
  SpectralFn coeffs;    ///< minimizer, Fourier-Jacobi convention
};

/// Best approximation E_n(f) by polynomials of degree <= n-1 in the weighted
/// p-norm, minimized over a degree-adaptive collocation grid: weighted least
/// squares for p = 2, IRLS started from it for other finite p (clamped
/// weights at p = 1), multiple-exchange ascent for p = inf.
BestApprox best_approx(const FunctionRep& f, int n, const NormParams& params);

enum class FitOrientation {
  decay_in_scale,  ///< value ~ scale^{-exponent} (best-approximation sweeps)
  growth_in_scale, ///< value ~ scale^{+exponent} (modulus sweeps)
};

struct DecayFit {
  double exponent = 0.0;
  double log_constant = 0.0;
  double residual = 0.0; ///< RMS of log-residuals
  int points_used = 0;
};

/// Least-squares line on (log scale, log value). Nonpositive values are
/// dropped; fewer than 3 usable points is an error.
DecayFit decay_fit(std::span<const std::pair<double, double>> points,
                   FitOrientation orientation);

} // namespace smoothlab
