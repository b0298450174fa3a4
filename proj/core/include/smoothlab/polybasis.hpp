#pragma once

#include <functional>
#include <vector>

namespace smoothlab {

/// Jacobi weight exponents; integrability requires a, b > -1.
struct JacobiParams {
  double a;
  double b;
};

/// Degree-n Jacobi polynomial for the weight (1-x)^a (1+x)^b, scaled so that
/// its value at x = 1 equals 1. Three-term recurrence plus endpoint scaling.
double jacobi_eval(JacobiParams params, int n, double x);

/// All degrees 0..K at once (one recurrence pass).
std::vector<double> jacobi_eval_all(JacobiParams params, int K, double x);

/// jacobi_eval with a = b = 0.
double legendre_eval(int n, double x);

/// Multiplier of the n-th Fourier-Jacobi coefficient under the generalized
/// translation by y: R_n(y) = P_{n+2}^{(0,0)}(y) + (3/2)(1-y^2) P_n^{(2,2)}(y).
double eigenvalue_R(int n, double y);

/// Squared norm h_n of the n-th P^{(2,2)} basis polynomial against (1-x^2)^2,
/// computed by quadrature once and cached.
double jacobi22_norm2(int n);

/// Fourier-Jacobi coefficient sequence a_0..a_K against P^{(2,2)} with weight
/// (1-x^2)^2, stored unnormalized (h_n applied only at synthesis).
struct SpectralFn {
  std::vector<double> coeffs;
  int max_degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// a_n(f) for n <= K by Gauss-Jacobi(2,2) quadrature of the given order.
/// Requires rule_order >= K+2 (aliasing risk otherwise). When `breaks` are
/// supplied the integral is assembled piecewise so kinked integrands keep
/// full accuracy.
SpectralFn analyze(const std::function<double(double)>& f, int K,
                   int rule_order, const std::vector<double>& breaks = {});

double synthesize(const SpectralFn& s, double x);

} // namespace smoothlab
