#include "smoothlab/polybasis.hpp"

#include "smoothlab/errors.hpp"
#include "smoothlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace smoothlab {

namespace {

void require_unit_interval(double x, const char* who) {
  if (std::abs(x) > 1.0 + 1e-12)
    throw std::domain_error(std::string(who) + ": argument outside [-1,1]");
}

} // namespace

std::vector<double> jacobi_eval_all(JacobiParams params, int K, double x) {
  const double a = params.a, b = params.b;
  if (!(a > -1.0) || !(b > -1.0))
    throw NonIntegrableWeight("jacobi_eval: weight exponents must exceed -1");
  if (K < 0) throw std::invalid_argument("jacobi_eval: degree must be >= 0");
  require_unit_interval(x, "jacobi_eval");
  x = std::clamp(x, -1.0, 1.0);

  std::vector<double> vals(K + 1);
  vals[0] = 1.0;
  if (K >= 1) vals[1] = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  for (int n = 2; n <= K; ++n) {
    const double s = 2.0 * n + a + b;
    const double c1 = 2.0 * n * (n + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (a * a - b * b);
    const double c3 = (s - 1.0) * s * (s - 2.0);
    const double c4 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s;
    vals[n] = ((c2 + c3 * x) * vals[n - 1] - c4 * vals[n - 2]) / c1;
  }
  // normalize by the value at 1: binom(n+a, n)
  double at1 = 1.0;
  for (int n = 1; n <= K; ++n) {
    at1 *= (n + a) / n;
    vals[n] /= at1;
  }
  return vals;
}

double jacobi_eval(JacobiParams params, int n, double x) {
  return jacobi_eval_all(params, n, x)[n];
}

double legendre_eval(int n, double x) {
  return jacobi_eval({0.0, 0.0}, n, x);
}

double eigenvalue_R(int n, double y) {
  require_unit_interval(y, "eigenvalue_R");
  y = std::clamp(y, -1.0, 1.0);
  return legendre_eval(n + 2, y) +
         1.5 * (1.0 - y * y) * jacobi_eval({2.0, 2.0}, n, y);
}

namespace {

std::vector<double> build_norm2_table(int max_degree) {
  std::vector<double> h(max_degree + 1, 0.0);
  const QuadRule rule = gauss_jacobi(max_degree + 2, 2.0, 2.0);
  for (int i = 0; i < rule.order; ++i) {
    const std::vector<double> basis =
        jacobi_eval_all({2.0, 2.0}, max_degree, rule.nodes[i]);
    for (int n = 0; n <= max_degree; ++n)
      h[n] += rule.weights[i] * basis[n] * basis[n];
  }
  return h;
}

} // namespace

double jacobi22_norm2(int n) {
  if (n < 0) throw std::invalid_argument("jacobi22_norm2: degree must be >= 0");
  static std::vector<double> table;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  if (n >= static_cast<int>(table.size()))
    table = build_norm2_table(std::max(2 * n, 160));
  return table[n];
}

namespace {

std::mutex g_rule_mutex;

// Gauss-Jacobi(2,2) rules reused across analyze calls. Deque keeps references
// stable while the cache grows.
const QuadRule& jacobi22_rule(int order) {
  static std::deque<QuadRule> cache;
  std::lock_guard<std::mutex> lock(g_rule_mutex);
  for (const QuadRule& r : cache)
    if (r.order == order) return r;
  cache.push_back(gauss_jacobi(order, 2.0, 2.0));
  return cache.back();
}

const QuadRule& legendre_rule_cached(int order) {
  static std::deque<QuadRule> cache;
  std::lock_guard<std::mutex> lock(g_rule_mutex);
  for (const QuadRule& r : cache)
    if (r.order == order) return r;
  cache.push_back(gauss_legendre(order));
  return cache.back();
}

} // namespace

SpectralFn analyze(const std::function<double(double)>& f, int K,
                   int rule_order, const std::vector<double>& breaks) {
  if (K < 0) throw std::invalid_argument("analyze: K must be >= 0");
  if (rule_order < K + 2)
    throw AliasingRisk("analyze: rule_order must be >= K+2");

  SpectralFn s;
  s.coeffs.assign(K + 1, 0.0);

  auto accumulate = [&](double x, double w) {
    const double v = f(x);
    if (!std::isfinite(v))
      throw EvaluationError("analyze: non-finite function value", x);
    const std::vector<double> basis = jacobi_eval_all({2.0, 2.0}, K, x);
    for (int n = 0; n <= K; ++n) s.coeffs[n] += w * v * basis[n];
  };

  std::vector<double> cuts;
  for (double b : breaks)
    if (b > -1.0 && b < 1.0) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  if (cuts.empty()) {
    const QuadRule& rule = jacobi22_rule(rule_order);
    for (int i = 0; i < rule.order; ++i)
      accumulate(rule.nodes[i], rule.weights[i]);
    return s;
  }

  // Piecewise: mapped Gauss-Legendre per segment with (1-x^2)^2 folded in.
  cuts.insert(cuts.begin(), -1.0);
  cuts.push_back(1.0);
  const QuadRule& rule = legendre_rule_cached(rule_order);
  for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
    const double c = 0.5 * (cuts[seg] + cuts[seg + 1]);
    const double h = 0.5 * (cuts[seg + 1] - cuts[seg]);
    for (int i = 0; i < rule.order; ++i) {
      const double x = c + h * rule.nodes[i];
      const double si = 1.0 - x * x;
      accumulate(x, rule.weights[i] * h * si * si);
    }
  }
  return s;
}

double synthesize(const SpectralFn& s, double x) {
  const int K = s.max_degree();
  if (K < 0) return 0.0;
  const std::vector<double> basis = jacobi_eval_all({2.0, 2.0}, K, x);
  double acc = 0.0;
  for (int n = 0; n <= K; ++n)
    acc += s.coeffs[n] / jacobi22_norm2(n) * basis[n];
  return acc;
}

} // namespace smoothlab
