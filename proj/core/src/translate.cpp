#include "smoothlab/translate.hpp"

#include "smoothlab/errors.hpp"
#include "smoothlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace smoothlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEdgeBand = 1e-6; // |x| > 1 - band: extrapolate from inside

void require_unit_interval(double v, const char* who) {
  if (std::abs(v) > 1.0 + 1e-12)
    throw std::domain_error(std::string(who) + ": argument outside [-1,1]");
}

const QuadRule& chebyshev_rule(int order) {
  static std::deque<QuadRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  for (const QuadRule& r : cache)
    if (r.order == order) return r;
  cache.push_back(gauss_chebyshev1(order));
  return cache.back();
}

const QuadRule& legendre_rule(int order) {
  static std::deque<QuadRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  for (const QuadRule& r : cache)
    if (r.order == order) return r;
  cache.push_back(gauss_legendre(order));
  return cache.back();
}

// I = integral over z in (-1,1) of kernel(z) f(c0 + c1 z) dz / sqrt(1-z^2).
// Default path is the Chebyshev rule in z (midpoint rule in phi). When f has
// kinks the integration runs piecewise in phi, split at the kink preimages,
// so each segment sees an analytic integrand.
template <class Kernel>
double z_integral(const FunctionRep& f, double c0, double c1,
                  const Kernel& kernel, int zrule_order) {
  std::vector<double> phi_cuts;
  if (std::abs(c1) > 1e-14) {
    for (double b : f.breakpoints()) {
      const double zb = (b - c0) / c1;
      if (std::abs(zb) < 1.0 - 1e-12) phi_cuts.push_back(std::acos(-zb));
    }
  }

  if (phi_cuts.empty()) {
    const QuadRule& rule = chebyshev_rule(zrule_order);
    double acc = 0.0;
    for (int i = 0; i < rule.order; ++i) {
      const double z = rule.nodes[i];
      const double arg = std::clamp(c0 + c1 * z, -1.0, 1.0);
      acc += rule.weights[i] * kernel(z) * f(arg);
    }
    return acc;
  }

  std::sort(phi_cuts.begin(), phi_cuts.end());
  phi_cuts.insert(phi_cuts.begin(), 0.0);
  phi_cuts.push_back(kPi);
  const QuadRule& rule = legendre_rule(zrule_order);
  double acc = 0.0;
  for (std::size_t seg = 0; seg + 1 < phi_cuts.size(); ++seg) {
    const double c = 0.5 * (phi_cuts[seg] + phi_cuts[seg + 1]);
    const double h = 0.5 * (phi_cuts[seg + 1] - phi_cuts[seg]);
    if (h <= 0.0) continue;
    for (int i = 0; i < rule.order; ++i) {
      const double phi = c + h * rule.nodes[i];
      const double z = -std::cos(phi);
      const double arg = std::clamp(c0 + c1 * z, -1.0, 1.0);
      acc += rule.weights[i] * h * kernel(z) * f(arg);
    }
  }
  return acc;
}

double t1_inner(const FunctionRep& f, double y, double x, int zrule_order) {
  const double six = 1.0 - x * x, siy = 1.0 - y * y;
  const double s = std::sqrt(six) * std::sqrt(siy);
  const double c0 = x * y, c1 = -s;
  auto kernel = [&](double z) {
    const double r = c0 + c1 * z;
    return 1.0 - r * r - 2.0 * siy * (1.0 - z * z);
  };
  return z_integral(f, c0, c1, kernel, zrule_order) / (kPi * six);
}

double t2_inner(const FunctionRep& f, double y, double x, int zrule_order) {
  const double s = std::sqrt(1.0 - x * x) * std::sqrt(1.0 - y * y);
  const double c0 = x * y, c1 = -s;
  auto kernel = [](double z) {
    const double siz = 1.0 - z * z;
    return siz * siz;
  };
  return 8.0 / (3.0 * kPi) * z_integral(f, c0, c1, kernel, zrule_order);
}

double hatT_inner(const FunctionRep& f, double t, double x, int zrule_order) {
  const double six = 1.0 - x * x;
  const double ct = std::cos(t), st = std::sin(t);
  const double st2 = st * st;
  const double c0 = x * ct, c1 = std::sqrt(six) * st;
  auto kernel = [&](double z) {
    const double arg = c0 + c1 * z;
    const double siz = 1.0 - z * z;
    return 1.0 - arg * arg - 2.0 * st2 * siz + 4.0 * six * st2 * siz * siz;
  };
  return z_integral(f, c0, c1, kernel, zrule_order) / (kPi * six);
}

// The 1/(1-x^2) prefactor keeps direct evaluation away from the endpoints;
// inside the edge band the value is replaced by the limit along the interval
// (linear extrapolation from two interior points).
template <class PointFn>
double with_edge_guard(double x, const PointFn& eval) {
  if (std::abs(x) <= 1.0 - kEdgeBand) return eval(x);
  const double sign = x >= 0.0 ? 1.0 : -1.0;
  const double x1 = sign * (1.0 - kEdgeBand);
  const double x2 = sign * (1.0 - 2.0 * kEdgeBand);
  const double v1 = eval(x1), v2 = eval(x2);
  return v1 + (v1 - v2) * (x - x1) / (x1 - x2);
}

} // namespace

TranslationKernelPoint TranslationKernelPoint::make(double x, double z,
                                                    double t) {
  TranslationKernelPoint p;
  p.x = x;
  p.z = z;
  p.t = t;
  p.y = std::cos(t);
  p.R = x * std::cos(t) - z * std::sqrt(1.0 - x * x) * std::sin(t);
  return p;
}

double TranslationKernelPoint::slack_si_x() const {
  return (1.0 - R * R) - (1.0 - x * x) * (1.0 - z * z);
}
double TranslationKernelPoint::slack_si_y() const {
  return (1.0 - R * R) - (1.0 - y * y) * (1.0 - z * z);
}
double TranslationKernelPoint::slack_combo() const {
  const double u =
      x * std::sqrt(1.0 - y * y) + y * z * std::sqrt(1.0 - x * x);
  return (1.0 - R * R) - u * u;
}

double apply_T1_at(const FunctionRep& f, double y, double x, int zrule_order) {
  require_unit_interval(y, "apply_T1");
  require_unit_interval(x, "apply_T1");
  y = std::clamp(y, -1.0, 1.0);
  return with_edge_guard(
      x, [&](double xi) { return t1_inner(f, y, xi, zrule_order); });
}

double apply_T2_at(const FunctionRep& f, double y, double x, int zrule_order) {
  require_unit_interval(y, "apply_T2");
  require_unit_interval(x, "apply_T2");
  y = std::clamp(y, -1.0, 1.0);
  x = std::clamp(x, -1.0, 1.0);
  return t2_inner(f, y, x, zrule_order);
}

double apply_T_at(const FunctionRep& f, double y, double x, int zrule_order) {
  return apply_T1_at(f, y, x, zrule_order) +
         1.5 * (1.0 - y * y) * apply_T2_at(f, y, x, zrule_order);
}

double apply_hatT_at(const FunctionRep& f, double t, double x,
                     int zrule_order) {
  require_unit_interval(x, "apply_hatT");
  return with_edge_guard(
      x, [&](double xi) { return hatT_inner(f, t, xi, zrule_order); });
}

namespace {

template <class PointFn>
FunctionRep apply_on_grid(int grid_size, const PointFn& eval) {
  const std::vector<double>& nodes = interior_chebyshev_nodes(grid_size);
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = eval(nodes[i]);
  return FunctionRep::from_grid(std::move(values));
}

} // namespace

FunctionRep apply_T1(const FunctionRep& f, double y, int zrule_order,
                     int grid_size) {
  require_unit_interval(y, "apply_T1");
  return apply_on_grid(grid_size, [&](double x) {
    return apply_T1_at(f, y, x, zrule_order);
  });
}

FunctionRep apply_T2(const FunctionRep& f, double y, int zrule_order,
                     int grid_size) {
  require_unit_interval(y, "apply_T2");
  return apply_on_grid(grid_size, [&](double x) {
    return apply_T2_at(f, y, x, zrule_order);
  });
}

FunctionRep apply_T(const FunctionRep& f, double y, TranslateOptions opts) {
  require_unit_interval(y, "apply_T");
  return apply_on_grid(opts.grid_size, [&](double x) {
    return apply_T_at(f, y, x, opts.zrule_order);
  });
}

FunctionRep apply_hatT(const FunctionRep& f, double t, TranslateOptions opts) {
  return apply_on_grid(opts.grid_size, [&](double x) {
    return apply_hatT_at(f, t, x, opts.zrule_order);
  });
}

SpectralFn apply_T_spectral(const SpectralFn& s, double y) {
  require_unit_interval(y, "apply_T_spectral");
  SpectralFn out = s;
  for (int k = 0; k <= s.max_degree(); ++k)
    out.coeffs[k] *= eigenvalue_R(k, y);
  return out;
}

std::pair<double, double> adjoint_pair(const FunctionRep& f,
                                       const FunctionRep& g, double y, int k,
                                       int zrule_order, double tol) {
  if (k != 1 && k != 2)
    throw std::invalid_argument("adjoint_pair: k must be 1 or 2");
  require_unit_interval(y, "adjoint_pair");

  auto weighted_product = [&](const FunctionRep& outer,
                              const FunctionRep& inner) {
    auto integrand = [&, y, k, zrule_order](double x) {
      const double tk = k == 1 ? apply_T1_at(inner, y, x, zrule_order)
                               : apply_T2_at(inner, y, x, zrule_order);
      const double si = 1.0 - x * x;
      return outer(x) * tk * si * si;
    };
    return integrate_adaptive(integrand, {2.0, 2.0}, tol,
                              outer.breakpoints());
  };
  return {weighted_product(f, g), weighted_product(g, f)};
}

} // namespace smoothlab
