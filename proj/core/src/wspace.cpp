#include "smoothlab/wspace.hpp"

#include "smoothlab/errors.hpp"
#include "smoothlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace smoothlab {

void NormParams::validate() const {
  if (std::isnan(p) || p < 1.0)
    throw std::invalid_argument("NormParams: p must lie in [1, inf]");
  if (is_sup()) {
    if (alpha < 0.0 || beta < 0.0)
      throw std::invalid_argument(
          "NormParams: alpha and beta must be >= 0 for p = inf");
  } else {
    if (!(p * alpha > -1.0) || !(p * beta > -1.0))
      throw std::invalid_argument(
          "NormParams: need p*alpha > -1 and p*beta > -1");
  }
}

double ClassParams::lambda0() const {
  const double half_over_p = norm.is_sup() ? 0.0 : 1.0 / (2.0 * norm.p);
  return 2.0 * std::max({std::abs(norm.alpha - norm.beta),
                         norm.alpha - 1.5 + half_over_p,
                         norm.beta - 1.5 + half_over_p});
}

namespace {

double sup_norm(const FunctionRep& f, const NormParams& params, int resolution) {
  const double alpha = params.alpha, beta = params.beta;
  auto weighted = [&](double theta) {
    const double x = -std::cos(theta);
    return std::abs(f(x)) * std::pow(1.0 - x, alpha) * std::pow(1.0 + x, beta);
  };
  double best = 0.0;
  int best_i = 0;
  const double step = std::numbers::pi / resolution;
  for (int i = 0; i < resolution; ++i) {
    const double v = weighted((i + 0.5) * step);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  // one golden-section refinement around the best cell
  double lo = std::max(0.0, (best_i - 0.5) * step);
  double hi = std::min(std::numbers::pi, (best_i + 1.5) * step);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  double fc = weighted(c), fd = weighted(d);
  for (int iter = 0; iter < 60 && hi - lo > 1e-13; ++iter) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = weighted(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = weighted(d);
    }
  }
  return std::max({best, fc, fd});
}

} // namespace

double weighted_norm(const FunctionRep& f, const NormParams& params,
                     int resolution, double tol) {
  params.validate();
  if (resolution < 32)
    throw std::invalid_argument("weighted_norm: resolution must be >= 32");

  if (params.is_sup()) return sup_norm(f, params, resolution);

  const double p = params.p, pa = params.p * params.alpha,
               pb = params.p * params.beta;
  auto integrand = [&](double x) {
    return std::pow(std::abs(f(x)), p) * std::pow(1.0 - x, pa) *
           std::pow(1.0 + x, pb);
  };
  const double integral =
      integrate_adaptive(integrand, {pb, pa}, tol, f.breakpoints());
  return std::pow(std::max(integral, 0.0), 1.0 / p);
}

std::pair<double, Window> validate_class(const ClassParams& params) {
  const NormParams& n = params.norm;
  n.validate();
  if (params.r < 1)
    throw ClassParameterError("validate_class: r must be a positive integer");

  auto fail = [](const std::string& what) {
    throw ClassParameterError("validate_class: " + what);
  };
  auto check_range = [&](double v, const char* name) {
    std::ostringstream msg;
    if (n.p == 1.0) {
      if (!(v > 0.5 && v <= 2.0)) {
        msg << name << " must satisfy 1/2 < " << name << " <= 2 for p = 1 (got "
            << v << ")";
        fail(msg.str());
      }
    } else if (n.is_sup()) {
      if (!(v >= 1.0 && v < 3.0)) {
        msg << name << " must satisfy 1 <= " << name << " < 3 for p = inf (got "
            << v << ")";
        fail(msg.str());
      }
    } else {
      const double lo = 1.0 - 1.0 / (2.0 * n.p), hi = 3.0 - 1.0 / n.p;
      if (!(v > lo && v < hi)) {
        msg << name << " must satisfy " << lo << " < " << name << " < " << hi
            << " for p = " << n.p << " (got " << v << ")";
        fail(msg.str());
      }
    }
  };
  check_range(n.alpha, "alpha");
  check_range(n.beta, "beta");

  const double lambda0 = params.lambda0();
  const Window window{lambda0, 2.0 * params.r};
  if (!(window.lo < window.hi)) {
    std::ostringstream msg;
    msg << "admissible window is empty: lambda0 = " << lambda0
        << " >= 2r = " << window.hi;
    fail(msg.str());
  }
  if (std::isfinite(params.lambda) &&
      !(params.lambda > window.lo && params.lambda < window.hi)) {
    std::ostringstream msg;
    msg << "lambda = " << params.lambda << " outside the admissible window ("
        << window.lo << ", " << window.hi << ")";
    fail(msg.str());
  }
  return {lambda0, window};
}

FunctionRep to_grid(const FunctionRep& f, int size) {
  if (size < 8) throw std::invalid_argument("to_grid: size must be >= 8");
  if (f.is_grid() && f.grid_size() == size) return f;
  const std::vector<double>& nodes = interior_chebyshev_nodes(size);
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = f(nodes[i]);
  return FunctionRep::from_grid(std::move(values));
}

FunctionRep to_spectral(const FunctionRep& f, int K, int rule_order) {
  if (K < 0) throw std::invalid_argument("to_spectral: K must be >= 0");
  if (rule_order <= 0) rule_order = std::max(2 * K + 16, 64);
  return FunctionRep::from_spectral(
      analyze([&](double x) { return f(x); }, K, rule_order, f.breakpoints()));
}

} // namespace smoothlab
