#include "smoothlab/verify.hpp"

#include "smoothlab/errors.hpp"
#include "smoothlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace smoothlab {

namespace {

constexpr double kPi = std::numbers::pi;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double unit() { return (eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double normal() {
    if (have_) {
      have_ = false;
      return cached_;
    }
    double u1 = unit(), u2 = unit();
    while (u1 <= 1e-300) u1 = unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(2.0 * kPi * u2);
    have_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

private:
  std::mt19937_64 eng_;
  bool have_ = false;
  double cached_ = 0.0;
};

std::string format(const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

// Random polynomial model: independent standard-normal coefficients in the
// Chebyshev basis.
struct ChebPoly {
  std::vector<double> c;

  double eval(double x) const {
    if (c.empty()) return 0.0;
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) {
      const double b0 = 2.0 * x * b1 - b2 + c[k];
      b2 = b1;
      b1 = b0;
    }
    return x * b1 - b2 + c[0];
  }

  // d_k = d_{k+2} + 2(k+1) c_{k+1}, descending; d_0 halved at the end
  ChebPoly derivative() const {
    const int n = static_cast<int>(c.size());
    if (n <= 1) return ChebPoly{{0.0}};
    std::vector<double> d(n - 1, 0.0);
    for (int k = n - 2; k >= 0; --k)
      d[k] = (k + 2 <= n - 2 ? d[k + 2] : 0.0) + 2.0 * (k + 1) * c[k + 1];
    d[0] *= 0.5;
    return ChebPoly{std::move(d)};
  }
};

} // namespace

TrendSummary assess_bounded_ratios(
    std::span<const std::pair<double, double>> scale_ratio) {
  TrendSummary out;
  if (scale_ratio.empty()) return out;

  std::map<double, double> per_scale_max;
  std::vector<double> ratios;
  for (const auto& [scale, ratio] : scale_ratio) {
    auto [it, inserted] = per_scale_max.try_emplace(scale, ratio);
    if (!inserted) it->second = std::max(it->second, ratio);
    ratios.push_back(ratio);
    out.worst = std::max(out.worst, ratio);
  }
  std::sort(ratios.begin(), ratios.end());
  out.median = ratios[ratios.size() / 2];

  // log-log slope of the running max; fitted on the upper half of the scale
  // range (several checked ratios converge to their sup from below, and only
  // the asymptotic trend distinguishes bounded from unbounded)
  std::vector<std::pair<double, double>> running;
  double run = 0.0;
  for (const auto& [scale, mx] : per_scale_max) {
    run = std::max(run, mx);
    if (run > 0.0) running.emplace_back(scale, run);
  }
  if (running.size() >= 3) {
    const double cutoff =
        std::sqrt(running.front().first * running.back().first);
    std::size_t start = 0;
    while (start < running.size() && running[start].first < cutoff) ++start;
    start = std::min(start, running.size() - 3);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(running.size() - start);
    for (std::size_t i = start; i < running.size(); ++i) {
      const double lx = std::log(running[i].first);
      const double ly = std::log(running[i].second);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    const double denom = m * sxx - sx * sx;
    if (std::abs(denom) > 1e-30) out.slope = (m * sxy - sx * sy) / denom;
  }
  out.bounded = out.slope <= 0.1 && out.worst <= 10.0 * out.median + 1e-12;
  return out;
}

CheckReport check_elementary(long n_samples, std::uint64_t seed) {
  if (n_samples < 1)
    throw std::invalid_argument("check_elementary: n_samples must be >= 1");
  Rng rng(seed);
  CheckReport report;
  report.name = "elementary";
  report.tolerance = 1e-12;
  report.samples = n_samples;

  double worst_violation = 0.0;
  double sup_sq = 0.0, sup_minus = 0.0, sup_plus = 0.0;
  std::string witness;
  for (long i = 0; i < n_samples; ++i) {
    const double x = rng.uniform(-1.0, 1.0);
    const double z = rng.uniform(-1.0, 1.0);
    const double t = rng.uniform(0.0, kPi);
    const auto p = TranslationKernelPoint::make(x, z, t);

    const double violation =
        std::max({std::abs(p.R) - 1.0, -p.slack_si_x(), -p.slack_si_y(),
                  -p.slack_combo()});
    if (violation > worst_violation) {
      worst_violation = violation;
      witness = format("x=%.6f z=%.6f t=%.6f", x, z, t);
    }
    const double one_minus_r2 = 1.0 - p.R * p.R;
    sup_sq = std::max(sup_sq, (1.0 - x * x) / (one_minus_r2 + t * t));
    sup_minus = std::max(sup_minus, (1.0 - x) / (1.0 - p.R + t * t));
    sup_plus = std::max(sup_plus, (1.0 + x) / (1.0 + p.R + t * t));
  }
  report.worst = worst_violation;
  report.passed = worst_violation <= report.tolerance;
  report.witness = witness.empty() ? "none" : witness;
  report.notes = format(
      "empirical C: (1-x^2)/(1-R^2+t^2) <= %.4f, (1-x)/(1-R+t^2) <= %.4f, "
      "(1+x)/(1+R+t^2) <= %.4f",
      sup_sq, sup_minus, sup_plus);
  return report;
}

CheckReport check_eigen(int nu_max, double tol, std::uint64_t seed) {
  Rng rng(seed);
  CheckReport report;
  report.name = "eigen";
  report.tolerance = tol;

  double worst = 0.0;
  std::string witness = "none";
  for (int nu = 0; nu <= nu_max; ++nu) {
    const FunctionRep p_nu =
        FunctionRep::named("jacobi22:n=" + std::to_string(nu));
    for (int s = 0; s < 25; ++s) {
      const double x = rng.uniform(-0.99, 0.99);
      const double y = rng.uniform(-1.0, 1.0);
      const double p_nu_x = jacobi_eval({2.0, 2.0}, nu, x);
      const double d1 = std::abs(apply_T1_at(p_nu, y, x) -
                                 p_nu_x * legendre_eval(nu + 2, y));
      const double d2 = std::abs(apply_T2_at(p_nu, y, x) -
                                 p_nu_x * jacobi_eval({2.0, 2.0}, nu, y));
      const double d = std::max(d1, d2);
      ++report.samples;
      if (d > worst) {
        worst = d;
        witness = format("nu=%d x=%.6f y=%.6f", nu, x, y);
      }
    }
  }
  report.worst = worst;
  report.passed = worst <= tol;
  report.witness = witness;
  return report;
}

CheckReport check_adjoint(
    const std::vector<std::pair<std::string, std::string>>& pairs, double tol) {
  CheckReport report;
  report.name = "adjoint";
  report.tolerance = tol;

  const double ys[] = {-0.9, 0.3, 0.8};
  double worst = 0.0;
  std::string witness = "none";
  for (const auto& [fid, gid] : pairs) {
    const FunctionRep f = FunctionRep::named(fid);
    const FunctionRep g = FunctionRep::named(gid);
    for (int k = 1; k <= 2; ++k) {
      for (double y : ys) {
        const auto [lhs, rhs] = adjoint_pair(f, g, y, k);
        const double d = std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
        ++report.samples;
        if (d > worst) {
          worst = d;
          witness = format("f=%s g=%s k=%d y=%.2f", fid.c_str(), gid.c_str(),
                           k, y);
        }
      }
    }
  }
  report.worst = worst;
  report.passed = worst <= tol;
  report.witness = witness;
  return report;
}

CheckReport check_adjoint_random(int n_pairs, std::uint64_t seed, double tol) {
  Rng rng(seed);
  const std::vector<std::string>& ids = catalog_ids();
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(n_pairs);
  for (int i = 0; i < n_pairs; ++i) {
    const int a = static_cast<int>(rng.uniform(0.0, ids.size() - 1e-9));
    const int b = static_cast<int>(rng.uniform(0.0, ids.size() - 1e-9));
    pairs.emplace_back(ids[a], ids[b]);
  }
  return check_adjoint(pairs, tol);
}

CheckReport check_bernstein_markov(const NormParams& params, double rho,
                                   double sigma, int n_max, int trials,
                                   std::uint64_t seed) {
  params.validate();
  if (rho < 0.0 || sigma < 0.0)
    throw std::invalid_argument("check_bernstein_markov: rho, sigma >= 0");
  if (n_max < 8)
    throw std::invalid_argument("check_bernstein_markov: n_max must be >= 8");

  const NormParams deriv_params{params.p, params.alpha + 0.5,
                                params.beta + 0.5};
  const NormParams strong_params{params.p, params.alpha + rho,
                                 params.beta + sigma};
  deriv_params.validate();
  strong_params.validate();

  Rng rng(seed);
  CheckReport report;
  report.name = "bernstein-markov";
  report.tolerance = 0.1;

  std::vector<std::pair<double, double>> ratio1_pts, ratio2_pts;
  double worst = 0.0;
  std::string witness = "none";
  const double power = 2.0 * std::max(rho, sigma);
  for (int n = 2; n <= n_max; n *= 2) {
    double max1 = 0.0, max2 = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      ChebPoly poly;
      poly.c.resize(n);
      for (double& ck : poly.c) ck = rng.normal();
      const ChebPoly deriv = poly.derivative();
      const FunctionRep p_fn = FunctionRep::from_callable(
          "random-poly", [poly](double x) { return poly.eval(x); });
      const FunctionRep d_fn = FunctionRep::from_callable(
          "random-poly-deriv", [deriv](double x) { return deriv.eval(x); });

      const double norm_base = weighted_norm(p_fn, params, 256, 1e-7);
      if (norm_base < 1e-14) continue;
      const double r1 =
          weighted_norm(d_fn, deriv_params, 256, 1e-7) / (n * norm_base);
      const double r2 = norm_base /
                        (std::pow(n, power) *
                         weighted_norm(p_fn, strong_params, 256, 1e-7));
      max1 = std::max(max1, r1);
      max2 = std::max(max2, r2);
      ++report.samples;
      if (std::max(r1, r2) > worst) {
        worst = std::max(r1, r2);
        witness = format("n=%d trial=%d", n, trial);
      }
    }
    ratio1_pts.emplace_back(n, max1);
    ratio2_pts.emplace_back(n, max2);
  }

  const TrendSummary t1 = assess_bounded_ratios(ratio1_pts);
  const TrendSummary t2 = assess_bounded_ratios(ratio2_pts);
  report.worst = worst;
  report.slope = std::max(t1.slope, t2.slope);
  report.passed = t1.slope <= 0.1 && t2.slope <= 0.1;
  report.witness = witness;
  report.notes = format("slope(ratio1)=%.4f slope(ratio2)=%.4f", t1.slope,
                        t2.slope);
  return report;
}

CheckReport check_bound_T(const NormParams& params,
                          const BoundExponents& exponents,
                          std::span<const double> t_grid,
                          std::span<const std::string> catalog_subset) {
  params.validate();
  const double gamma = std::min(params.alpha, params.beta);
  if (params.is_sup()) {
    if (!(gamma >= 1.0))
      throw ClassParameterError(
          "check_bound_T: need min(alpha,beta) >= 1 for p = inf");
  } else if (!(gamma > 1.0 - 1.0 / (2.0 * params.p))) {
    throw ClassParameterError(
        "check_bound_T: need min(alpha,beta) > 1 - 1/(2p)");
  }

  const NormParams n1{params.p, params.alpha - exponents.gamma1,
                      params.beta - exponents.gamma2};
  const NormParams n2{params.p, params.alpha - exponents.gamma3,
                      params.beta - exponents.gamma3};
  const NormParams n3{params.p,
                      params.alpha - exponents.gamma1 - exponents.gamma3,
                      params.beta - exponents.gamma2 - exponents.gamma3};

  CheckReport report;
  report.name = "bound-T";
  report.tolerance = 0.1;

  std::vector<std::pair<double, double>> pts;
  double worst = 0.0;
  std::string witness = "none";
  for (const std::string& id : catalog_subset) {
    const FunctionRep f = FunctionRep::named(id);
    const double base = weighted_norm(f, params);
    const double m1 = weighted_norm(f, n1);
    const double m2 = weighted_norm(f, n2);
    const double m3 = weighted_norm(f, n3);
    if (base < 1e-14) continue;
    for (double t : t_grid) {
      const double lhs = weighted_norm(apply_hatT(f, t), params);
      const double rhs =
          base +
          std::pow(t, 2.0 * (exponents.gamma1 + exponents.gamma2)) * m1 +
          std::pow(t, 2.0 * exponents.gamma3) * m2 +
          std::pow(t, 2.0 * (exponents.gamma1 + exponents.gamma2 +
                             exponents.gamma3)) *
              m3;
      const double ratio = lhs / rhs;
      pts.emplace_back(1.0 / t, ratio);
      ++report.samples;
      if (ratio > worst) {
        worst = ratio;
        witness = format("f=%s t=%.3f", id.c_str(), t);
      }
    }
  }
  const TrendSummary trend = assess_bounded_ratios(pts);
  report.worst = worst;
  report.slope = trend.slope;
  report.passed = std::isfinite(worst) && trend.bounded;
  report.witness = witness;
  report.notes = format("median ratio %.4f", trend.median);
  return report;
}

CheckReport check_rho_sigma(const std::string& f_id, const NormParams& params,
                            const TransferParams& transfer, int N_max) {
  params.validate();
  if (transfer.rho < 0.0 || transfer.sigma < 0.0)
    throw std::invalid_argument("check_rho_sigma: rho, sigma >= 0");
  const double lambda0 = transfer.lambda0();
  if (std::isfinite(transfer.lambda) && !(transfer.lambda > lambda0))
    throw ClassParameterError(
        "check_rho_sigma: hypothesis requires lambda > lambda0 = 2 max(rho, "
        "sigma)");

  const NormParams strong{params.p, params.alpha + transfer.rho,
                          params.beta + transfer.sigma};
  strong.validate();
  const FunctionRep f = FunctionRep::named(f_id);

  CheckReport report;
  report.name = "rho-sigma";
  report.tolerance = 0.1;

  std::vector<std::pair<double, double>> strong_pts;
  std::vector<double> weak_err;
  std::vector<double> scales;
  for (int n = 0; n <= N_max; ++n) {
    const int degree = 1 << n;
    const BestApprox best = best_approx(f, degree, strong);
    const SpectralFn poly = best.coeffs;
    const FunctionRep resid = FunctionRep::from_callable(
        "residual",
        [f, poly](double x) { return f(x) - synthesize(poly, x); },
        f.breakpoints());
    strong_pts.emplace_back(degree, best.value);
    weak_err.push_back(weighted_norm(resid, params));
    scales.push_back(degree);
    report.samples++;
  }

  double lambda = transfer.lambda;
  if (!std::isfinite(lambda)) {
    const DecayFit fit =
        decay_fit(strong_pts, FitOrientation::decay_in_scale);
    lambda = fit.exponent;
  }
  if (!(lambda > lambda0)) {
    report.passed = false;
    report.notes = format("measured lambda %.3f does not exceed lambda0 %.3f",
                          lambda, lambda0);
    return report;
  }

  std::vector<std::pair<double, double>> ratio_pts;
  double worst = 0.0;
  for (std::size_t i = 0; i < weak_err.size(); ++i) {
    const double ratio =
        weak_err[i] * std::pow(scales[i], lambda - lambda0);
    ratio_pts.emplace_back(scales[i], ratio);
    worst = std::max(worst, ratio);
  }
  const TrendSummary trend = assess_bounded_ratios(ratio_pts);
  report.worst = worst;
  report.slope = trend.slope;
  report.passed = trend.bounded;
  report.witness = format("f=%s lambda=%.3f lambda0=%.3f", f_id.c_str(),
                          lambda, lambda0);
  return report;
}

CheckReport check_degree_Q(const std::string& f_id, int r, int q, int m,
                           double tol) {
  const JacksonKernel kernel{q, m};
  const int degree_bound = kernel.cosine_degree();
  const int Kmax = degree_bound + 16;
  const FunctionRep f = FunctionRep::named(f_id);
  const SpectralFn approx = jackson_approximant(f, r, kernel, Kmax);

  double tail_sq = 0.0, total_sq = 0.0;
  for (int j = 0; j <= Kmax; ++j) {
    const double mass =
        approx.coeffs[j] * approx.coeffs[j] / jacobi22_norm2(j);
    total_sq += mass;
    if (j > degree_bound) tail_sq += mass;
  }
  const double rel =
      total_sq > 0.0 ? std::sqrt(tail_sq / total_sq) : 0.0;

  CheckReport report;
  report.name = "degree-Q";
  report.tolerance = tol;
  report.samples = Kmax + 1;
  report.worst = rel;
  report.passed = rel <= tol;
  report.witness = format("f=%s r=%d q=%d m=%d bound=%d", f_id.c_str(), r, q,
                          m, degree_bound);
  report.notes = format("|a_bound| = %.3e (may be nonzero)",
                        std::abs(approx.coeffs[degree_bound]));
  return report;
}

namespace {

void check_direct_ranges(const NormParams& n) {
  std::ostringstream msg;
  if (n.p == 1.0) {
    if (n.alpha > 2.0 || n.beta > 2.0)
      throw ClassParameterError(
          "check_direct: need alpha, beta <= 2 for p = 1");
  } else {
    const double hi = n.is_sup() ? 3.0 : 3.0 - 1.0 / n.p;
    if (!(n.alpha < hi && n.beta < hi)) {
      msg << "check_direct: need alpha, beta < " << hi;
      throw ClassParameterError(msg.str());
    }
  }
}

void check_inverse_ranges(const NormParams& n) {
  if (n.is_sup()) {
    if (!(n.alpha >= 1.0 && n.beta >= 1.0))
      throw ClassParameterError(
          "check_inverse: need alpha, beta >= 1 for p = inf");
  } else {
    const double lo = 1.0 - 1.0 / (2.0 * n.p);
    if (!(n.alpha > lo && n.beta > lo))
      throw ClassParameterError("check_inverse: need alpha, beta > 1 - 1/(2p)");
  }
}

} // namespace

CheckReport check_direct(const std::string& f_id, const ClassParams& params,
                         std::span<const int> n_list) {
  params.norm.validate();
  check_direct_ranges(params.norm);
  const FunctionRep f = FunctionRep::named(f_id);

  CheckReport report;
  report.name = "direct";
  report.tolerance = 0.1;

  // modulus sweep on a dyadic delta grid matched to the n range
  std::vector<double> deltas;
  for (int k = 2; k <= 7; ++k) deltas.push_back(std::ldexp(1.0, -k));
  const std::vector<ModulusResult> sweep =
      modulus_decay(f, params.r, params.norm, deltas);

  std::vector<std::pair<double, double>> w_pts;
  for (const ModulusResult& m : sweep) w_pts.emplace_back(m.delta, m.value);

  double lambda = params.lambda;
  if (!std::isfinite(lambda))
    lambda = decay_fit(w_pts, FitOrientation::growth_in_scale).exponent;

  double M = 0.0;
  for (const ModulusResult& m : sweep)
    M = std::max(M, m.value / std::pow(m.delta, lambda));
  if (!(M > 0.0)) {
    report.passed = true;
    report.notes = "degenerate: modulus sweep identically zero";
    return report;
  }

  std::vector<std::pair<double, double>> ratio_pts;
  double worst = 0.0;
  std::string witness = "none";
  for (int n : n_list) {
    const double e_n = best_approx(f, n, params.norm).value;
    const double ratio = e_n * std::pow(n, lambda) / M;
    ratio_pts.emplace_back(n, ratio);
    ++report.samples;
    if (ratio > worst) {
      worst = ratio;
      witness = format("n=%d", n);
    }
  }
  const TrendSummary trend = assess_bounded_ratios(ratio_pts);
  report.worst = worst;
  report.slope = trend.slope;
  report.passed = trend.bounded;
  report.witness = witness;
  report.notes = format("f=%s lambda=%.3f M=%.4e", f_id.c_str(), lambda, M);
  return report;
}

CheckReport check_inverse(const std::string& f_id, const ClassParams& params,
                          std::span<const double> delta_list) {
  params.norm.validate();
  check_inverse_ranges(params.norm);
  const FunctionRep f = FunctionRep::named(f_id);

  CheckReport report;
  report.name = "inverse";
  report.tolerance = 0.1;

  double delta_min = kPi;
  for (double d : delta_list) delta_min = std::min(delta_min, d);
  // dyadic N with pi/2^N < delta <= pi/2^{N-1}
  const int N_max =
      std::min(7, static_cast<int>(std::ceil(std::log2(kPi / delta_min))));

  std::vector<std::pair<double, double>> e_pts;
  for (int k = 0; k <= N_max; ++k) {
    const int n = 1 << k;
    e_pts.emplace_back(n, best_approx(f, n, params.norm).value);
  }

  double lambda = params.lambda;
  if (!std::isfinite(lambda))
    lambda = decay_fit(e_pts, FitOrientation::decay_in_scale).exponent;

  double M = 0.0;
  for (const auto& [n, e] : e_pts) M = std::max(M, e * std::pow(n, lambda));
  if (!(M > 0.0)) {
    report.passed = true;
    report.notes = "degenerate: best-approximation sweep identically zero";
    return report;
  }

  std::vector<std::pair<double, double>> ratio_pts;
  double worst = 0.0;
  std::string witness = "none";
  for (double delta : delta_list) {
    const ModulusResult m = modulus(f, params.r, delta, params.norm);
    const double ratio = m.value / (M * std::pow(delta, lambda));
    ratio_pts.emplace_back(1.0 / delta, ratio);
    ++report.samples;
    if (ratio > worst) {
      worst = ratio;
      witness = format("delta=%.4f", delta);
    }
  }
  const TrendSummary trend = assess_bounded_ratios(ratio_pts);
  report.worst = worst;
  report.slope = trend.slope;
  report.passed = trend.bounded;
  report.witness = witness;
  report.notes = format("f=%s lambda=%.3f M=%.4e N_max=%d", f_id.c_str(),
                        lambda, M, N_max);
  return report;
}

BoundExponents BoundExponents::from(const NormParams& params, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::invalid_argument("BoundExponents: epsilon must lie in (0, 1/2)");
  BoundExponents e;
  e.epsilon = epsilon;
  e.gamma = std::min(params.alpha, params.beta);
  e.gamma1 = std::max(params.alpha - params.beta, 0.0);
  e.gamma2 = std::max(params.beta - params.alpha, 0.0);
  if (params.p == 1.0) {
    e.gamma3 = e.gamma >= 1.0 ? e.gamma - 1.0 : 0.0;
  } else {
    const double threshold =
        1.5 - (params.is_sup() ? 0.0 : 1.0 / (2.0 * params.p));
    e.gamma3 = e.gamma >= threshold ? e.gamma - threshold + epsilon : 0.0;
  }
  return e;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "elementary", "eigen",    "adjoint",  "bernstein-markov", "bound-T",
      "rho-sigma",  "degree-Q", "direct",   "inverse"};
  return names;
}

CheckReport run_check(const std::string& name, const VerifyConfig& config) {
  if (name == "elementary")
    return check_elementary(config.elementary_samples, config.seed + 1);
  if (name == "eigen")
    return check_eigen(config.eigen_nu_max, config.tol, config.seed + 2);
  if (name == "adjoint")
    return check_adjoint_random(config.adjoint_pairs, config.seed + 3,
                                config.tol);
  if (name == "bernstein-markov")
    return check_bernstein_markov(config.norm, 0.5, 0.5, config.bm_n_max,
                                  config.bm_trials, config.seed + 4);
  if (name == "bound-T") {
    const double t_grid[] = {0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.5, 0.7, 1.0};
    return check_bound_T(config.norm, BoundExponents::from(config.norm),
                         t_grid, catalog_ids());
  }
  if (name == "rho-sigma")
    return check_rho_sigma(config.function_id, config.norm,
                           TransferParams{0.5, 0.5,
                                          std::numeric_limits<double>::quiet_NaN()},
                           6);
  if (name == "degree-Q")
    return check_degree_Q(config.function_id, config.r, config.q, 4,
                          config.tol);
  if (name == "direct") {
    const int n_list[] = {4, 8, 16, 32, 64, 128};
    return check_direct(config.function_id,
                        ClassParams{config.norm, config.r,
                                    std::numeric_limits<double>::quiet_NaN()},
                        n_list);
  }
  if (name == "inverse") {
    const double delta_list[] = {0.5, 0.25, 0.125, 0.0625, 0.03125};
    return check_inverse(config.function_id,
                         ClassParams{config.norm, config.r,
                                     std::numeric_limits<double>::quiet_NaN()},
                         delta_list);
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

std::vector<CheckReport> run_checks(std::span<const std::string> names,
                                    const VerifyConfig& config) {
  std::vector<CheckReport> out;
  out.reserve(names.size());
  for (const std::string& name : names) out.push_back(run_check(name, config));
  return out;
}

} // namespace smoothlab
