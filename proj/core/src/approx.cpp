#include "smoothlab/approx.hpp"

#include "smoothlab/errors.hpp"
#include "smoothlab/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace smoothlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

double kernel_eval(const JacksonKernel& k, double t) {
  if (k.q < 1 || k.m < 1)
    throw std::invalid_argument("JacksonKernel: q and m must be >= 1");
  const double s = std::sin(0.5 * t);
  if (std::abs(s) < 1e-12)
    return std::pow(static_cast<double>(k.m) * k.m, k.q + 2);
  const double ratio = std::sin(0.5 * k.m * t) / s;
  return std::pow(ratio * ratio, k.q + 2);
}

namespace {

// A(arccos y): an algebraic polynomial of degree (q+2)(m-1) in y.
double kernel_eval_cos(const JacksonKernel& k, double y) {
  return kernel_eval(k, std::acos(std::clamp(y, -1.0, 1.0)));
}

std::mutex g_gamma_mutex;

} // namespace

double kernel_gamma(const JacksonKernel& k) {
  static std::map<std::pair<int, int>, double> cache;
  {
    std::lock_guard<std::mutex> lock(g_gamma_mutex);
    const auto it = cache.find({k.q, k.m});
    if (it != cache.end()) return it->second;
  }
  // integral of A(t) sin^3 t over [0,pi] = integral of A(arccos y)(1-y^2) dy
  const int order = k.cosine_degree() / 2 + 4;
  const QuadRule rule = gauss_legendre(order);
  double acc = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    const double y = rule.nodes[i];
    acc += rule.weights[i] * kernel_eval_cos(k, y) * (1.0 - y * y);
  }
  std::lock_guard<std::mutex> lock(g_gamma_mutex);
  cache[{k.q, k.m}] = acc;
  return acc;
}

std::vector<double> jackson_sigma(const JacksonKernel& k, int Kmax) {
  if (Kmax < 0) throw std::invalid_argument("jackson_sigma: Kmax must be >= 0");
  const double gamma = kernel_gamma(k);
  const int order = (k.cosine_degree() + Kmax + 4) / 2 + 4;
  const QuadRule rule = gauss_legendre(order);
  std::vector<double> sigma(Kmax + 1, 0.0);
  for (int i = 0; i < rule.order; ++i) {
    const double y = rule.nodes[i];
    const double siy = 1.0 - y * y;
    const double base = rule.weights[i] * kernel_eval_cos(k, y) * siy;
    const std::vector<double> leg = jacobi_eval_all({0.0, 0.0}, Kmax + 2, y);
    const std::vector<double> jac = jacobi_eval_all({2.0, 2.0}, Kmax, y);
    for (int j = 0; j <= Kmax; ++j) {
      const double r_j = leg[j + 2] + 1.5 * siy * jac[j];
      sigma[j] += base * (r_j - 1.0);
    }
  }
  for (double& s : sigma) s /= gamma;
  return sigma;
}

double jackson_moment(const JacksonKernel& k, double lambda, double tol) {
  if (!(lambda > -4.0))
    throw std::invalid_argument("jackson_moment: lambda must exceed -4");
  auto integrand = [&](double t) {
    return std::pow(t, lambda) * kernel_eval(k, t) * std::pow(std::sin(t), 3);
  };
  const double raw = integrate_adaptive_ab(integrand, 0.0, kPi, tol,
                                           /*grade_lo=*/true, /*grade_hi=*/true,
                                           lambda + 3.0, 3.0);
  return raw / kernel_gamma(k);
}

SpectralFn jackson_approximant(const FunctionRep& f, int r,
                               const JacksonKernel& k, int Kmax,
                               int rule_order) {
  if (r < 1) throw std::invalid_argument("jackson_approximant: r must be >= 1");
  const int degree_bound = k.cosine_degree();
  if (Kmax < degree_bound)
    throw DegreeTruncationError(
        "jackson_approximant: Kmax must be >= (q+2)(m-1)");
  if (rule_order <= 0) rule_order = std::max(2 * Kmax + 16, 256);

  const SpectralFn s = analyze([&](double x) { return f(x); }, Kmax,
                               rule_order, f.breakpoints());
  const std::vector<double> sigma = jackson_sigma(k, Kmax);
  const double sign = (r % 2 == 1) ? 1.0 : -1.0; // (-1)^{r+1}
  SpectralFn out;
  out.coeffs.resize(Kmax + 1);
  for (int j = 0; j <= Kmax; ++j)
    out.coeffs[j] = s.coeffs[j] * (1.0 + sign * std::pow(sigma[j], r));
  return out;
}

FunctionRep jackson_direct(const FunctionRep& f, int r, const JacksonKernel& k,
                           TranslateOptions opts, int yrule_order) {
  if (r != 1 && r != 2)
    throw UnsupportedOracle("jackson_direct: supported only for r in {1,2}");
  if (yrule_order <= 0) yrule_order = std::max(48, k.cosine_degree() + 8);

  const double gamma = kernel_gamma(k);
  const QuadRule rule = gauss_legendre(yrule_order);

  // J(phi) = (1/gamma) integral T_{cos t} phi A(t) sin^3 t dt, via y = cos t.
  // For kinked phi the map y -> T_y phi(x) loses smoothness where the kink
  // preimage crosses z = +-1, at y = b x +- sqrt((1-b^2)(1-x^2)); those y are
  // segment boundaries of a per-node composite rule.
  auto average = [&](const FunctionRep& phi) {
    std::vector<double> values(opts.grid_size, 0.0);
    if (phi.breakpoints().empty()) {
      for (int i = 0; i < rule.order; ++i) {
        const double y = rule.nodes[i];
        const double w =
            rule.weights[i] * kernel_eval_cos(k, y) * (1.0 - y * y) / gamma;
        const FunctionRep ty = apply_T(phi, y, opts);
        const std::vector<double>& tv = ty.grid_values();
        for (int j = 0; j < opts.grid_size; ++j) values[j] += w * tv[j];
      }
      return FunctionRep::from_grid(std::move(values));
    }

    // segment ends carry (y - y*)^{3/2} behavior, so the per-segment order
    // stays high
    const QuadRule seg_rule = gauss_legendre(80);
    const std::vector<double>& nodes = interior_chebyshev_nodes(opts.grid_size);
    for (int j = 0; j < opts.grid_size; ++j) {
      const double x = nodes[j];
      std::vector<double> cuts = {-1.0, 1.0};
      for (double b : phi.breakpoints()) {
        const double root =
            std::sqrt(std::max(0.0, (1.0 - b * b) * (1.0 - x * x)));
        for (double y : {b * x - root, b * x + root})
          if (y > -1.0 + 1e-12 && y < 1.0 - 1e-12) cuts.push_back(y);
      }
      std::sort(cuts.begin(), cuts.end());
      double acc = 0.0;
      for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
        const double c = 0.5 * (cuts[seg] + cuts[seg + 1]);
        const double h = 0.5 * (cuts[seg + 1] - cuts[seg]);
        if (h <= 0.0) continue;
        for (int i = 0; i < seg_rule.order; ++i) {
          const double y = c + h * seg_rule.nodes[i];
          const double w = seg_rule.weights[i] * h * kernel_eval_cos(k, y) *
                           (1.0 - y * y) / gamma;
          acc += w * apply_T_at(phi, y, x, opts.zrule_order);
        }
      }
      values[j] = acc;
    }
    return FunctionRep::from_grid(std::move(values));
  };

  FunctionRep g = average(f);
  if (r == 1) return g;
  FunctionRep gg = average(g);
  return grid_linear_combination(g, 2.0, gg, -1.0, opts.grid_size);
}

// --- best approximation ---

namespace {

struct CollocationGrid {
  std::vector<double> x;
  std::vector<double> q; // quadrature weights for dx
};

// Composite Gauss rule uniform in theta = arccos x (so node density matches
// polynomial oscillation), with panel boundaries at the kinks of f.
CollocationGrid theta_grid(int panels, int per_panel,
                           const std::vector<double>& breaks) {
  std::vector<double> cuts;
  cuts.reserve(panels + breaks.size() + 1);
  for (int i = 0; i <= panels; ++i) cuts.push_back(kPi * i / panels);
  for (double b : breaks)
    if (b > -1.0 && b < 1.0) cuts.push_back(std::acos(b));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return b - a < 1e-12; }),
             cuts.end());

  const QuadRule rule = gauss_legendre(per_panel);
  CollocationGrid grid;
  // walk theta downward so x = cos(theta) comes out ascending
  for (std::size_t seg = cuts.size() - 1; seg-- > 0;) {
    const double c = 0.5 * (cuts[seg] + cuts[seg + 1]);
    const double h = 0.5 * (cuts[seg + 1] - cuts[seg]);
    for (int i = rule.order; i-- > 0;) {
      const double theta = c + h * rule.nodes[i];
      grid.x.push_back(std::cos(theta));
      grid.q.push_back(rule.weights[i] * h * std::sin(theta));
    }
  }
  return grid;
}

Eigen::MatrixXd basis_matrix(const std::vector<double>& x, int n) {
  Eigen::MatrixXd out(x.size(), n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::vector<double> vals = jacobi_eval_all({2.0, 2.0}, n - 1, x[i]);
    for (int k = 0; k < n; ++k) out(i, k) = vals[k];
  }
  return out;
}

SpectralFn coeffs_to_spectral(const Eigen::VectorXd& c) {
  SpectralFn s;
  s.coeffs.resize(c.size());
  for (int k = 0; k < c.size(); ++k) s.coeffs[k] = c[k] * jacobi22_norm2(k);
  return s;
}

BestApprox solve_lp(const FunctionRep& f, int n, const NormParams& params) {
  const double p = params.p;
  const CollocationGrid grid =
      theta_grid(std::max(64, 2 * n), 10, f.breakpoints());
  const int N = static_cast<int>(grid.x.size());

  Eigen::VectorXd fv(N), wv(N), qv(N);
  for (int i = 0; i < N; ++i) {
    fv[i] = f(grid.x[i]);
    wv[i] = std::pow(1.0 - grid.x[i], params.alpha) *
            std::pow(1.0 + grid.x[i], params.beta);
    qv[i] = grid.q[i];
  }
  const Eigen::MatrixXd basis = basis_matrix(grid.x, n);

  auto value_of = [&](const Eigen::VectorXd& c) {
    const Eigen::VectorXd resid = fv - basis * c;
    double acc = 0.0;
    for (int i = 0; i < N; ++i)
      acc += qv[i] * std::pow(std::abs(wv[i] * resid[i]), p);
    return std::pow(acc, 1.0 / p);
  };

  auto weighted_ls = [&](const Eigen::VectorXd& row_w) {
    Eigen::MatrixXd A = row_w.asDiagonal() * basis;
    Eigen::VectorXd y = row_w.asDiagonal() * fv;
    return Eigen::VectorXd(A.colPivHouseholderQr().solve(y));
  };

  // p = 2 solution doubles as the IRLS start.
  Eigen::VectorXd base_w(N);
  for (int i = 0; i < N; ++i) base_w[i] = std::sqrt(qv[i]) * wv[i];
  Eigen::VectorXd c = weighted_ls(base_w);
  double value = value_of(c);
  if (p == 2.0) return {value, coeffs_to_spectral(c)};

  double best_value = value;
  Eigen::VectorXd best_c = c;
  int worse_count = 0;
  constexpr double kFloor = 1e-12;
  for (int iter = 0; iter < 300; ++iter) {
    Eigen::VectorXd row_w(N);
    const Eigen::VectorXd resid = fv - basis * c;
    for (int i = 0; i < N; ++i) {
      const double v = std::max(std::abs(wv[i] * resid[i]), kFloor);
      // |v|^p ~ u v^2 with u = |v|^{p-2}
      row_w[i] = std::sqrt(qv[i] * std::pow(v, p - 2.0)) * wv[i];
    }
    c = weighted_ls(row_w);
    const double next = value_of(c);
    if (std::abs(next - value) <= 1e-9 * std::max(next, 1e-300) ||
        next < 1e-13) {
      value = next;
      break;
    }
    if (next < best_value) {
      best_value = next;
      best_c = c;
      worse_count = 0;
    } else if (next > best_value * (1.0 + 1e-9)) {
      if (++worse_count >= 5) {
        std::vector<double> coeffs(best_c.data(), best_c.data() + best_c.size());
        throw SolverStall("best_approx: IRLS failed to decrease", coeffs,
                          best_value);
      }
    }
    value = next;
  }
  if (value > best_value) {
    value = best_value;
    c = best_c;
  }
  return {value, coeffs_to_spectral(c)};
}

BestApprox solve_sup(const FunctionRep& f, int n, const NormParams& params) {
  const CollocationGrid grid =
      theta_grid(std::max(256, 8 * n), 4, f.breakpoints());
  const int N = static_cast<int>(grid.x.size());

  Eigen::VectorXd fv(N), wv(N);
  double f_scale = 0.0;
  for (int i = 0; i < N; ++i) {
    fv[i] = f(grid.x[i]);
    wv[i] = std::pow(1.0 - grid.x[i], params.alpha) *
            std::pow(1.0 + grid.x[i], params.beta);
    f_scale = std::max(f_scale, std::abs(fv[i]) * wv[i]);
  }
  const Eigen::MatrixXd basis = basis_matrix(grid.x, n);

  // initial reference: n+1 points spread like Chebyshev extrema
  std::vector<int> ref(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double target = std::cos(kPi * (n - j) / n);
    const auto it =
        std::lower_bound(grid.x.begin(), grid.x.end(), target);
    int idx = static_cast<int>(std::distance(grid.x.begin(), it));
    idx = std::clamp(idx, 0, N - 1);
    ref[j] = idx;
  }
  std::sort(ref.begin(), ref.end());
  for (int j = 1; j <= n; ++j) ref[j] = std::max(ref[j], ref[j - 1] + 1);
  for (int j = n; j-- > 0;) ref[j] = std::min(ref[j], ref[j + 1] - 1);

  Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
  double level = 0.0, worst = 0.0;
  for (int iter = 0; iter < 80; ++iter) {
    // leveled system: P(x_j) + (-1)^j h / w(x_j) = f(x_j)
    Eigen::MatrixXd M(n + 1, n + 1);
    Eigen::VectorXd rhs(n + 1);
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k < n; ++k) M(j, k) = basis(ref[j], k);
      M(j, n) = (j % 2 == 0 ? 1.0 : -1.0) / wv[ref[j]];
      rhs[j] = fv[ref[j]];
    }
    const Eigen::VectorXd sol = M.colPivHouseholderQr().solve(rhs);
    c = sol.head(n);
    level = std::abs(sol[n]);

    Eigen::VectorXd err = fv - basis * c;
    for (int i = 0; i < N; ++i) err[i] *= wv[i];
    worst = err.cwiseAbs().maxCoeff();
    if (worst < 1e-13 * std::max(f_scale, 1.0)) break; // exact fit
    if (worst <= level * (1.0 + 1e-9)) break;          // equioscillation

    // multiple exchange: one max-|err| index per sign run
    std::vector<int> cand;
    int run_start = 0;
    auto sign_of = [&](int i) { return err[i] >= 0.0 ? 1 : -1; };
    for (int i = 1; i <= N; ++i) {
      if (i == N || sign_of(i) != sign_of(run_start)) {
        int best = run_start;
        for (int j = run_start; j < i; ++j)
          if (std::abs(err[j]) > std::abs(err[best])) best = j;
        cand.push_back(best);
        run_start = i;
      }
    }
    if (static_cast<int>(cand.size()) < n + 1) break; // degenerate error curve

    int global = cand[0];
    for (int idx : cand)
      if (std::abs(err[idx]) > std::abs(err[global])) global = idx;
    // choose the n+1 consecutive candidates containing the global extremum
    // with the largest total magnitude
    double best_sum = -1.0;
    std::vector<int> best_window;
    for (std::size_t s = 0; s + n < cand.size(); ++s) {
      bool contains = false;
      double sum = 0.0;
      for (std::size_t j = s; j <= s + n; ++j) {
        sum += std::abs(err[cand[j]]);
        contains = contains || cand[j] == global;
      }
      if (contains && sum > best_sum) {
        best_sum = sum;
        best_window.assign(cand.begin() + s, cand.begin() + s + n + 1);
      }
    }
    if (best_window.empty()) break;
    if (std::equal(best_window.begin(), best_window.end(), ref.begin()))
      break; // reference stable
    ref = best_window;
  }
  return {worst, coeffs_to_spectral(c)};
}

} // namespace

BestApprox best_approx(const FunctionRep& f, int n, const NormParams& params) {
  params.validate();
  if (n < 1) throw std::invalid_argument("best_approx: n must be >= 1");
  if (params.is_sup()) return solve_sup(f, n, params);
  return solve_lp(f, n, params);
}

DecayFit decay_fit(std::span<const std::pair<double, double>> points,
                   FitOrientation orientation) {
  std::vector<double> xs, ys;
  for (const auto& [scale, value] : points) {
    if (!(scale > 0.0))
      throw std::invalid_argument("decay_fit: scales must be positive");
    if (value > 0.0) {
      xs.push_back(std::log(scale));
      ys.push_back(std::log(value));
    }
  }
  const int m = static_cast<int>(xs.size());
  if (m < 3)
    throw InsufficientData("decay_fit: need at least 3 positive points, have " +
                           std::to_string(m));

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < m; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = m * sxx - sx * sx;
  if (std::abs(denom) < 1e-30)
    throw InsufficientData("decay_fit: degenerate abscissae");
  const double slope = (m * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / m;

  double rss = 0.0;
  for (int i = 0; i < m; ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    rss += r * r;
  }

  DecayFit fit;
  fit.exponent = orientation == FitOrientation::decay_in_scale ? -slope : slope;
  fit.log_constant = intercept;
  fit.residual = std::sqrt(rss / m);
  fit.points_used = m;
  return fit;
}

} // namespace smoothlab
