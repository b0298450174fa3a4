#include "smoothlab/quadrature.hpp"

#include "smoothlab/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace smoothlab {

namespace {

constexpr double kPi = std::numbers::pi;

struct Recurrence {
  std::vector<double> diag;  // alpha_k
  std::vector<double> sub;   // sqrt(beta_k), k >= 1
  double mu0 = 0.0;          // total mass of the weight
};

// Three-term recurrence coefficients of the monic Jacobi polynomials for the
// weight (1-x)^a (1+x)^b.
Recurrence jacobi_recurrence(int order, double a, double b) {
  Recurrence rec;
  rec.diag.resize(order);
  rec.sub.resize(order > 1 ? order - 1 : 0);
  const double ab = a + b;
  rec.mu0 = std::pow(2.0, ab + 1.0) *
            std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                     std::lgamma(ab + 2.0));
  rec.diag[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k < order; ++k) {
    const double d = 2.0 * k + ab;
    rec.diag[k] = (b * b - a * a) / (d * (d + 2.0));
    const double beta = 4.0 * k * (k + a) * (k + b) * (k + ab) /
                        (d * d * (d + 1.0) * (d - 1.0));
    rec.sub[k - 1] = std::sqrt(beta);
  }
  return rec;
}

QuadRule golub_welsch(WeightKind kind, int order, double a, double b) {
  const Recurrence rec = jacobi_recurrence(order, a, b);
  Eigen::VectorXd diag =
      Eigen::Map<const Eigen::VectorXd>(rec.diag.data(), order);
  Eigen::VectorXd sub = order > 1
                            ? Eigen::Map<const Eigen::VectorXd>(rec.sub.data(),
                                                                order - 1)
                            : Eigen::VectorXd();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);

  QuadRule rule;
  rule.kind = kind;
  rule.a = a;
  rule.b = b;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = rec.mu0 * v0 * v0;
  }
  return rule;
}

} // namespace

QuadRule gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  return golub_welsch(WeightKind::legendre, order, 0.0, 0.0);
}

QuadRule gauss_chebyshev1(int order) {
  if (order < 1)
    throw std::invalid_argument("gauss_chebyshev1: order must be >= 1");
  QuadRule rule;
  rule.kind = WeightKind::chebyshev1;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.assign(order, kPi / order);
  // cos((2i-1)pi/(2n)), emitted in ascending order
  for (int i = 1; i <= order; ++i)
    rule.nodes[order - i] = std::cos((2.0 * i - 1.0) * kPi / (2.0 * order));
  return rule;
}

QuadRule gauss_jacobi(int order, double a, double b) {
  if (order < 1) throw std::invalid_argument("gauss_jacobi: order must be >= 1");
  if (!(a > -1.0) || !(b > -1.0))
    throw NonIntegrableWeight("gauss_jacobi: weight exponents must exceed -1");
  return golub_welsch(WeightKind::jacobi, order, a, b);
}

double integrate(const QuadRule& rule, const std::function<double(double)>& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v))
      throw EvaluationError("integrate: non-finite integrand value", rule.nodes[i]);
    acc += rule.weights[i] * v;
  }
  return acc;
}

namespace {

const QuadRule& panel_rule_coarse() {
  static const QuadRule r = gauss_legendre(16);
  return r;
}
const QuadRule& panel_rule_fine() {
  static const QuadRule r = gauss_legendre(32);
  return r;
}

struct Panel {
  double lo, hi;
  double value, err;
  int depth;
};

template <class F>
Panel eval_panel(const F& f, double lo, double hi, int depth) {
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  double s16 = 0.0, s32 = 0.0;
  const QuadRule& rc = panel_rule_coarse();
  const QuadRule& rf = panel_rule_fine();
  for (int i = 0; i < rc.order; ++i) {
    const double x = c + h * rc.nodes[i];
    const double v = f(x);
    if (!std::isfinite(v))
      throw EvaluationError("integrate_adaptive: non-finite integrand value", x);
    s16 += rc.weights[i] * v;
  }
  for (int i = 0; i < rf.order; ++i) {
    const double x = c + h * rf.nodes[i];
    const double v = f(x);
    if (!std::isfinite(v))
      throw EvaluationError("integrate_adaptive: non-finite integrand value", x);
    s32 += rf.weights[i] * v;
  }
  return Panel{lo, hi, s32 * h, std::abs(s32 - s16) * h, depth};
}

// Mass of the sliver [u, u+h] next to a graded endpoint, from the local model
// f ~ A (x-u)^e. Sampled at the sliver midpoint.
template <class F>
double endpoint_tail(const F& f, double u, double h, double e, double sign) {
  const double mid = u + sign * 0.5 * h;
  const double v = f(mid);
  if (!std::isfinite(v)) return 0.0;
  return v * h * std::pow(2.0, e) / (1.0 + e);
}

} // namespace

double integrate_adaptive_ab(const std::function<double(double)>& f, double lo,
                             double hi, double tol, bool grade_lo, bool grade_hi,
                             double exp_lo, double exp_hi,
                             const std::vector<double>& breaks) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_adaptive: tol must be > 0");
  if (!(hi > lo)) throw std::invalid_argument("integrate_adaptive: empty interval");
  if (grade_lo && !(exp_lo > -1.0))
    throw NonIntegrableWeight("integrate_adaptive: endpoint exponent must exceed -1");
  if (grade_hi && !(exp_hi > -1.0))
    throw NonIntegrableWeight("integrate_adaptive: endpoint exponent must exceed -1");

  const double W = hi - lo;

  // Split points: interior breaks, then geometric ladders toward graded ends.
  std::vector<double> cuts;
  for (double b : breaks)
    if (b > lo + 1e-15 * W && b < hi - 1e-15 * W) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.insert(cuts.begin(), lo);
  cuts.push_back(hi);

  std::vector<std::pair<double, double>> segments;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    segments.emplace_back(cuts[i], cuts[i + 1]);

  double total = 0.0, abs_total = 0.0, err_frozen = 0.0;
  std::vector<Panel> open;

  auto push_segment = [&](double u, double v, bool ladder_lo, bool ladder_hi) {
    const double w = v - u;
    double a = u, b = v;
    if (ladder_lo) {
      const int J = exp_lo < 0.0 ? 30 : 20;
      const double h = w * std::ldexp(1.0, -J);
      const double tail = endpoint_tail(f, u, h, exp_lo, +1.0);
      total += tail;
      abs_total += std::abs(tail);
      double right = u + h;
      for (int j = J; j >= (ladder_hi ? 2 : 1); --j) {
        const double next = u + w * std::ldexp(1.0, -(j - 1));
        open.push_back(eval_panel(f, right, next, 0));
        right = next;
      }
      a = right;
    }
    if (ladder_hi) {
      const int J = exp_hi < 0.0 ? 30 : 20;
      const double h = w * std::ldexp(1.0, -J);
      const double tail = endpoint_tail(f, v, h, exp_hi, -1.0);
      total += tail;
      abs_total += std::abs(tail);
      double left = v - h;
      for (int j = J; j >= (ladder_lo ? 2 : 1); --j) {
        const double next = v - w * std::ldexp(1.0, -(j - 1));
        open.push_back(eval_panel(f, next, left, 0));
        left = next;
      }
      b = left;
    }
    if (b > a) open.push_back(eval_panel(f, a, b, 0));
  };

  for (std::size_t i = 0; i < segments.size(); ++i) {
    const bool first = i == 0, last = i + 1 == segments.size();
    push_segment(segments[i].first, segments[i].second, first && grade_lo,
                 last && grade_hi);
  }

  for (const Panel& p : open) {
    total += p.value;
    abs_total += std::abs(p.value);
  }

  auto scale = [&] {
    return std::max({std::abs(total), 1e-3 * abs_total, 1e-300});
  };

  constexpr int kMaxDepth = 46;
  constexpr int kPanelBudget = 20000;
  int evals = static_cast<int>(open.size());

  std::vector<Panel> accepted;
  while (!open.empty()) {
    Panel p = open.back();
    open.pop_back();
    const double share = tol * scale() * ((p.hi - p.lo) / W);
    if (p.err <= 0.5 * share || p.depth >= kMaxDepth || evals >= kPanelBudget) {
      if (p.depth >= kMaxDepth || evals >= kPanelBudget) err_frozen += p.err;
      accepted.push_back(p);
      continue;
    }
    const double mid = 0.5 * (p.lo + p.hi);
    total -= p.value;
    abs_total -= std::abs(p.value);
    Panel l = eval_panel(f, p.lo, mid, p.depth + 1);
    Panel r = eval_panel(f, mid, p.hi, p.depth + 1);
    evals += 2;
    total += l.value + r.value;
    abs_total += std::abs(l.value) + std::abs(r.value);
    open.push_back(l);
    open.push_back(r);
  }

  double err_total = err_frozen;
  for (const Panel& p : accepted) err_total += p.err;
  if (err_total > tol * scale()) {
    std::ostringstream msg;
    msg << "integrate_adaptive: estimated relative error "
        << err_total / scale() << " exceeds tol " << tol;
    throw AccuracyNotReached(msg.str(), total);
  }
  return total;
}

double integrate_adaptive(const std::function<double(double)>& f,
                          EndpointExponents exps, double tol,
                          const std::vector<double>& interior_breaks) {
  return integrate_adaptive_ab(f, -1.0, 1.0, tol, true, true, exps.at_minus1,
                               exps.at_plus1, interior_breaks);
}

// --- CSV cache ---

namespace {
const char* kind_tag(WeightKind kind) {
  switch (kind) {
    case WeightKind::legendre: return "legendre";
    case WeightKind::chebyshev1: return "chebyshev1";
    case WeightKind::jacobi: return "jacobi";
  }
  return "unknown";
}
} // namespace

std::string rule_cache_filename(WeightKind kind, int order, double a, double b) {
  char buf[128];
  if (kind == WeightKind::jacobi)
    std::snprintf(buf, sizeof buf, "gauss_%s_o%d_a%.17g_b%.17g.csv",
                  kind_tag(kind), order, a, b);
  else
    std::snprintf(buf, sizeof buf, "gauss_%s_o%d.csv", kind_tag(kind), order);
  return buf;
}

void save_rule_csv(const QuadRule& rule, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) /
                    rule_cache_filename(rule.kind, rule.order, rule.a, rule.b);
  std::ofstream out(path);
  out << "node,weight\n";
  char buf[80];
  for (int i = 0; i < rule.order; ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", rule.nodes[i],
                  rule.weights[i]);
    out << buf;
  }
}

std::optional<QuadRule> load_rule_csv(WeightKind kind, int order, double a,
                                      double b, const std::string& dir) {
  const auto path =
      std::filesystem::path(dir) / rule_cache_filename(kind, order, a, b);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  std::getline(in, line); // header
  QuadRule rule;
  rule.kind = kind;
  rule.a = a;
  rule.b = b;
  rule.order = order;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) return std::nullopt;
    rule.nodes.push_back(std::stod(line.substr(0, comma)));
    rule.weights.push_back(std::stod(line.substr(comma + 1)));
  }
  if (static_cast<int>(rule.nodes.size()) != order) return std::nullopt;
  return rule;
}

QuadRule gauss_jacobi_cached(int order, double a, double b,
                             const std::string& cache_dir) {
  if (auto cached = load_rule_csv(WeightKind::jacobi, order, a, b, cache_dir))
    return *cached;
  QuadRule rule = gauss_jacobi(order, a, b);
  save_rule_csv(rule, cache_dir);
  return rule;
}

} // namespace smoothlab
