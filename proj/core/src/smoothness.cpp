#include "smoothlab/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace smoothlab {

FunctionRep difference(const FunctionRep& f, std::span<const double> t,
                       TranslateOptions opts) {
  if (t.empty())
    throw std::invalid_argument("difference: step vector must be nonempty");
  FunctionRep g = f;
  for (double ti : t) {
    FunctionRep translated = apply_hatT(g, ti, opts);
    g = grid_linear_combination(translated, 1.0, g, -1.0, opts.grid_size);
  }
  return g;
}

SpectralFn difference_spectral(const SpectralFn& s, std::span<const double> t) {
  SpectralFn out = s;
  for (int k = 0; k <= s.max_degree(); ++k) {
    double factor = 1.0;
    for (double ti : t) factor *= eigenvalue_R(k, std::cos(ti)) - 1.0;
    out.coeffs[k] *= factor;
  }
  return out;
}

namespace {

std::vector<double> geometric_axis(double delta, int samples) {
  std::vector<double> axis;
  axis.reserve(samples);
  axis.push_back(0.0);
  for (int i = samples - 2; i >= 0; --i) axis.push_back(std::ldexp(delta, -i));
  return axis;
}

struct ModulusSearch {
  const std::vector<double>& axis;
  const NormParams& params;
  const TranslateOptions& opts;
  int r;
  double best_value = -1.0;
  std::vector<double> best_t;
  std::vector<double> current_t;
  long samples = 0;

  // g absent = the iterate is identically zero (a step of 0 appeared).
  void recurse(int depth, const std::optional<FunctionRep>& g) {
    if (depth == r) {
      ++samples;
      const double value =
          g ? weighted_norm(*g, params, 512, 1e-9) : 0.0;
      if (value > best_value) {
        best_value = value;
        best_t = current_t;
      }
      return;
    }
    for (double tv : axis) {
      current_t[depth] = tv;
      if (!g || tv == 0.0) {
        recurse(depth + 1, std::nullopt);
        continue;
      }
      FunctionRep translated = apply_hatT(*g, tv, opts);
      FunctionRep next =
          grid_linear_combination(translated, 1.0, *g, -1.0, opts.grid_size);
      recurse(depth + 1, next);
    }
  }
};

} // namespace

ModulusResult modulus(const FunctionRep& f, int r, double delta,
                      const NormParams& params, int samples_per_axis,
                      TranslateOptions opts) {
  params.validate();
  if (r < 1) throw std::invalid_argument("modulus: r must be >= 1");
  if (delta < 0.0) throw std::invalid_argument("modulus: delta must be >= 0");
  if (samples_per_axis < 2)
    throw std::invalid_argument("modulus: samples_per_axis must be >= 2");

  ModulusResult result;
  result.delta = delta;
  if (delta == 0.0) {
    result.argmax_t.assign(r, 0.0);
    result.samples_used = 1;
    return result;
  }

  const std::vector<double> axis = geometric_axis(delta, samples_per_axis);
  ModulusSearch search{axis, params, opts, r, -1.0, {}, {}, 0};
  search.current_t.assign(r, 0.0);
  search.recurse(0, f);
  result.value = std::max(search.best_value, 0.0);
  result.argmax_t = search.best_t;
  result.samples_used = search.samples;
  return result;
}

std::vector<ModulusResult> modulus_decay(const FunctionRep& f, int r,
                                         const NormParams& params,
                                         std::span<const double> deltas,
                                         int samples_per_axis,
                                         TranslateOptions opts) {
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0))
      throw std::invalid_argument("modulus_decay: deltas must be positive");
    if (i > 0 && !(deltas[i] < deltas[i - 1]))
      throw std::invalid_argument("modulus_decay: deltas must be decreasing");
  }
  std::vector<ModulusResult> out;
  out.reserve(deltas.size());
  for (double d : deltas)
    out.push_back(modulus(f, r, d, params, samples_per_axis, opts));
  return out;
}

} // namespace smoothlab
