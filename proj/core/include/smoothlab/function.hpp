#pragma once

#include "smoothlab/polybasis.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace smoothlab {

/// Interior Chebyshev-type grid on (-1,1), ascending; never includes the
/// endpoints.
const std::vector<double>& interior_chebyshev_nodes(int size);

/// A function on [-1,1] in one of three forms: named closed-form, samples on
/// the fixed interior grid with barycentric interpolation, or a Fourier-Jacobi
/// coefficient sequence. Values are immutable; copies are cheap.
class FunctionRep {
public:
  /// Constant zero.
  FunctionRep();

  /// Catalog entry addressed by string id, e.g. "abspow:a=0,s=1".
  static FunctionRep named(const std::string& id);
  static FunctionRep from_callable(std::string label,
                                   std::function<double(double)> f,
                                   std::vector<double> breakpoints = {});
  static FunctionRep from_grid(std::vector<double> values);
  static FunctionRep from_spectral(SpectralFn s);

  double operator()(double x) const;

  const std::string& id() const;
  /// Interior points where the function is not smooth (kinks); integration
  /// routines split panels there.
  const std::vector<double>& breakpoints() const;

  bool is_grid() const;
  bool is_spectral() const;
  int grid_size() const;
  const std::vector<double>& grid_values() const;
  const SpectralFn& spectral() const;

private:
  struct Impl;
  explicit FunctionRep(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// ca*a + cb*b on a shared grid (operands are sampled if necessary).
FunctionRep grid_linear_combination(const FunctionRep& a, double ca,
                                    const FunctionRep& b, double cb,
                                    int grid_size = 257);

/// Ids of the shipped catalog functions (known-smoothness probes).
const std::vector<std::string>& catalog_ids();

} // namespace smoothlab
