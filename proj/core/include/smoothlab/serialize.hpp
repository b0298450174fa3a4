#pragma once

#include "smoothlab/verify.hpp"

#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace smoothlab {

std::string format_double(double v); ///< %.17g

std::string to_json(const SpectralFn& s); ///< {"K": int, "coeffs": [...]}
SpectralFn spectral_from_json(const std::string& text);

std::string to_json(const ModulusResult& m);
std::string to_json(const DecayFit& f);
std::string to_json(const CheckReport& r);
std::string to_json(const std::vector<CheckReport>& reports);

/// Sweep rows under the fixed header
/// function_id,p,alpha,beta,r,scale,value (p prints as "inf" for the sup
/// norm). Output is byte-stable for identical inputs.
void write_sweep_csv(std::ostream& out, const std::string& function_id,
                     const NormParams& params, int r,
                     std::span<const std::pair<double, double>> rows);

} // namespace smoothlab
