#include "smoothlab/serialize.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>

namespace smoothlab {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return nullptr;
  return v;
}

} // namespace

std::string to_json(const SpectralFn& s) {
  json j;
  j["K"] = s.max_degree();
  j["coeffs"] = s.coeffs;
  return j.dump();
}

SpectralFn spectral_from_json(const std::string& text) {
  const json j = json::parse(text);
  SpectralFn s;
  s.coeffs = j.at("coeffs").get<std::vector<double>>();
  if (j.contains("K") && j.at("K").get<int>() != s.max_degree())
    throw std::invalid_argument("SpectralFn JSON: K does not match coeffs");
  return s;
}

std::string to_json(const ModulusResult& m) {
  json j;
  j["delta"] = m.delta;
  j["value"] = m.value;
  j["argmax_t"] = m.argmax_t;
  j["samples_used"] = m.samples_used;
  return j.dump();
}

std::string to_json(const DecayFit& f) {
  json j;
  j["exponent"] = f.exponent;
  j["log_constant"] = f.log_constant;
  j["residual"] = f.residual;
  j["points_used"] = f.points_used;
  return j.dump();
}

namespace {

json report_to_json(const CheckReport& r) {
  json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["worst"] = number_or_inf(r.worst);
  j["slope"] = number_or_inf(r.slope);
  j["witness"] = r.witness;
  j["samples"] = r.samples;
  j["tolerance"] = r.tolerance;
  j["notes"] = r.notes;
  return j;
}

} // namespace

std::string to_json(const CheckReport& r) { return report_to_json(r).dump(); }

std::string to_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const CheckReport& r : reports) arr.push_back(report_to_json(r));
  return arr.dump(2);
}

void write_sweep_csv(std::ostream& out, const std::string& function_id,
                     const NormParams& params, int r,
                     std::span<const std::pair<double, double>> rows) {
  out << "function_id,p,alpha,beta,r,scale,value\n";
  const std::string p_text =
      params.is_sup() ? "inf" : format_double(params.p);
  for (const auto& [scale, value] : rows) {
    out << function_id << ',' << p_text << ',' << format_double(params.alpha)
        << ',' << format_double(params.beta) << ',' << r << ','
        << format_double(scale) << ',' << format_double(value) << '\n';
  }
}

} // namespace smoothlab
