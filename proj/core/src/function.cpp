#include "smoothlab/function.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace smoothlab {

namespace {

struct GridBasis {
  std::vector<double> nodes;    // ascending, interior
  std::vector<double> bary;     // barycentric weights
};

const GridBasis& grid_basis(int size) {
  static std::deque<std::pair<int, GridBasis>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  for (const auto& entry : cache)
    if (entry.first == size) return entry.second;

  GridBasis basis;
  basis.nodes.resize(size);
  basis.bary.resize(size);
  for (int i = 0; i < size; ++i) {
    const double theta = (2.0 * i + 1.0) * std::numbers::pi / (2.0 * size);
    // -cos(theta) is ascending in i
    basis.nodes[i] = -std::cos(theta);
    basis.bary[i] = (i % 2 == 0 ? 1.0 : -1.0) * std::sin(theta);
  }
  cache.emplace_back(size, std::move(basis));
  return cache.back().second;
}

double barycentric_eval(const GridBasis& basis, const std::vector<double>& v,
                        double x) {
  double num = 0.0, den = 0.0;
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) {
    const double d = x - basis.nodes[i];
    if (std::abs(d) < 1e-300) return v[i];
    const double w = basis.bary[i] / d;
    num += w * v[i];
    den += w;
  }
  return num / den;
}

std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("function id: expected key=value, got '" +
                                  item + "'");
    out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return out;
}

double get_param(const std::map<std::string, double>& params,
                 const std::string& key, const std::string& id) {
  const auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("function id '" + id + "': missing parameter " +
                                key);
  return it->second;
}

} // namespace

const std::vector<double>& interior_chebyshev_nodes(int size) {
  if (size < 1)
    throw std::invalid_argument("interior_chebyshev_nodes: size must be >= 1");
  return grid_basis(size).nodes;
}

struct FunctionRep::Impl {
  enum class Kind { callable, grid, spectral } kind = Kind::callable;
  std::string id;
  std::vector<double> breaks;
  std::function<double(double)> fn;
  std::vector<double> grid_values;
  SpectralFn spec;
};

FunctionRep::FunctionRep(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

FunctionRep::FunctionRep() {
  auto impl = std::make_shared<Impl>();
  impl->id = "const:c=0";
  impl->fn = [](double) { return 0.0; };
  impl_ = std::move(impl);
}

FunctionRep FunctionRep::from_callable(std::string label,
                                       std::function<double(double)> f,
                                       std::vector<double> breakpoints) {
  auto impl = std::make_shared<Impl>();
  impl->id = std::move(label);
  impl->fn = std::move(f);
  impl->breaks = std::move(breakpoints);
  return FunctionRep(std::move(impl));
}

FunctionRep FunctionRep::from_grid(std::vector<double> values) {
  if (values.empty())
    throw std::invalid_argument("FunctionRep::from_grid: empty sample vector");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::grid;
  impl->id = "grid:" + std::to_string(values.size());
  impl->grid_values = std::move(values);
  return FunctionRep(std::move(impl));
}

FunctionRep FunctionRep::from_spectral(SpectralFn s) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::spectral;
  impl->id = "spectral:K=" + std::to_string(s.max_degree());
  impl->spec = std::move(s);
  return FunctionRep(std::move(impl));
}

FunctionRep FunctionRep::named(const std::string& id) {
  const auto colon = id.find(':');
  const std::string head = id.substr(0, colon);
  const std::map<std::string, double> params =
      colon == std::string::npos ? std::map<std::string, double>{}
                                 : parse_params(id.substr(colon + 1));

  auto impl = std::make_shared<Impl>();
  impl->id = id;

  if (head == "identity") {
    impl->fn = [](double x) { return x; };
  } else if (head == "const") {
    const double c = get_param(params, "c", id);
    impl->fn = [c](double) { return c; };
  } else if (head == "jacobi22") {
    const int n = static_cast<int>(get_param(params, "n", id));
    if (n < 0) throw std::invalid_argument("jacobi22: n must be >= 0");
    impl->fn = [n](double x) { return jacobi_eval({2.0, 2.0}, n, x); };
  } else if (head == "abspow") {
    const double a = get_param(params, "a", id);
    const double s = get_param(params, "s", id);
    if (!(std::abs(a) < 1.0))
      throw std::invalid_argument("abspow: center must lie in (-1,1)");
    if (!(s > 0.0)) throw std::invalid_argument("abspow: power must be > 0");
    impl->fn = [a, s](double x) { return std::pow(std::abs(x - a), s); };
    impl->breaks = {a};
  } else if (head == "step") {
    // C^1 cubic ramp from 0 to 1 across [a-w/2, a+w/2]
    const double a = get_param(params, "a", id);
    const double w = get_param(params, "w", id);
    if (!(w > 0.0)) throw std::invalid_argument("step: width must be > 0");
    impl->fn = [a, w](double x) {
      const double u = std::clamp((x - a + 0.5 * w) / w, 0.0, 1.0);
      return u * u * (3.0 - 2.0 * u);
    };
    impl->breaks = {a - 0.5 * w, a + 0.5 * w};
    std::erase_if(impl->breaks,
                  [](double b) { return !(b > -1.0 && b < 1.0); });
  } else {
    throw std::invalid_argument("unknown function id '" + id + "'");
  }
  return FunctionRep(std::move(impl));
}

double FunctionRep::operator()(double x) const {
  switch (impl_->kind) {
    case Impl::Kind::callable:
      return impl_->fn(x);
    case Impl::Kind::grid:
      return barycentric_eval(
          grid_basis(static_cast<int>(impl_->grid_values.size())),
          impl_->grid_values, x);
    case Impl::Kind::spectral:
      return synthesize(impl_->spec, x);
  }
  return 0.0;
}

const std::string& FunctionRep::id() const { return impl_->id; }

const std::vector<double>& FunctionRep::breakpoints() const {
  return impl_->breaks;
}

bool FunctionRep::is_grid() const { return impl_->kind == Impl::Kind::grid; }
bool FunctionRep::is_spectral() const {
  return impl_->kind == Impl::Kind::spectral;
}

int FunctionRep::grid_size() const {
  return is_grid() ? static_cast<int>(impl_->grid_values.size()) : 0;
}

const std::vector<double>& FunctionRep::grid_values() const {
  if (!is_grid())
    throw std::logic_error("FunctionRep::grid_values: not a grid representation");
  return impl_->grid_values;
}

const SpectralFn& FunctionRep::spectral() const {
  if (!is_spectral())
    throw std::logic_error("FunctionRep::spectral: not a spectral representation");
  return impl_->spec;
}

FunctionRep grid_linear_combination(const FunctionRep& a, double ca,
                                    const FunctionRep& b, double cb,
                                    int grid_size) {
  if (a.is_grid()) grid_size = a.grid_size();
  else if (b.is_grid()) grid_size = b.grid_size();
  if (a.is_grid() && b.is_grid() && a.grid_size() != b.grid_size())
    throw std::invalid_argument(
        "grid_linear_combination: mismatched grid sizes");
  const std::vector<double>& nodes = interior_chebyshev_nodes(grid_size);
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    values[i] = ca * (a.is_grid() ? a.grid_values()[i] : a(nodes[i])) +
                cb * (b.is_grid() ? b.grid_values()[i] : b(nodes[i]));
  return FunctionRep::from_grid(std::move(values));
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = {
      "const:c=1",
      "identity",
      "jacobi22:n=3",
      "jacobi22:n=5",
      "abspow:a=0,s=1",
      "abspow:a=0.3,s=1.5",
      "abspow:a=-0.4,s=2.5",
      "step:a=0,w=0.5",
  };
  return ids;
}

} // namespace smoothlab
