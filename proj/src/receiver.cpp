#include "bmcoc/receiver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bmcoc/error.hpp"

namespace bmcoc {

std::vector<double> conductivity(std::span<const double> y, double Gamma_s) {
  std::vector<double> out(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] < 0.0) throw InvalidArgument("conductivity: concentration must be non-negative");
    out[j] = Gamma_s * y[j] * 1e3;
  }
  return out;
}

double conductivity_floor(const SimParams& p) { return p.Gamma_s * p.y_floor * 1e3; }

std::vector<double> electrolyte_noise(std::span<const double> y, const SimParams& p) {
  const auto gamma = conductivity(y, p.Gamma_s);
  const double floor = conductivity_floor(p);
  const double numerator = 4.0 * p.k_B * p.T_abs * std::sqrt(std::numbers::pi / p.a_e);
  std::vector<double> out(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) out[j] = numerator / std::max(gamma[j], floor);
  return out;
}

ReceivedSignal received(std::span<const double> y_g, const SimParams& p) {
  ReceivedSignal r;
  r.y_g.assign(y_g.begin(), y_g.end());
  r.n_g = electrolyte_noise(y_g, p);
  r.y_f.resize(y_g.size());
  for (std::size_t j = 0; j < y_g.size(); ++j) r.y_f[j] = r.y_g[j] + r.n_g[j];
  return r;
}

}  // namespace bmcoc
