#include "bmcoc/channel.hpp"

#include <cmath>
#include <numbers>

#include "bmcoc/error.hpp"

namespace bmcoc {

double green(double z, double t, double D) {
  if (!(t > 0.0)) throw InvalidArgument("green: time must be positive");
  if (!(D > 0.0)) throw InvalidArgument("green: diffusion coefficient must be positive");
  const double four_dt = 4.0 * D * t;
  return std::exp(-z * z / four_dt) / std::sqrt(std::numbers::pi * four_dt);
}

ChannelKernel make_kernel(const SimParams& p) {
  ChannelKernel k{p.z2, p.D, p.tau_g, p.dt(), {}};
  k.values.resize(static_cast<std::size_t>(p.j_tot));
  for (std::size_t m = 0; m < k.values.size(); ++m) {
    k.values[m] = green(p.z2, static_cast<double>(m) * k.dt + p.tau_g, p.D);
  }
  return k;
}

std::vector<double> propagate(std::span<const double> gate_output, const SimParams& p) {
  if (static_cast<int>(gate_output.size()) != p.j_tot) {
    throw NumericError("gate output is not on the simulation grid");
  }
  const auto kernel = make_kernel(p);
  const auto n = gate_output.size();
  const double gain = p.output_scale * kernel.dt;
  std::vector<double> y(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k <= j; ++k) acc += gate_output[k] * kernel.values[j - k];
    y[j] = gain * acc;
  }
  return y;
}

}  // namespace bmcoc
