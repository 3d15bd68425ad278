#pragma once

// 1-D free-diffusion channel between the gate population and the sensor.

#include <span>
#include <vector>

#include "bmcoc/gate.hpp"
#include "bmcoc/units.hpp"

namespace bmcoc {

/// Green's function of the 1-D diffusion equation, 1/m:
/// exp(-z^2 / (4 D t)) / sqrt(4 pi D t). Throws InvalidArgument for t <= 0.
double green(double z, double t, double D);

struct ChannelKernel {
  double z2 = 0.0;
  double D = 0.0;
  double tau_g = 0.0;
  double dt = 0.0;
  std::vector<double> values;  // green(z2, m dt + tau_g, D), m = 0 .. n-1
};

ChannelKernel make_kernel(const SimParams& p);

/// Causal discrete convolution
///   y[j] = output_scale * dt * sum_{k<=j} g[k] * green(z2, (j-k) dt + tau_g, D),
/// summed in increasing k for reproducible rounding.
std::vector<double> propagate(std::span<const double> gate_output, const SimParams& p);
inline std::vector<double> propagate(const GateResponse& g, const SimParams& p) {
  return propagate(g.samples, p);
}

}  // namespace bmcoc
