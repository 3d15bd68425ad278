#pragma once

// Electrolyte noise at the electrochemical sensor:
//   y_f = y_g + n_g,  n_g = 4 k T R_b,  R_b = sqrt(pi / a_e) / Gamma,
//   Gamma = Gamma_s * y_g * 1e3.

#include <span>
#include <vector>

#include "bmcoc/units.hpp"

namespace bmcoc {

struct ReceivedSignal {
  std::vector<double> y_g;
  std::vector<double> n_g;
  std::vector<double> y_f;
};

/// Gamma[j] = Gamma_s * y[j] * 1e3. Throws InvalidArgument for negative y.
std::vector<double> conductivity(std::span<const double> y, double Gamma_s);

/// Gamma_s * y_floor * 1e3.
double conductivity_floor(const SimParams& p);

/// n_g[j] = 4 k_B T sqrt(pi / a_e) / max(Gamma[j], Gamma_floor).
std::vector<double> electrolyte_noise(std::span<const double> y, const SimParams& p);

ReceivedSignal received(std::span<const double> y_g, const SimParams& p);

}  // namespace bmcoc
