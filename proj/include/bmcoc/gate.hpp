#pragma once

// AND-gate and ON-OFF-switch output kinetics.
//
//   d[AND]/dt = hill(A, K_A, n) * hill(B, K_B, n) - gamma [AND] + N_AND(t)
//   d[ON]/dt  = (C^n)^2 / ((K_C^n)^2 + 2 K_C^n C^n + (C^n)^2) - gamma [ON] + N_ON(t)
//
// The deterministic part is integrated with classical RK4; N(t) is added once
// per grid step as a Gaussian increment with standard deviation sigma * sqrt(dt).

#include <random>
#include <span>
#include <vector>

#include "bmcoc/transmitter.hpp"
#include "bmcoc/units.hpp"

namespace bmcoc {

struct GateResponse {
  Gate gate = Gate::And;
  double dt = 0.0;
  std::vector<double> samples;
  ScenarioFlags flags;
};

/// x^n / (K^n + x^n). Throws InvalidArgument for x < 0 or non-positive K, n.
double hill(double x, double K, double n);

/// Activation term of the ON switch; equals hill(c, K_C, n)^2.
double on_activation(double c, double K_C, double n);

/// Deterministic AND rate for Hill arguments a, b (already in K units).
double and_rate(double a, double b, double state, const SimParams& p);
/// Deterministic ON rate for Hill argument c.
double on_rate(double c, double state, const SimParams& p);

/// Integrates the selected gate over the input grid. AND needs lines A and B,
/// ON needs line C. Sample 0 is the initial (zero) state; sample j+1 is the
/// state after one grid step with the inputs at sample j held constant.
/// States are clamped to zero after each step. With production_delay the
/// series is shifted right by round(t_c / dt) samples.
GateResponse integrate_gate(std::span<const InputSignal> inputs, const ScenarioFlags& flags,
                            const SimParams& p, std::mt19937_64& rng);

}  // namespace bmcoc
