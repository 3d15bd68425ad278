#include "bmcoc/gate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bmcoc/error.hpp"

namespace bmcoc {

namespace {

const InputSignal* find_line(std::span<const InputSignal> inputs, Line line) {
  for (const auto& in : inputs) {
    if (in.line == line) return &in;
  }
  return nullptr;
}

const InputSignal& require_line(std::span<const InputSignal> inputs, Line line,
                                const SimParams& p) {
  const auto* in = find_line(inputs, line);
  if (!in) {
    throw InvalidArgument("gate input line " + std::string(to_string(line)) + " is missing");
  }
  if (static_cast<int>(in->samples.size()) != p.j_tot || std::abs(in->dt - p.dt()) > 1e-12 * p.dt()) {
    throw NumericError("input line " + std::string(to_string(line)) +
                       " is not on the simulation grid");
  }
  return *in;
}

template <class Rate>
double rk4_step(double y, double h, Rate&& rate) {
  const double k1 = rate(y);
  const double k2 = rate(y + 0.5 * h * k1);
  const double k3 = rate(y + 0.5 * h * k2);
  const double k4 = rate(y + h * k3);
  return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

double hill(double x, double K, double n) {
  if (x < 0.0 || std::isnan(x)) throw InvalidArgument("hill: concentration must be non-negative");
  if (!(K > 0.0) || !(n > 0.0)) throw InvalidArgument("hill: K and n must be positive");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  const double u = std::pow(x / K, n);
  return u / (1.0 + u);
}

double on_activation(double c, double K_C, double n) {
  if (c < 0.0 || std::isnan(c)) throw InvalidArgument("on_activation: concentration must be non-negative");
  if (!(K_C > 0.0) || !(n > 0.0)) throw InvalidArgument("on_activation: K and n must be positive");
  if (std::isinf(c)) return 1.0;
  // Numerator and denominator divided by (K_C^n)^2 to stay in range.
  const double u = std::pow(c / K_C, n);
  return (u * u) / (1.0 + 2.0 * u + u * u);
}

double and_rate(double a, double b, double state, const SimParams& p) {
  return hill(a, p.K_A, p.n) * hill(b, p.K_B, p.n) - p.gamma * state;
}

double on_rate(double c, double state, const SimParams& p) {
  return on_activation(c, p.K_C, p.n) - p.gamma * state;
}

GateResponse integrate_gate(std::span<const InputSignal> inputs, const ScenarioFlags& flags,
                            const SimParams& p, std::mt19937_64& rng) {
  const auto n = static_cast<std::size_t>(p.j_tot);
  std::vector<double> activation(n, 0.0);
  const double scale = p.hill_input_scale;

  if (flags.gate == Gate::And) {
    const auto& a = require_line(inputs, Line::A, p);
    const auto& b = require_line(inputs, Line::B, p);
    for (std::size_t j = 0; j < n; ++j) {
      activation[j] = hill(a.samples[j] / scale, p.K_A, p.n) * hill(b.samples[j] / scale, p.K_B, p.n);
    }
  } else {
    const auto& c = require_line(inputs, Line::C, p);
    for (std::size_t j = 0; j < n; ++j) {
      activation[j] = on_activation(c.samples[j] / scale, p.K_C, p.n);
    }
  }

  const double dt = p.dt();
  const double h = dt / p.rk4_substeps;
  const double sigma = flags.gate == Gate::And ? p.sigma_AND : p.sigma_ON;
  std::normal_distribution<double> normal(0.0, 1.0);

  GateResponse out{flags.gate, dt, std::vector<double>(n, 0.0), flags};
  double state = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double act = activation[j];
    const auto rate = [&](double y) { return act - p.gamma * y; };
    for (int s = 0; s < p.rk4_substeps; ++s) state = rk4_step(state, h, rate);
    if (flags.production_noise) state += sigma * std::sqrt(dt) * normal(rng);
    state = std::max(state, 0.0);
    if (!std::isfinite(state)) throw NumericError("gate state became non-finite");
    out.samples[j + 1] = state;
  }

  if (flags.production_delay) {
    const auto shift = static_cast<std::size_t>(std::clamp(p.samples_for(p.t_c), 0, p.j_tot));
    std::shift_right(out.samples.begin(), out.samples.end(), static_cast<std::ptrdiff_t>(shift));
    std::fill_n(out.samples.begin(), shift, 0.0);
  }
  return out;
}

}  // namespace bmcoc
