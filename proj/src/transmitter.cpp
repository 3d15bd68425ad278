#include "bmcoc/transmitter.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "bmcoc/error.hpp"

namespace bmcoc {

namespace {

void fill_random(BitPattern& out, std::mt19937_64& gen, int n_pulses) {
  out.bits.resize(static_cast<std::size_t>(n_pulses));
  // Top bit of each draw; mt19937_64 output is fully specified, so patterns
  // are identical on every platform.
  for (auto& b : out.bits) b = static_cast<std::uint8_t>(gen() >> 63);
}

}  // namespace

BitPattern make_bit_pattern(const PatternSpec& spec, int n_pulses, Line line) {
  if (n_pulses < 1) throw InvalidArgument("n_pulses must be >= 1");
  BitPattern out{line, {}};
  switch (spec.kind) {
    case PatternKind::AllOnes:
      out.bits.assign(static_cast<std::size_t>(n_pulses), 1);
      break;
    case PatternKind::Alternating:
      out.bits.resize(static_cast<std::size_t>(n_pulses));
      for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] = (i % 2 == 0) ? 1 : 0;
      break;
    case PatternKind::SeededRandom: {
      std::mt19937_64 gen(spec.seed);
      fill_random(out, gen, n_pulses);
      break;
    }
  }
  return out;
}

InputPatterns default_patterns(std::uint64_t seed, int n_pulses) {
  if (n_pulses < 1) throw InvalidArgument("n_pulses must be >= 1");
  std::mt19937_64 gen(seed);
  InputPatterns p;
  p.a.line = Line::A;
  p.b.line = Line::B;
  p.c.line = Line::C;
  fill_random(p.a, gen, n_pulses);
  fill_random(p.b, gen, n_pulses);
  fill_random(p.c, gen, n_pulses);
  return p;
}

double line_amplitude(Line line, const SimParams& p) {
  switch (line) {
    case Line::A: return p.m_A;
    case Line::B: return p.m_B;
    case Line::C: return p.m_C;
  }
  return 0.0;
}

double input_pulse_amplitude(double m, double elapsed, const SimParams& p) {
  const double t = elapsed + p.tau_in;
  return m / std::sqrt(4.0 * std::numbers::pi * p.D * t) * std::exp(-p.z1 * p.z1 / (4.0 * p.D * t));
}

InputSignal input_concentration(const BitPattern& bits, double amplitude, const SimParams& p) {
  if (static_cast<int>(bits.bits.size()) != p.n_pulses) {
    throw InvalidArgument("bit pattern length must equal n_pulses");
  }
  if (amplitude < 0.0) throw InvalidArgument("pulse amplitude must be non-negative");

  InputSignal sig{bits.line, p.dt(), std::vector<double>(static_cast<std::size_t>(p.j_tot), 0.0),
                  bits};
  const double dt = p.dt();
  for (int j = 0; j < p.j_tot; ++j) {
    const double since_arrival = j * dt - p.tau_in;
    if (since_arrival < 0.0) continue;
    const auto pulse = static_cast<int>(std::floor(since_arrival / p.t_p));
    if (pulse >= p.n_pulses || bits.bits[static_cast<std::size_t>(pulse)] == 0) continue;
    const double elapsed = since_arrival - pulse * p.t_p;
    sig.samples[static_cast<std::size_t>(j)] = input_pulse_amplitude(amplitude, elapsed, p);
  }
  return sig;
}

}  // namespace bmcoc
