#pragma once

// Logical bit patterns per input line and the sampled molecular input train.

#include <cstdint>
#include <vector>

#include "bmcoc/units.hpp"

namespace bmcoc {

struct BitPattern {
  Line line = Line::A;
  std::vector<std::uint8_t> bits;  // one entry per pulse, 0 or 1

  bool operator==(const BitPattern&) const = default;
};

enum class PatternKind { AllOnes, Alternating, SeededRandom };

struct PatternSpec {
  PatternKind kind = PatternKind::SeededRandom;
  std::uint64_t seed = 0;
};

/// Deterministic for a given spec. Alternating starts with 1.
BitPattern make_bit_pattern(const PatternSpec& spec, int n_pulses, Line line = Line::A);

/// Default input patterns for a run: lines A, B and C are drawn in that order
/// from one generator seeded with `seed`, so A and B are independent and the
/// AND gate sees every input combination.
struct InputPatterns {
  BitPattern a;
  BitPattern b;
  BitPattern c;
};
InputPatterns default_patterns(std::uint64_t seed, int n_pulses);

struct InputSignal {
  Line line = Line::A;
  double dt = 0.0;
  std::vector<double> samples;  // mol/L-scaled pulse amplitude per grid time
  BitPattern bits;
};

/// Amplitude of one input pulse `elapsed` seconds after the pulse starts
/// arriving: m / sqrt(4 pi D (elapsed + tau_in)) * exp(-z1^2 / (4 D (elapsed + tau_in))).
double input_pulse_amplitude(double m, double elapsed, const SimParams& p);

/// Sampled input train. The whole train is shifted right by tau_in; each bit-1
/// pulse restarts its elapsed-time clock at its boundary, bit-0 pulses emit 0.
InputSignal input_concentration(const BitPattern& bits, double amplitude, const SimParams& p);

/// Pulse amplitude of a line under `p` (m_A, m_B or m_C).
double line_amplitude(Line line, const SimParams& p);

}  // namespace bmcoc
