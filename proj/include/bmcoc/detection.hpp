#pragma once

// Threshold estimation, digitization and reliable-logic-computation scoring.

#include <cstdint>
#include <span>
#include <vector>

#include "bmcoc/transmitter.hpp"
#include "bmcoc/units.hpp"

namespace bmcoc {

struct DetectionReport {
  Detector detector = Detector::Standard;
  std::vector<double> thresholds;      // one per pulse, mol/L
  std::vector<std::uint8_t> bits;      // detected, one per sample
  std::vector<std::uint8_t> expected;  // ground truth, one per sample
  int tp = 0;
  int tn = 0;
  int fp = 0;
  int fn = 0;
  double rlc = 0.0;  // percent

  bool operator==(const DetectionReport&) const = default;
};

/// Half the maximum of `window`. Throws InvalidArgument when empty.
double standard_threshold(std::span<const double> window);

/// Maximum of the first pulse divided by L_p. Throws InvalidArgument for L_p < 1.
double blind_initial(std::span<const double> first_pulse, double L_p);

/// One blind-detector adjustment. The ratio r_current / pulse_max below 0.5
/// raises the threshold to 0.5 * pulse_max; otherwise it is kept. A zero
/// pulse maximum keeps the threshold.
double blind_update(double r_current, double pulse_max);

/// Standard detector thresholds: computed once from the grid window of the
/// first pulse whose logical value is 1 and held for every pulse. +inf when
/// no pulse is expected to carry a 1.
std::vector<double> standard_thresholds(std::span<const double> y_f,
                                        std::span<const std::uint8_t> logical, int samples_per_pulse);

/// Blind detector thresholds: blind_initial on pulse 0, then blind_update with
/// each following pulse's maximum.
std::vector<double> blind_thresholds(std::span<const double> y_f, int samples_per_pulse, double L_p);

/// bit[j] = 1 iff y_f[j] >= threshold of the pulse containing j.
std::vector<std::uint8_t> digitize(std::span<const double> y_f, std::span<const double> thresholds,
                                   int samples_per_pulse);

/// Per-pulse logical truth of the gate: AND = a & b, ON = c. A line with zero
/// amplitude never asserts.
std::vector<std::uint8_t> logical_pulses(const InputPatterns& patterns, Gate gate,
                                         const SimParams& p);

/// Modelled end-to-end delay in samples: round((tau_in + tau_g [+ t_c]) / dt).
int expected_delay_samples(const SimParams& p, bool production_delay);

/// Per-pulse truth expanded to samples and shifted right by the modelled delay.
std::vector<std::uint8_t> expected_bits(std::span<const std::uint8_t> logical, const SimParams& p,
                                        bool production_delay);

/// Confusion counts and RLC = 100 (TP + TN) / j_tot. Throws on length mismatch.
DetectionReport rlc(std::span<const std::uint8_t> bits, std::span<const std::uint8_t> expected);

}  // namespace bmcoc
