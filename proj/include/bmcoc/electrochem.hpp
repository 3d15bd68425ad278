#pragma once

// pH arithmetic for proton release at the sensor and the linear sensor
// calibrations (pH -> current, dissolved O2 -> current).

#include <span>
#include <vector>

#include "bmcoc/units.hpp"

namespace bmcoc {

enum class FitKind { PhCurrent, O2Current };

struct CalibrationFit {
  double slope = 0.0;
  double intercept = 0.0;
  FitKind kind = FitKind::PhCurrent;
};

/// Current (nA) vs pH fit of the FcCOOH sensor: I = -0.3219 pH + 3.1867.
constexpr CalibrationFit kDefaultPhFit{-0.3219, 3.1867, FitKind::PhCurrent};

CalibrationFit ph_fit(const SimParams& p);
CalibrationFit o2_fit(const SimParams& p);

/// Straight line through two measured (x, current) points.
CalibrationFit fit_two_points(double x0, double i0, double x1, double i1, FitKind kind);

/// -log10(10^-base_pH + added), assuming each released molecule adds one proton.
double ph_after_addition(double base_pH, double added);

/// slope * pH + intercept. Throws InvalidArgument for a non-pH fit.
double current_from_ph(double pH, const CalibrationFit& fit);

/// Calibrated dissolved-oxygen range, ppm (fully purged to fully saturated).
constexpr double kO2MinPpm = 0.5;
constexpr double kO2MaxPpm = 8.8;

struct O2Reading {
  double current = 0.0;
  bool extrapolated = false;  // concentration outside [kO2MinPpm, kO2MaxPpm]
};

O2Reading o2_current(double concentration_ppm, const CalibrationFit& fit);

/// pH after each of n_readings cumulative additions of the same amount.
std::vector<double> saturation_curve(double per_reading_addition, int n_readings, double base_pH);

/// pH after each cumulative addition in `additions` (one entry per reading).
std::vector<double> saturation_curve(std::span<const double> additions, double base_pH);

}  // namespace bmcoc
