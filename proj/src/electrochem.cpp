#include "bmcoc/electrochem.hpp"

#include <cmath>

#include "bmcoc/error.hpp"

namespace bmcoc {

CalibrationFit ph_fit(const SimParams& p) { return {p.ph_slope, p.ph_intercept, FitKind::PhCurrent}; }

CalibrationFit o2_fit(const SimParams& p) { return {p.o2_slope, p.o2_intercept, FitKind::O2Current}; }

CalibrationFit fit_two_points(double x0, double i0, double x1, double i1, FitKind kind) {
  if (x0 == x1) throw InvalidArgument("fit_two_points: abscissae must differ");
  const double slope = (i1 - i0) / (x1 - x0);
  return {slope, i0 - slope * x0, kind};
}

double ph_after_addition(double base_pH, double added) {
  if (!(base_pH > 0.0 && base_pH < 14.0)) throw InvalidArgument("base pH must lie in (0, 14)");
  if (!(added >= 0.0) || !std::isfinite(added)) {
    throw InvalidArgument("added concentration must be non-negative");
  }
  return -std::log10(std::pow(10.0, -base_pH) + added);
}

double current_from_ph(double pH, const CalibrationFit& fit) {
  if (fit.kind != FitKind::PhCurrent) throw InvalidArgument("current_from_ph needs a pH fit");
  return fit.slope * pH + fit.intercept;
}

O2Reading o2_current(double concentration_ppm, const CalibrationFit& fit) {
  if (fit.kind != FitKind::O2Current) throw InvalidArgument("o2_current needs an O2 fit");
  return {fit.slope * concentration_ppm + fit.intercept,
          concentration_ppm < kO2MinPpm || concentration_ppm > kO2MaxPpm};
}

std::vector<double> saturation_curve(std::span<const double> additions, double base_pH) {
  std::vector<double> out;
  out.reserve(additions.size());
  double pH = base_pH;
  for (double a : additions) {
    pH = ph_after_addition(pH, a);
    out.push_back(pH);
  }
  return out;
}

std::vector<double> saturation_curve(double per_reading_addition, int n_readings, double base_pH) {
  if (n_readings < 1) throw InvalidArgument("n_readings must be >= 1");
  const std::vector<double> additions(static_cast<std::size_t>(n_readings), per_reading_addition);
  return saturation_curve(additions, base_pH);
}

}  // namespace bmcoc
