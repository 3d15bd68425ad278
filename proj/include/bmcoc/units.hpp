#pragma once

// Simulation parameters, config loading, unit conversion and chamber geometry.
//
// Canonical units everywhere inside the library: seconds, metres, mol/L.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace bmcoc {

enum class Gate { And, On };
enum class Detector { Standard, Blind };
enum class Line { A, B, C };

struct ScenarioFlags {
  bool production_noise = false;
  bool production_delay = false;
  Detector detector = Detector::Standard;
  Gate gate = Gate::And;

  /// "NPN"/"YPN" for the noise flag joined with "NPD"/"YPD" for the delay flag.
  std::string label() const;
};

std::string_view to_string(Gate g);
std::string_view to_string(Detector d);
std::string_view to_string(Line l);

struct SimParams {
  // Gate kinetics.
  double K_A = 10.0;
  double K_B = 10.0;
  double K_C = 10.0;
  double n = 2.0;
  double gamma = 0.01;

  // Diffusion.
  double D = 1.37e-7;  // m^2/s
  double z1 = 5e-6;    // m
  double z2 = 50e-6;   // m

  // Inputs, mol/L.
  double m_A = 1.2e-3;
  double m_B = 1.8e-3;
  double m_C = 1.2e-3;

  // Timing, s.
  double t_c = 720.0;
  double t_total = 18000.0;
  double t_p = 1800.0;
  double tau_in = 100.0;
  double tau_g = 100.0;

  // Receiver.
  double Gamma_s = 34.892;
  double T_abs = 300.15;          // K
  double a_e = 100e-12;           // m^2
  double k_B = 1.380649e-23;      // J/K

  // Production noise standard deviations, mol/L.
  double sigma_AND = 2e-9;
  double sigma_ON = 1e-9;

  // Sampling grid.
  int samples_per_pulse = 50;
  int n_pulses = 10;
  int j_tot = 500;

  // Chamber geometry, m.
  double r_ch = 5e-6;
  double h_ch1 = 10e-6;

  // Blind detector initial divisor, samples.
  double L_p = 2.0;

  std::uint64_t seed = 42;

  // Scale between the input pulse concentration and the Hill argument (same
  // units as K): hill argument = input / hill_input_scale.
  double hill_input_scale = 0.01;
  // Converts the propagated gate output to mol/L at the sensor.
  double output_scale = 2.37e-13;
  // Concentration floor for the conductivity in the electrolyte-noise term.
  double y_floor = 1e-11;
  // RK4 sub-steps per grid interval.
  int rk4_substeps = 16;

  // Sensor calibration fits (current in nA).
  double ph_slope = -0.3219;
  double ph_intercept = 3.1867;
  double o2_slope = -1.0;      // placeholder, set from a measured calibration
  double o2_intercept = 0.0;   // placeholder
  double base_pH = 9.0;

  double dt() const { return t_p / samples_per_pulse; }
  /// Number of grid samples corresponding to a duration, rounded to nearest.
  int samples_for(double seconds) const;
  /// Throws ConfigError if any invariant is violated.
  void validate() const;

  bool operator==(const SimParams&) const = default;
};

/// Parses `key = value` lines (`#` starts a comment). Absent keys keep their
/// defaults; t_total and j_tot are derived when not given explicitly.
SimParams load_params(std::string_view config_text);
SimParams load_params_file(const std::string& path);

/// Every key in a stable order, in a form load_params accepts.
std::string serialize(const SimParams& p);

/// Reads one parameter by its config key. Throws ConfigError for unknown keys.
double get_param(const SimParams& p, std::string_view key);
/// Writes one parameter by its config key (no validation).
void set_param(SimParams& p, std::string_view key, double value);

struct ChamberVolumes {
  double population;  // V1, m^3
  double diffusion;   // V2, m^3
};

/// V1 = pi r^2 h1 for the population chamber, V2 = d h w for the diffusion chamber.
ChamberVolumes chamber_volumes(double r_ch, double h_ch1, double d_ch2, double h_ch2,
                               double w_ch2);

/// Units: "mol/L", "mmol/L", "umol/L" (or "µmol/L"), "nmol/L", "mol/m3" (or "mol/m^3").
double convert_concentration(double value, std::string_view from_unit,
                             std::string_view to_unit);

}  // namespace bmcoc
