#pragma once

// End-to-end pipeline, Monte Carlo sweeps and CSV reports.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bmcoc/detection.hpp"
#include "bmcoc/gate.hpp"
#include "bmcoc/receiver.hpp"
#include "bmcoc/transmitter.hpp"
#include "bmcoc/units.hpp"

namespace bmcoc {

/// Independent, reproducible stream for one Monte Carlo run.
std::mt19937_64 run_rng(std::uint64_t master_seed, std::uint64_t run_index);

/// Everything one run produces, stage by stage.
struct PipelineTrace {
  std::vector<InputSignal> inputs;
  GateResponse gate;
  ReceivedSignal signal;
  std::vector<std::uint8_t> logical;  // per pulse
  DetectionReport report;
};

PipelineTrace run_pipeline(const SimParams& p, const ScenarioFlags& flags,
                           const InputPatterns& patterns, std::uint64_t run_index = 0);

/// transmitter -> gate kinetics -> channel -> receiver -> detection.
DetectionReport run_scenario(const SimParams& p, const ScenarioFlags& flags,
                             const InputPatterns& patterns, std::uint64_t run_index = 0);

enum class SweepKind { Delay, Concentration, Saturation };

struct NoiseDelay {
  bool production_noise = false;
  bool production_delay = false;
};

struct SweepSpec {
  SweepKind kind = SweepKind::Delay;
  std::vector<Gate> gates{Gate::And, Gate::On};
  std::vector<Detector> detectors{Detector::Standard};
  std::vector<NoiseDelay> scenarios{{}};
  std::vector<double> values;  // tau_g in s, or m_B / m_C in mol/L
  int repeats = 10;
  std::uint64_t seed = 42;

  /// Throws ConfigError when values are empty or non-positive, or repeats < 1.
  void validate() const;
};

std::vector<double> default_delay_values();          // 100 .. 600 s
std::vector<double> default_concentration_values();  // 1.0 .. 3.0 mmol/L in mol/L

struct SweepPoint {
  Gate gate = Gate::And;
  Detector detector = Detector::Standard;
  ScenarioFlags flags;
  std::string x_name;
  double x_value = 0.0;
  std::vector<double> rlc_runs;
  double rlc_mean = 0.0;
  double rlc_std = 0.0;  // sample standard deviation, 0 for a single run
};

struct RunReport {
  SweepSpec spec;
  SimParams params;
  std::vector<SweepPoint> points;
};

/// One point per (gate, detector, scenario, tau_g). Bit patterns come from
/// spec.seed and are shared by every repeat; repeat r uses run_rng(seed, r).
RunReport sweep_delay(const SimParams& p, const SweepSpec& spec);
/// As sweep_delay, varying m_B for the AND gate and m_C for the ON switch.
RunReport sweep_concentration(const SimParams& p, const SweepSpec& spec);

struct SaturationSeries {
  Gate gate = Gate::And;
  Detector detector = Detector::Standard;
  std::vector<double> additions;  // mol/L per reading
  std::vector<double> pH;         // after each reading
};

/// pH after successive readings when each reading releases the detector
/// threshold concentration. The train has one all-ones pulse per reading; the
/// standard detector adds its fixed threshold every time, the blind detector
/// adds its threshold as it evolves.
std::vector<SaturationSeries> run_saturation(const SimParams& p, const std::vector<Gate>& gates,
                                             int n_readings);

// CSV writers. Number formatting is "%.17g" so output is exactly reproducible.
std::string runs_csv(const RunReport& report);
std::string summary_csv(const RunReport& report);
std::string saturation_csv(const std::vector<SaturationSeries>& series);
std::string samples_csv(const PipelineTrace& trace, const SimParams& p);
std::string report_csv(const PipelineTrace& trace, const ScenarioFlags& flags);

/// Effective parameters plus a short description of the run.
std::string manifest(const SimParams& p, const std::string& description);

std::string format_number(double v);

}  // namespace bmcoc
