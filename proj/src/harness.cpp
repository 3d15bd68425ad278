#include "bmcoc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bmcoc/channel.hpp"
#include "bmcoc/electrochem.hpp"
#include "bmcoc/error.hpp"

namespace bmcoc {

namespace {

void summarize(SweepPoint& pt) {
  // Welford: identical runs give exactly their value and a zero spread
  double mean = 0.0, m2 = 0.0;
  std::size_t k = 0;
  for (double v : pt.rlc_runs) {
    ++k;
    const double d = v - mean;
    mean += d / static_cast<double>(k);
    m2 += d * (v - mean);
  }
  pt.rlc_mean = mean;
  pt.rlc_std = k > 1 ? std::sqrt(m2 / static_cast<double>(k - 1)) : 0.0;
}

template <class Apply>
RunReport run_sweep(const SimParams& base, const SweepSpec& spec, const char* x_name, Apply&& apply) {
  spec.validate();
  base.validate();
  RunReport report{spec, base, {}};
  const auto patterns = default_patterns(spec.seed, base.n_pulses);
  for (Gate gate : spec.gates) {
    for (Detector det : spec.detectors) {
      for (const auto& sc : spec.scenarios) {
        const ScenarioFlags flags{sc.production_noise, sc.production_delay, det, gate};
        for (double x : spec.values) {
          SimParams p = base;
          apply(p, gate, x);
          p.validate();
          SweepPoint pt{gate, det, flags, x_name, x, {}, 0.0, 0.0};
          pt.rlc_runs.reserve(static_cast<std::size_t>(spec.repeats));
          for (int r = 0; r < spec.repeats; ++r) {
            pt.rlc_runs.push_back(run_scenario(p, flags, patterns, static_cast<std::uint64_t>(r)).rlc);
          }
          summarize(pt);
          report.points.push_back(std::move(pt));
        }
      }
    }
  }
  return report;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::mt19937_64 run_rng(std::uint64_t master_seed, std::uint64_t run_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(run_index), static_cast<std::uint32_t>(run_index >> 32)};
  return std::mt19937_64(seq);
}

PipelineTrace run_pipeline(const SimParams& p, const ScenarioFlags& flags,
                           const InputPatterns& patterns, std::uint64_t run_index) {
  PipelineTrace t;
  if (flags.gate == Gate::And) {
    t.inputs.push_back(input_concentration(patterns.a, p.m_A, p));
    t.inputs.push_back(input_concentration(patterns.b, p.m_B, p));
  } else {
    t.inputs.push_back(input_concentration(patterns.c, p.m_C, p));
  }

  auto rng = run_rng(p.seed, run_index);
  t.gate = integrate_gate(t.inputs, flags, p, rng);
  t.signal = received(propagate(t.gate, p), p);
  for (double v : t.signal.y_f) {
    if (!std::isfinite(v)) throw NumericError("received signal is not finite");
  }

  t.logical = logical_pulses(patterns, flags.gate, p);
  const auto thresholds = flags.detector == Detector::Standard
                              ? standard_thresholds(t.signal.y_f, t.logical, p.samples_per_pulse)
                              : blind_thresholds(t.signal.y_f, p.samples_per_pulse, p.L_p);
  const auto bits = digitize(t.signal.y_f, thresholds, p.samples_per_pulse);
  t.report = rlc(bits, expected_bits(t.logical, p, flags.production_delay));
  t.report.detector = flags.detector;
  t.report.thresholds = thresholds;
  return t;
}

DetectionReport run_scenario(const SimParams& p, const ScenarioFlags& flags,
                             const InputPatterns& patterns, std::uint64_t run_index) {
  return run_pipeline(p, flags, patterns, run_index).report;
}

void SweepSpec::validate() const {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("sweep values must be positive");
  }
  if (repeats < 1) throw ConfigError("repeats must be >= 1");
  if (gates.empty() || detectors.empty() || scenarios.empty()) {
    throw ConfigError("sweep needs at least one gate, detector and scenario");
  }
}

std::vector<double> default_delay_values() { return {100.0, 200.0, 300.0, 400.0, 500.0, 600.0}; }

std::vector<double> default_concentration_values() {
  std::vector<double> v;
  for (int i = 0; i <= 16; ++i) v.push_back((1.0 + 0.125 * i) * 1e-3);
  return v;
}

RunReport sweep_delay(const SimParams& p, const SweepSpec& spec) {
  return run_sweep(p, spec, "tau_g", [](SimParams& q, Gate, double x) { q.tau_g = x; });
}

RunReport sweep_concentration(const SimParams& p, const SweepSpec& spec) {
  return run_sweep(p, spec, "m_input", [](SimParams& q, Gate g, double x) {
    if (g == Gate::And) {
      q.m_B = x;
    } else {
      q.m_C = x;
    }
  });
}

std::vector<SaturationSeries> run_saturation(const SimParams& base, const std::vector<Gate>& gates,
                                             int n_readings) {
  if (n_readings < 1) throw ConfigError("n_readings must be >= 1");
  base.validate();
  SimParams p = base;
  p.n_pulses = std::max(base.n_pulses, n_readings);
  p.j_tot = p.samples_per_pulse * p.n_pulses;
  p.t_total = p.t_p * p.n_pulses;

  const auto ones = make_bit_pattern({PatternKind::AllOnes, 0}, p.n_pulses);
  InputPatterns patterns{ones, ones, ones};
  patterns.b.line = Line::B;
  patterns.c.line = Line::C;

  std::vector<SaturationSeries> out;
  for (Gate gate : gates) {
    for (Detector det : {Detector::Standard, Detector::Blind}) {
      const auto report = run_scenario(p, ScenarioFlags{false, false, det, gate}, patterns);
      SaturationSeries s{gate, det, {}, {}};
      s.additions.assign(report.thresholds.begin(), report.thresholds.begin() + n_readings);
      s.pH = saturation_curve(s.additions, p.base_pH);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::string runs_csv(const RunReport& report) {
  std::string out = "gate,detector,scenario,x_name,x_value,run_index,rlc\n";
  for (const auto& pt : report.points) {
    for (std::size_t r = 0; r < pt.rlc_runs.size(); ++r) {
      out += std::string(to_string(pt.gate)) + ',' + std::string(to_string(pt.detector)) + ',' +
             pt.flags.label() + ',' + pt.x_name + ',' + format_number(pt.x_value) + ',' +
             std::to_string(r) + ',' + format_number(pt.rlc_runs[r]) + '\n';
    }
  }
  return out;
}

std::string summary_csv(const RunReport& report) {
  std::string out = "gate,detector,scenario,x_name,x_value,rlc_mean,rlc_std\n";
  for (const auto& pt : report.points) {
    out += std::string(to_string(pt.gate)) + ',' + std::string(to_string(pt.detector)) + ',' +
           pt.flags.label() + ',' + pt.x_name + ',' + format_number(pt.x_value) + ',' +
           format_number(pt.rlc_mean) + ',' + format_number(pt.rlc_std) + '\n';
  }
  return out;
}

std::string saturation_csv(const std::vector<SaturationSeries>& series) {
  std::string out = "detector,reading,pH\n";
  for (const auto& s : series) {
    for (std::size_t k = 0; k < s.pH.size(); ++k) {
      out += std::string(to_string(s.detector)) + ',' + std::to_string(k + 1) + ',' +
             format_number(s.pH[k]) + '\n';
    }
  }
  return out;
}

std::string samples_csv(const PipelineTrace& t, const SimParams& p) {
  std::string out = "j,t,gate_output,y_g,n_g,y_f,threshold,bit,expected\n";
  const double dt = p.dt();
  const auto spp = static_cast<std::size_t>(p.samples_per_pulse);
  for (std::size_t j = 0; j < t.signal.y_f.size(); ++j) {
    out += std::to_string(j) + ',' + format_number(static_cast<double>(j) * dt) + ',' +
           format_number(t.gate.samples[j]) + ',' + format_number(t.signal.y_g[j]) + ',' +
           format_number(t.signal.n_g[j]) + ',' + format_number(t.signal.y_f[j]) + ',' +
           format_number(t.report.thresholds[j / spp]) + ',' + std::to_string(t.report.bits[j]) + ',' +
           std::to_string(t.report.expected[j]) + '\n';
  }
  return out;
}

std::string report_csv(const PipelineTrace& t, const ScenarioFlags& flags) {
  const auto& r = t.report;
  return "gate,detector,scenario,tp,tn,fp,fn,rlc\n" + std::string(to_string(flags.gate)) + ',' +
         std::string(to_string(flags.detector)) + ',' + flags.label() + ',' + std::to_string(r.tp) +
         ',' + std::to_string(r.tn) + ',' + std::to_string(r.fp) + ',' + std::to_string(r.fn) + ',' +
         format_number(r.rlc) + '\n';
}

std::string manifest(const SimParams& p, const std::string& description) {
  std::string out = "# bmcoc run manifest\n";
  std::size_t start = 0;
  while (start < description.size()) {
    const auto nl = description.find('\n', start);
    out += "# " + description.substr(start, nl - start) + '\n';
    if (nl == std::string::npos) break;
    start = nl + 1;
  }
  out += serialize(p);
  return out;
}

}  // namespace bmcoc
