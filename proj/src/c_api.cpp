#include "bmcoc/bmcoc.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "bmcoc/electrochem.hpp"
#include "bmcoc/error.hpp"
#include "bmcoc/harness.hpp"

namespace {

thread_local std::string g_last_error;

template <typename T, uint32_t MAGIC>
struct Handle {
  uint32_t magic = MAGIC;
  T obj;

  explicit Handle(T v) : obj(std::move(v)) {}
  ~Handle() { magic = 0; }
  bool valid() const { return magic == MAGIC; }
};

struct RunData {
  bmcoc::SimParams params;
  bmcoc::ScenarioFlags flags;
  bmcoc::PipelineTrace trace;
};

}  // namespace

struct bmcoc_params_struct : Handle<bmcoc::SimParams, 0x504D4342> {
  using Handle::Handle;
};
struct bmcoc_run_struct : Handle<RunData, 0x524D4342> {
  using Handle::Handle;
};
struct bmcoc_sweep_struct : Handle<bmcoc::RunReport, 0x534D4342> {
  using Handle::Handle;
};

namespace {

struct NullHandle : std::invalid_argument {
  NullHandle() : std::invalid_argument("null handle") {}
};

int fail(int code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename F>
int guard(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const bmcoc::ConfigError& e) {
    return fail(BMCOC_ERROR_CONFIG, e.what());
  } catch (const bmcoc::NumericError& e) {
    return fail(BMCOC_ERROR_NUMERIC, e.what());
  } catch (const NullHandle& e) {
    return fail(BMCOC_ERROR_NULL_POINTER, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(BMCOC_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BMCOC_ERROR_UNKNOWN, "out of memory");
  } catch (const std::exception& e) {
    return fail(BMCOC_ERROR_UNKNOWN, e.what());
  } catch (...) {
    return fail(BMCOC_ERROR_UNKNOWN, "unknown exception");
  }
}

template <typename H>
auto* checked(H h) {
  if (h == nullptr) throw NullHandle();
  if (!h->valid()) throw std::invalid_argument("invalid handle");
  return &h->obj;
}

int write_string(const std::string& s, char* buf, size_t* len) {
  if (len == nullptr) return fail(BMCOC_ERROR_NULL_POINTER, "null length pointer");
  const size_t need = s.size() + 1;
  const size_t have = *len;
  *len = need;
  if (buf == nullptr || have < need) return fail(BMCOC_ERROR_INSUFFICIENT_BUFFER, "buffer too small");
  std::memcpy(buf, s.c_str(), need);
  return BMCOC_OK;
}

bmcoc::Gate to_gate(int g) {
  if (g == BMCOC_GATE_AND) return bmcoc::Gate::And;
  if (g == BMCOC_GATE_ON) return bmcoc::Gate::On;
  throw std::invalid_argument("unknown gate");
}

bmcoc::Detector to_detector(int d) {
  if (d == BMCOC_DETECTOR_STANDARD) return bmcoc::Detector::Standard;
  if (d == BMCOC_DETECTOR_BLIND) return bmcoc::Detector::Blind;
  throw std::invalid_argument("unknown detector");
}

bmcoc::SweepSpec make_spec(bmcoc::SweepKind kind, unsigned gates, unsigned detectors,
                           unsigned scenarios, const double* values, size_t n_values, int repeats,
                           uint64_t seed) {
  bmcoc::SweepSpec spec;
  spec.kind = kind;
  spec.gates.clear();
  if (gates & BMCOC_GATES_AND) spec.gates.push_back(bmcoc::Gate::And);
  if (gates & BMCOC_GATES_ON) spec.gates.push_back(bmcoc::Gate::On);
  spec.detectors.clear();
  if (detectors & BMCOC_DETECTORS_STANDARD) spec.detectors.push_back(bmcoc::Detector::Standard);
  if (detectors & BMCOC_DETECTORS_BLIND) spec.detectors.push_back(bmcoc::Detector::Blind);
  spec.scenarios.clear();
  for (unsigned bit = 0; bit < 4; ++bit) {
    if (scenarios & (1u << bit)) spec.scenarios.push_back({(bit & 2u) != 0, (bit & 1u) != 0});
  }
  if (values != nullptr) {
    spec.values.assign(values, values + n_values);
  } else if (kind == bmcoc::SweepKind::Delay) {
    spec.values = bmcoc::default_delay_values();
  } else {
    spec.values = bmcoc::default_concentration_values();
  }
  spec.repeats = repeats;
  spec.seed = seed;
  spec.validate();
  return spec;
}

template <typename Sweep>
int sweep(bmcoc_params_t params, Sweep&& run, bmcoc::SweepKind kind, unsigned gates,
          unsigned detectors, unsigned scenarios, const double* values, size_t n_values,
          int repeats, uint64_t seed, bmcoc_sweep_t* out) {
  if (out == nullptr) return fail(BMCOC_ERROR_NULL_POINTER, "null output pointer");
  return guard([&]() -> int {
    const auto* p = checked(params);
    auto spec = make_spec(kind, gates, detectors, scenarios, values, n_values, repeats, seed);
    *out = new bmcoc_sweep_struct(run(*p, spec));
    return BMCOC_OK;
  });
}

int new_params(bmcoc_params_t* out, bmcoc::SimParams p) {
  p.validate();
  *out = new bmcoc_params_struct(std::move(p));
  return BMCOC_OK;
}

}  // namespace

extern "C" {

const char* bmcoc_error_description(int err) {
  switch (err) {
    case BMCOC_OK: return "OK";
    case BMCOC_ERROR_CONFIG: return "Invalid configuration";
    case BMCOC_ERROR_NUMERIC: return "Numeric failure";
    case BMCOC_ERROR_NULL_POINTER: return "Null pointer argument";
    case BMCOC_ERROR_INVALID_ARGUMENT: return "Invalid argument";
    case BMCOC_ERROR_INSUFFICIENT_BUFFER: return "Insufficient buffer space";
    case BMCOC_ERROR_IO: return "I/O error";
    case BMCOC_ERROR_UNKNOWN: return "Unknown error";
  }
  return "Unrecognized error code";
}

const char* bmcoc_last_error(void) { return g_last_error.c_str(); }

int bmcoc_params_default(bmcoc_params_t* out) {
  if (out == nullptr) return fail(BMCOC_ERROR_NULL_POINTER, "null output pointer");
  return guard([&]() -> int { return new_params(out, bmcoc::SimParams{}); });
}

int bmcoc_params_load_text(bmcoc_params_t* out, const char* text) {
  if (out == nullptr || text == nullptr) return fail(BMCOC_ERROR_NULL_POINTER, "null argument");
  return guard([&]() -> int { return new_params(out, bmcoc::load_params(text)); });
}

int bmcoc_params_load_file(bmcoc_params_t* out, const char* path) {
  if (out == nullptr || path == nullptr) return fail(BMCOC_ERROR_NULL_POINTER, "null argument");
  return guard([&]() -> int { return new_params(out, bmcoc::load_params_file(path)); });
}

int bmcoc_params_destroy(bmcoc_params_t params) {
  return guard([&]() -> int {
    if (params == nullptr) return BMCOC_OK;
    checked(params);
    delete params;
    return BMCOC_OK;
  });
}

int bmcoc_params_get(bmcoc_params_t params, const char* key, double* value) {
  if (key == nullptr || value == nullptr) return fail(BMCOC_ERROR_NULL_POINTER, "null argument");
  return guard([&]() -> int {
    *value = bmcoc::get_param(*checked(params), key);
    return BMCOC_OK;
  });
}

int bmcoc_params_set(bmcoc_params_t params, const char* key, double value) {
  if (key == nullptr) return fail(BMCOC_ERROR_NULL_POINTER, "null key");
  return guard([&]() -> int {
    auto* p = checked(params);
    bmcoc::SimParams next = *p;
    bmcoc::set_param(next, key, value);
    const std::string k = key;
    if (k == "n_pulses" || k == "samples_per_pulse" || k == "t_p") {
      next.j_tot = next.samples_per_pulse * next.n_pulses;
      next.t_total = next.t_p * next.n_pulses;
    }
    next.validate();
    *p = next;
    return BMCOC_OK;
  });
}

int bmcoc_params_serialize(bmcoc_params_t params, char* buf, size_t* len) {
  return guard([&]() -> int { return write_string(bmcoc::serialize(*checked(params)), buf, len); });
}

int bmcoc_simulate(bmcoc_params_t params, int gate, int detector, int production_noise,
                   int production_delay, uint64_t run_index, bmcoc_run_t* out) {
  if (out == nullptr) return fail(BMCOC_ERROR_NULL_POINTER, "null output pointer");
  return guard([&]() -> int {
    const auto& p = *checked(params);
    const bmcoc::ScenarioFlags flags{production_noise != 0, production_delay != 0,
                                     to_detector(detector), to_gate(gate)};
    const auto patterns = bmcoc::default_patterns(p.seed, p.n_pulses);
    *out = new bmcoc_run_struct(RunData{p, flags, bmcoc::run_pipeline(p, flags, patterns, run_index)});
    return BMCOC_OK;
  });
}

int bmcoc_run_destroy(bmcoc_run_t run) {
  return guard([&]() -> int {
    if (run == nullptr) return BMCOC_OK;
    checked(run);
    delete run;
    return BMCOC_OK;
  });
}

int bmcoc_run_rlc(bmcoc_run_t run, double* rlc) {
  if (rlc == nullptr) return fail(BMCOC_ERROR_NULL_POINTER, "null output pointer");
  return guard([&]() -> int {
    *rlc = checked(run)->trace.report.rlc;
    return BMCOC_OK;
  });
}

int bmcoc_run_counts(bmcoc_run_t run, uint64_t counts[4]) {
  if (counts == nullptr) return fail(BMCOC_ERROR_NULL_POINTER, "null output pointer");
  return guard([&]() -> int {
    const auto& r = checked(run)->trace.report;
    counts[0] = static_cast<uint64_t>(r.tp);
    counts[1] = static_cast<uint64_t>(r.tn);
    counts[2] = static_cast<uint64_t>(r.fp);
    counts[3] = static_cast<uint64_t>(r.fn);
    return BMCOC_OK;
  });
}

int bmcoc_run_threshold(bmcoc_run_t run, size_t pulse, double* threshold) {
  if (threshold == nullptr) return fail(BMCOC_ERROR_NULL_POINTER, "null output pointer");
  return guard([&]() -> int {
    const auto& t = checked(run)->trace.report.thresholds;
    if (pulse >= t.size()) return fail(BMCOC_ERROR_INVALID_ARGUMENT, "pulse index out of range");
    *threshold = t[pulse];
    return BMCOC_OK;
  });
}

int bmcoc_run_samples_csv(bmcoc_run_t run, char* buf, size_t* len) {
  return guard([&]() -> int {
    const auto* r = checked(run);
    return write_string(bmcoc::samples_csv(r->trace, r->params), buf, len);
  });
}

int bmcoc_run_report_csv(bmcoc_run_t run, char* buf, size_t* len) {
  return guard([&]() -> int {
    const auto* r = checked(run);
    return write_string(bmcoc::report_csv(r->trace, r->flags), buf, len);
  });
}

int bmcoc_sweep_delay(bmcoc_params_t params, unsigned gates, unsigned detectors, unsigned scenarios,
                      const double* values, size_t n_values, int repeats, uint64_t seed,
                      bmcoc_sweep_t* out) {
  return sweep(params, bmcoc::sweep_delay, bmcoc::SweepKind::Delay, gates, detectors, scenarios,
               values, n_values, repeats, seed, out);
}

int bmcoc_sweep_concentration(bmcoc_params_t params, unsigned gates, unsigned detectors,
                              unsigned scenarios, const double* values, size_t n_values,
                              int repeats, uint64_t seed, bmcoc_sweep_t* out) {
  return sweep(params, bmcoc::sweep_concentration, bmcoc::SweepKind::Concentration, gates,
               detectors, scenarios, values, n_values, repeats, seed, out);
}

int bmcoc_sweep_destroy(bmcoc_sweep_t s) {
  return guard([&]() -> int {
    if (s == nullptr) return BMCOC_OK;
    checked(s);
    delete s;
    return BMCOC_OK;
  });
}

int bmcoc_sweep_points(bmcoc_sweep_t s, size_t* n_points) {
  if (n_points == nullptr) return fail(BMCOC_ERROR_NULL_POINTER, "null output pointer");
  return guard([&]() -> int {
    *n_points = checked(s)->points.size();
    return BMCOC_OK;
  });
}

int bmcoc_sweep_point(bmcoc_sweep_t s, size_t index, int* gate, int* detector, double* x_value,
                      double* rlc_mean, double* rlc_std) {
  return guard([&]() -> int {
    const auto& pts = checked(s)->points;
    if (index >= pts.size()) return fail(BMCOC_ERROR_INVALID_ARGUMENT, "point index out of range");
    const auto& pt = pts[index];
    if (gate) *gate = pt.gate == bmcoc::Gate::And ? BMCOC_GATE_AND : BMCOC_GATE_ON;
    if (detector) {
      *detector = pt.detector == bmcoc::Detector::Standard ? BMCOC_DETECTOR_STANDARD
                                                           : BMCOC_DETECTOR_BLIND;
    }
    if (x_value) *x_value = pt.x_value;
    if (rlc_mean) *rlc_mean = pt.rlc_mean;
    if (rlc_std) *rlc_std = pt.rlc_std;
    return BMCOC_OK;
  });
}

int bmcoc_sweep_runs_csv(bmcoc_sweep_t s, char* buf, size_t* len) {
  return guard([&]() -> int { return write_string(bmcoc::runs_csv(*checked(s)), buf, len); });
}

int bmcoc_sweep_summary_csv(bmcoc_sweep_t s, char* buf, size_t* len) {
  return guard([&]() -> int { return write_string(bmcoc::summary_csv(*checked(s)), buf, len); });
}

int bmcoc_saturation_csv(bmcoc_params_t params, int gate, int n_readings, char* buf, size_t* len) {
  return guard([&]() -> int {
    const auto series = bmcoc::run_saturation(*checked(params), {to_gate(gate)}, n_readings);
    return write_string(bmcoc::saturation_csv(series), buf, len);
  });
}

int bmcoc_manifest(bmcoc_params_t params, const char* description, char* buf, size_t* len) {
  return guard([&]() -> int {
    return write_string(bmcoc::manifest(*checked(params), description ? description : ""), buf, len);
  });
}

int bmcoc_ph_after_addition(double base_pH, double added, double* pH) {
  if (pH == nullptr) return fail(BMCOC_ERROR_NULL_POINTER, "null output pointer");
  return guard([&]() -> int {
    *pH = bmcoc::ph_after_addition(base_pH, added);
    return BMCOC_OK;
  });
}

int bmcoc_current_from_ph(bmcoc_params_t params, double pH, double* current_nA) {
  if (current_nA == nullptr) return fail(BMCOC_ERROR_NULL_POINTER, "null output pointer");
  return guard([&]() -> int {
    *current_nA = bmcoc::current_from_ph(pH, bmcoc::ph_fit(*checked(params)));
    return BMCOC_OK;
  });
}

int bmcoc_chamber_volumes(double r_ch, double h_ch1, double d_ch2, double h_ch2, double w_ch2,
                          double* population, double* diffusion) {
  if (population == nullptr || diffusion == nullptr) {
    return fail(BMCOC_ERROR_NULL_POINTER, "null output pointer");
  }
  return guard([&]() -> int {
    const auto v = bmcoc::chamber_volumes(r_ch, h_ch1, d_ch2, h_ch2, w_ch2);
    *population = v.population;
    *diffusion = v.diffusion;
    return BMCOC_OK;
  });
}

int bmcoc_convert_concentration(double value, const char* from_unit, const char* to_unit,
                                double* out) {
  if (from_unit == nullptr || to_unit == nullptr || out == nullptr) {
    return fail(BMCOC_ERROR_NULL_POINTER, "null argument");
  }
  return guard([&]() -> int {
    *out = bmcoc::convert_concentration(value, from_unit, to_unit);
    return BMCOC_OK;
  });
}

}  // extern "C"
