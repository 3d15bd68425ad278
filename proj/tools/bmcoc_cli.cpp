// Batch front end over the C interface.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "bmcoc/bmcoc.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;

struct CliError {
  int code;
  std::string message;
};

void check(int rc, const std::string& what) {
  if (rc == BMCOC_OK) return;
  std::string msg = what + ": " + bmcoc_error_description(rc);
  if (*bmcoc_last_error() != '\0') msg += std::string(" (") + bmcoc_last_error() + ")";
  throw CliError{rc == BMCOC_ERROR_NUMERIC ? kExitNumeric : kExitConfig, msg};
}

template <typename F>
std::string fetch(F&& f, const std::string& what) {
  size_t len = 0;
  int rc = f(nullptr, &len);
  if (rc != BMCOC_ERROR_INSUFFICIENT_BUFFER) check(rc, what);
  std::string out(len, '\0');
  check(f(out.data(), &len), what);
  out.resize(len - 1);
  return out;
}

struct Options {
  std::string config;
  std::string gate = "both";
  std::string detector = "standard";
  std::string noise = "off";
  std::string delay = "off";
  int repeats = 10;
  std::uint64_t seed = 42;
  bool seed_given = false;
  std::string out = "out";
  std::vector<double> values;
  int readings = 25;
};

std::vector<int> gates_of(const std::string& g) {
  if (g == "and") return {BMCOC_GATE_AND};
  if (g == "on") return {BMCOC_GATE_ON};
  return {BMCOC_GATE_AND, BMCOC_GATE_ON};
}

std::vector<int> detectors_of(const std::string& d) {
  if (d == "standard") return {BMCOC_DETECTOR_STANDARD};
  if (d == "blind") return {BMCOC_DETECTOR_BLIND};
  return {BMCOC_DETECTOR_STANDARD, BMCOC_DETECTOR_BLIND};
}

unsigned mask_of(const std::vector<int>& v) {
  unsigned m = 0;
  for (int x : v) m |= 1u << x;
  return m;
}

const char* gate_name(int g) { return g == BMCOC_GATE_AND ? "AND" : "ON"; }
const char* detector_name(int d) { return d == BMCOC_DETECTOR_STANDARD ? "standard" : "blind"; }

class Session {
 public:
  explicit Session(const Options& o) : opt_(o) {
    if (o.config.empty()) {
      check(bmcoc_params_default(&params_), "default parameters");
    } else {
      check(bmcoc_params_load_file(&params_, o.config.c_str()), "loading " + o.config);
    }
    if (o.seed_given) {
      if (o.seed > (std::uint64_t{1} << 53)) throw CliError{kExitConfig, "--seed must be <= 2^53"};
      check(bmcoc_params_set(params_, "seed", static_cast<double>(o.seed)), "setting seed");
    }
    double s = 0.0;
    check(bmcoc_params_get(params_, "seed", &s), "reading seed");
    seed_ = static_cast<std::uint64_t>(s);

    std::error_code ec;
    fs::create_directories(o.out, ec);
    if (ec) throw CliError{kExitConfig, "cannot create " + o.out + ": " + ec.message()};
  }
  ~Session() { bmcoc_params_destroy(params_); }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  bmcoc_params_t params() const { return params_; }
  std::uint64_t seed() const { return seed_; }
  const Options& opt() const { return opt_; }

  void write(const std::string& name, const std::string& content) {
    const auto path = fs::path(opt_.out) / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    f.close();
    if (!f) throw CliError{kExitConfig, "cannot write " + path.string()};
    written_.push_back(name);
  }

  void finish(const std::string& command) {
    std::string desc = "command: " + command + "\n";
    desc += "gate: " + opt_.gate + "\ndetector: " + opt_.detector + "\n";
    desc += "production_noise: " + opt_.noise + "\nproduction_delay: " + opt_.delay + "\n";
    desc += "repeats: " + std::to_string(opt_.repeats) + "\n";
    for (const auto& w : written_) desc += "output: " + w + "\n";
    const auto text = fetch(
        [&](char* b, size_t* l) { return bmcoc_manifest(params_, desc.c_str(), b, l); }, "manifest");
    write("manifest.txt", text);
  }

 private:
  Options opt_;
  bmcoc_params_t params_ = nullptr;
  std::uint64_t seed_ = 0;
  std::vector<std::string> written_;
};

unsigned scenario_mask(const Options& o) {
  const unsigned bit = (o.noise == "on" ? 2u : 0u) | (o.delay == "on" ? 1u : 0u);
  return 1u << bit;
}

void cmd_simulate(Session& s) {
  const auto& o = s.opt();
  for (int g : gates_of(o.gate)) {
    for (int d : detectors_of(o.detector)) {
      bmcoc_run_t run = nullptr;
      check(bmcoc_simulate(s.params(), g, d, o.noise == "on", o.delay == "on", 0, &run), "simulate");
      const std::string tag = std::string(gate_name(g)) + "_" + detector_name(d);
      try {
        s.write("samples_" + tag + ".csv",
                fetch([&](char* b, size_t* l) { return bmcoc_run_samples_csv(run, b, l); }, "samples"));
        s.write("report_" + tag + ".csv",
                fetch([&](char* b, size_t* l) { return bmcoc_run_report_csv(run, b, l); }, "report"));
        double rlc = 0.0;
        check(bmcoc_run_rlc(run, &rlc), "rlc");
        std::printf("%s %s rlc=%.4g%%\n", gate_name(g), detector_name(d), rlc);
      } catch (...) {
        bmcoc_run_destroy(run);
        throw;
      }
      bmcoc_run_destroy(run);
    }
  }
  s.finish("simulate");
}

template <typename SweepFn>
void cmd_sweep(Session& s, SweepFn fn, const std::string& prefix, const std::string& command) {
  const auto& o = s.opt();
  bmcoc_sweep_t sw = nullptr;
  check(fn(s.params(), mask_of(gates_of(o.gate)), mask_of(detectors_of(o.detector)), scenario_mask(o),
           o.values.empty() ? nullptr : o.values.data(), o.values.size(), o.repeats, s.seed(), &sw),
        command);
  try {
    s.write(prefix + "_runs.csv",
            fetch([&](char* b, size_t* l) { return bmcoc_sweep_runs_csv(sw, b, l); }, "runs"));
    s.write(prefix + "_summary.csv",
            fetch([&](char* b, size_t* l) { return bmcoc_sweep_summary_csv(sw, b, l); }, "summary"));
  } catch (...) {
    bmcoc_sweep_destroy(sw);
    throw;
  }
  bmcoc_sweep_destroy(sw);
  s.finish(command);
}

void cmd_saturation(Session& s) {
  const auto& o = s.opt();
  for (int g : gates_of(o.gate)) {
    s.write(std::string("saturation_") + gate_name(g) + ".csv",
            fetch([&](char* b, size_t* l) { return bmcoc_saturation_csv(s.params(), g, o.readings, b, l); },
                  "saturation"));
  }
  s.finish("saturation");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bacterial molecular computing on a chip: link-level simulator"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "key = value parameter file")->check(CLI::ExistingFile);
    sub->add_option("--gate", o.gate, "and|on|both")->check(CLI::IsMember({"and", "on", "both"}));
    sub->add_option("--detector", o.detector, "standard|blind|both")
        ->check(CLI::IsMember({"standard", "blind", "both"}));
    sub->add_option("--production-noise", o.noise, "on|off")->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--production-delay", o.delay, "on|off")->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--seed", o.seed, "master seed (overrides the config)")
        ->each([&](const std::string&) { o.seed_given = true; });
    sub->add_option("--out", o.out, "output directory");
  };
  const auto sweeping = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--repeats", o.repeats, "Monte Carlo repeats per point")->check(CLI::PositiveNumber);
    sub->add_option("--values", o.values, "sweep grid (default: built-in)")->delimiter(',');
  };

  auto* sim = app.add_subcommand("simulate", "one run per gate and detector");
  common(sim);
  auto* sd = app.add_subcommand("sweep-delay", "RLC against the gate-to-sensor delay tau_g (s)");
  sweeping(sd);
  auto* sc = app.add_subcommand("sweep-conc", "RLC against m_B (AND) or m_C (ON), mol/L");
  sweeping(sc);
  auto* sat = app.add_subcommand("saturation", "pH after successive readings");
  common(sat);
  sat->add_option("--readings", o.readings, "number of readings")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    Session s(o);
    if (*sim) cmd_simulate(s);
    if (*sd) cmd_sweep(s, bmcoc_sweep_delay, "sweep_delay", "sweep-delay");
    if (*sc) cmd_sweep(s, bmcoc_sweep_concentration, "sweep_conc", "sweep-conc");
    if (*sat) cmd_saturation(s);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return 0;
}
