#include "bmcoc/units.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <variant>

#include "bmcoc/error.hpp"

namespace bmcoc {

namespace {

using Field = std::variant<double SimParams::*, int SimParams::*, std::uint64_t SimParams::*>;

struct FieldEntry {
  std::string_view key;
  Field field;
};

// Serialization order. Keys are the SimParams member names.
const FieldEntry kFields[] = {
    {"K_A", &SimParams::K_A},
    {"K_B", &SimParams::K_B},
    {"K_C", &SimParams::K_C},
    {"n", &SimParams::n},
    {"gamma", &SimParams::gamma},
    {"D", &SimParams::D},
    {"z1", &SimParams::z1},
    {"z2", &SimParams::z2},
    {"m_A", &SimParams::m_A},
    {"m_B", &SimParams::m_B},
    {"m_C", &SimParams::m_C},
    {"t_c", &SimParams::t_c},
    {"t_total", &SimParams::t_total},
    {"t_p", &SimParams::t_p},
    {"tau_in", &SimParams::tau_in},
    {"tau_g", &SimParams::tau_g},
    {"Gamma_s", &SimParams::Gamma_s},
    {"T_abs", &SimParams::T_abs},
    {"a_e", &SimParams::a_e},
    {"k_B", &SimParams::k_B},
    {"sigma_AND", &SimParams::sigma_AND},
    {"sigma_ON", &SimParams::sigma_ON},
    {"samples_per_pulse", &SimParams::samples_per_pulse},
    {"n_pulses", &SimParams::n_pulses},
    {"j_tot", &SimParams::j_tot},
    {"r_ch", &SimParams::r_ch},
    {"h_ch1", &SimParams::h_ch1},
    {"L_p", &SimParams::L_p},
    {"seed", &SimParams::seed},
    {"hill_input_scale", &SimParams::hill_input_scale},
    {"output_scale", &SimParams::output_scale},
    {"y_floor", &SimParams::y_floor},
    {"rk4_substeps", &SimParams::rk4_substeps},
    {"ph_slope", &SimParams::ph_slope},
    {"ph_intercept", &SimParams::ph_intercept},
    {"o2_slope", &SimParams::o2_slope},
    {"o2_intercept", &SimParams::o2_intercept},
    {"base_pH", &SimParams::base_pH},
};

const FieldEntry* find_field(std::string_view key) {
  for (const auto& e : kFields) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::string_view key, int line_no) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError("line " + std::to_string(line_no) + ": invalid value '" +
                      std::string(text) + "' for key '" + std::string(key) + "'");
  }
  return v;
}

void assign(SimParams& p, const Field& f, double value, std::string_view key) {
  std::visit(
      [&](auto member) {
        using T = std::remove_reference_t<decltype(p.*member)>;
        if constexpr (std::is_same_v<T, double>) {
          p.*member = value;
        } else {
          if (value != std::floor(value) || value < 0.0) {
            throw ConfigError("key '" + std::string(key) + "' expects a non-negative integer");
          }
          p.*member = static_cast<T>(value);
        }
      },
      f);
}

double read(const SimParams& p, const Field& f) {
  return std::visit([&](auto member) { return static_cast<double>(p.*member); }, f);
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string("parameter ") + name + " must be strictly positive");
  }
}

// Decimal exponent of the unit relative to mol/L.
int unit_exponent(std::string_view unit) {
  if (unit == "mol/L") return 0;
  if (unit == "mmol/L") return -3;
  if (unit == "umol/L" || unit == "\xC2\xB5mol/L") return -6;
  if (unit == "nmol/L") return -9;
  if (unit == "mol/m3" || unit == "mol/m^3") return -3;
  throw InvalidArgument("unknown concentration unit '" + std::string(unit) + "'");
}

}  // namespace

std::string ScenarioFlags::label() const {
  std::string s = production_noise ? "YPN" : "NPN";
  s += production_delay ? "-YPD" : "-NPD";
  return s;
}

std::string_view to_string(Gate g) { return g == Gate::And ? "AND" : "ON"; }
std::string_view to_string(Detector d) { return d == Detector::Standard ? "standard" : "blind"; }
std::string_view to_string(Line l) {
  switch (l) {
    case Line::A: return "A";
    case Line::B: return "B";
    case Line::C: return "C";
  }
  return "?";
}

int SimParams::samples_for(double seconds) const {
  return static_cast<int>(std::lround(seconds / dt()));
}

void SimParams::validate() const {
  require_positive(K_A, "K_A");
  require_positive(K_B, "K_B");
  require_positive(K_C, "K_C");
  require_positive(n, "n");
  require_positive(gamma, "gamma");
  require_positive(D, "D");
  require_positive(z1, "z1");
  require_positive(z2, "z2");
  require_positive(m_A, "m_A");
  require_positive(m_B, "m_B");
  require_positive(m_C, "m_C");
  require_positive(t_c, "t_c");
  require_positive(t_total, "t_total");
  require_positive(t_p, "t_p");
  require_positive(tau_in, "tau_in");
  require_positive(tau_g, "tau_g");
  require_positive(Gamma_s, "Gamma_s");
  require_positive(T_abs, "T_abs");
  require_positive(a_e, "a_e");
  require_positive(k_B, "k_B");
  require_positive(sigma_AND, "sigma_AND");
  require_positive(sigma_ON, "sigma_ON");
  require_positive(samples_per_pulse, "samples_per_pulse");
  require_positive(n_pulses, "n_pulses");
  require_positive(r_ch, "r_ch");
  require_positive(h_ch1, "h_ch1");
  require_positive(hill_input_scale, "hill_input_scale");
  require_positive(output_scale, "output_scale");
  require_positive(y_floor, "y_floor");
  require_positive(rk4_substeps, "rk4_substeps");
  if (L_p < 1.0) throw ConfigError("parameter L_p must be >= 1");
  if (!(base_pH > 0.0 && base_pH < 14.0)) throw ConfigError("parameter base_pH must lie in (0, 14)");
  if (!std::isfinite(ph_slope) || !std::isfinite(ph_intercept) || !std::isfinite(o2_slope) ||
      !std::isfinite(o2_intercept)) {
    throw ConfigError("calibration coefficients must be finite");
  }
  if (j_tot != samples_per_pulse * n_pulses) {
    throw ConfigError("inconsistent j_tot: expected samples_per_pulse * n_pulses = " +
                      std::to_string(samples_per_pulse * n_pulses) + ", got " +
                      std::to_string(j_tot));
  }
  if (std::abs(t_total - t_p * n_pulses) > 1e-9 * t_total) {
    throw ConfigError("inconsistent t_total: expected t_p * n_pulses");
  }
}

SimParams load_params(std::string_view text) {
  SimParams p;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto* entry = find_field(key);
    if (!entry) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" +
                        std::string(key) + "'");
    }
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" +
                        std::string(key) + "'");
    }
    if (std::holds_alternative<std::uint64_t SimParams::*>(entry->field)) {
      std::uint64_t v = 0;
      const auto* end = value.data() + value.size();
      auto [ptr, ec] = std::from_chars(value.data(), end, v);
      if (ec != std::errc() || ptr != end) {
        throw ConfigError("line " + std::to_string(line_no) + ": invalid integer '" +
                          std::string(value) + "' for key '" + std::string(key) + "'");
      }
      p.*std::get<std::uint64_t SimParams::*>(entry->field) = v;
    } else {
      assign(p, entry->field, parse_number(value, key, line_no), key);
    }
  }

  if (!seen.contains("j_tot")) p.j_tot = p.samples_per_pulse * p.n_pulses;
  if (!seen.contains("t_total")) p.t_total = p.t_p * p.n_pulses;
  p.validate();
  return p;
}

SimParams load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_params(ss.str());
}

std::string serialize(const SimParams& p) {
  std::string out;
  char buf[64];
  for (const auto& e : kFields) {
    const bool integral = !std::holds_alternative<double SimParams::*>(e.field);
    if (integral) {
      std::visit(
          [&](auto member) {
            using T = std::remove_reference_t<decltype(p.*member)>;
            if constexpr (!std::is_same_v<T, double>) {
              std::snprintf(buf, sizeof buf, "%llu",
                            static_cast<unsigned long long>(p.*member));
            }
          },
          e.field);
    } else {
      std::snprintf(buf, sizeof buf, "%.17g", read(p, e.field));
    }
    out.append(e.key).append(" = ").append(buf).push_back('\n');
  }
  return out;
}

double get_param(const SimParams& p, std::string_view key) {
  const auto* e = find_field(key);
  if (!e) throw ConfigError("unknown key '" + std::string(key) + "'");
  return read(p, e->field);
}

void set_param(SimParams& p, std::string_view key, double value) {
  const auto* e = find_field(key);
  if (!e) throw ConfigError("unknown key '" + std::string(key) + "'");
  assign(p, e->field, value, key);
}

ChamberVolumes chamber_volumes(double r_ch, double h_ch1, double d_ch2, double h_ch2,
                               double w_ch2) {
  if (!(r_ch > 0 && h_ch1 > 0 && d_ch2 > 0 && h_ch2 > 0 && w_ch2 > 0)) {
    throw InvalidArgument("chamber dimensions must be strictly positive");
  }
  return {std::numbers::pi * r_ch * r_ch * h_ch1, d_ch2 * h_ch2 * w_ch2};
}

double convert_concentration(double value, std::string_view from_unit,
                             std::string_view to_unit) {
  const int shift = unit_exponent(from_unit) - unit_exponent(to_unit);
  // Powers of ten up to 1e22 are exact doubles, so this is a single rounding.
  const double scale = std::pow(10.0, std::abs(shift));
  return shift >= 0 ? value * scale : value / scale;
}

}  // namespace bmcoc
