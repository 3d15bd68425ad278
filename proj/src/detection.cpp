#include "bmcoc/detection.hpp"

#include <algorithm>
#include <limits>

#include "bmcoc/error.hpp"

namespace bmcoc {

namespace {

std::span<const double> pulse_window(std::span<const double> y, std::size_t pulse, int spp) {
  const auto len = static_cast<std::size_t>(spp);
  const auto begin = std::min(pulse * len, y.size());
  return y.subspan(begin, std::min(len, y.size() - begin));
}

double window_max(std::span<const double> w) { return *std::max_element(w.begin(), w.end()); }

}  // namespace

double standard_threshold(std::span<const double> window) {
  if (window.empty()) throw InvalidArgument("standard_threshold: empty window");
  return window_max(window) / 2.0;
}

double blind_initial(std::span<const double> first_pulse, double L_p) {
  if (L_p < 1.0) throw InvalidArgument("blind_initial: L_p must be >= 1");
  if (first_pulse.empty()) throw InvalidArgument("blind_initial: empty window");
  return window_max(first_pulse) / L_p;
}

double blind_update(double r_current, double pulse_max) {
  if (pulse_max < 0.0) throw InvalidArgument("blind_update: pulse maximum must be non-negative");
  if (pulse_max == 0.0) return r_current;
  return (r_current / pulse_max < 0.5) ? 0.5 * pulse_max : r_current;
}

std::vector<double> standard_thresholds(std::span<const double> y_f,
                                        std::span<const std::uint8_t> logical, int samples_per_pulse) {
  const auto first_one = std::find(logical.begin(), logical.end(), std::uint8_t{1});
  double r = std::numeric_limits<double>::infinity();
  if (first_one != logical.end()) {
    const auto k = static_cast<std::size_t>(first_one - logical.begin());
    r = standard_threshold(pulse_window(y_f, k, samples_per_pulse));
  }
  return std::vector<double>(logical.size(), r);
}

std::vector<double> blind_thresholds(std::span<const double> y_f, int samples_per_pulse, double L_p) {
  if (samples_per_pulse < 1) throw InvalidArgument("samples_per_pulse must be >= 1");
  const auto pulses = (y_f.size() + samples_per_pulse - 1) / static_cast<std::size_t>(samples_per_pulse);
  std::vector<double> out(pulses);
  if (pulses == 0) return out;
  out[0] = blind_initial(pulse_window(y_f, 0, samples_per_pulse), L_p);
  for (std::size_t k = 1; k < pulses; ++k) {
    out[k] = blind_update(out[k - 1], window_max(pulse_window(y_f, k, samples_per_pulse)));
  }
  return out;
}

std::vector<std::uint8_t> digitize(std::span<const double> y_f, std::span<const double> thresholds,
                                   int samples_per_pulse) {
  if (samples_per_pulse < 1) throw InvalidArgument("samples_per_pulse must be >= 1");
  if (y_f.size() != thresholds.size() * static_cast<std::size_t>(samples_per_pulse)) {
    throw InvalidArgument("digitize: series length must equal pulses * samples_per_pulse");
  }
  std::vector<std::uint8_t> bits(y_f.size());
  for (std::size_t j = 0; j < y_f.size(); ++j) {
    bits[j] = y_f[j] >= thresholds[j / static_cast<std::size_t>(samples_per_pulse)] ? 1 : 0;
  }
  return bits;
}

std::vector<std::uint8_t> logical_pulses(const InputPatterns& patterns, Gate gate,
                                         const SimParams& p) {
  const auto n = static_cast<std::size_t>(p.n_pulses);
  std::vector<std::uint8_t> out(n, 0);
  const auto check = [&](const BitPattern& b) {
    if (b.bits.size() != n) throw InvalidArgument("bit pattern length must equal n_pulses");
  };
  if (gate == Gate::And) {
    check(patterns.a);
    check(patterns.b);
    const bool live = p.m_A > 0.0 && p.m_B > 0.0;
    for (std::size_t i = 0; i < n; ++i) out[i] = live && patterns.a.bits[i] && patterns.b.bits[i];
  } else {
    check(patterns.c);
    const bool live = p.m_C > 0.0;
    for (std::size_t i = 0; i < n; ++i) out[i] = live && patterns.c.bits[i];
  }
  return out;
}

int expected_delay_samples(const SimParams& p, bool production_delay) {
  return p.samples_for(p.tau_in + p.tau_g + (production_delay ? p.t_c : 0.0));
}

std::vector<std::uint8_t> expected_bits(std::span<const std::uint8_t> logical, const SimParams& p,
                                        bool production_delay) {
  const auto total = static_cast<std::ptrdiff_t>(p.j_tot);
  const auto spp = static_cast<std::ptrdiff_t>(p.samples_per_pulse);
  const auto shift = static_cast<std::ptrdiff_t>(expected_delay_samples(p, production_delay));
  std::vector<std::uint8_t> out(static_cast<std::size_t>(p.j_tot), 0);
  for (std::ptrdiff_t j = shift; j < total; ++j) {
    const auto pulse = static_cast<std::size_t>((j - shift) / spp);
    if (pulse < logical.size()) out[static_cast<std::size_t>(j)] = logical[pulse];
  }
  return out;
}

DetectionReport rlc(std::span<const std::uint8_t> bits, std::span<const std::uint8_t> expected) {
  if (bits.size() != expected.size()) throw InvalidArgument("rlc: length mismatch");
  if (bits.empty()) throw InvalidArgument("rlc: empty series");
  DetectionReport r;
  r.bits.assign(bits.begin(), bits.end());
  r.expected.assign(expected.begin(), expected.end());
  for (std::size_t j = 0; j < bits.size(); ++j) {
    const bool got = bits[j] != 0;
    const bool want = expected[j] != 0;
    if (got && want) ++r.tp;
    else if (!got && !want) ++r.tn;
    else if (got) ++r.fp;
    else ++r.fn;
  }
  r.rlc = 100.0 * (r.tp + r.tn) / static_cast<double>(bits.size());
  return r;
}

}  // namespace bmcoc
