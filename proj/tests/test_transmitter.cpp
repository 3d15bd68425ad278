#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bmcoc/error.hpp"
#include "bmcoc/transmitter.hpp"
#include "oracles.hpp"

using namespace bmcoc;

namespace {
std::vector<std::uint8_t> B(std::initializer_list<int> v) { return {v.begin(), v.end()}; }
}

TEST_CASE("make_bit_pattern") {
  CHECK(make_bit_pattern({PatternKind::AllOnes, 0}, 10).bits == std::vector<std::uint8_t>(10, 1));
  CHECK(make_bit_pattern({PatternKind::Alternating, 0}, 4).bits == B({1, 0, 1, 0}));
  const auto a = make_bit_pattern({PatternKind::SeededRandom, 7}, 10);
  const auto b = make_bit_pattern({PatternKind::SeededRandom, 7}, 10);
  CHECK(a == b);
  CHECK(make_bit_pattern({PatternKind::SeededRandom, 8}, 64) != make_bit_pattern({PatternKind::SeededRandom, 7}, 64));
  CHECK(make_bit_pattern({PatternKind::AllOnes, 0}, 3, Line::C).line == Line::C);
  CHECK_THROWS_AS(make_bit_pattern({PatternKind::AllOnes, 0}, 0), InvalidArgument);
}

TEST_CASE("default patterns cover every AND input combination") {
  const auto pat = default_patterns(42, 10);
  CHECK(pat.a.line == Line::A);
  CHECK(pat.b.line == Line::B);
  CHECK(pat.c.line == Line::C);
  bool seen[2][2] = {};
  for (std::size_t i = 0; i < 10; ++i) seen[pat.a.bits[i]][pat.b.bits[i]] = true;
  CHECK(seen[0][0]);
  CHECK(seen[0][1]);
  CHECK(seen[1][0]);
  CHECK(seen[1][1]);
}

TEST_CASE("single pulse sample against the closed form") {
  const SimParams p;
  const double got = input_pulse_amplitude(1.2e-3, 100.0, p);
  CHECK(got == doctest::Approx(oracle::pulse(1.2e-3, 100.0, p.tau_in, p.z1, p.D)).epsilon(1e-13));
  // z1 is small against the diffusion length, so the exponential is close to 1
  CHECK(got == doctest::Approx(1.2e-3 / std::sqrt(4 * std::numbers::pi * 1.37e-7 * 200.0)).epsilon(1e-3));
}

TEST_CASE("input train matches the per-sample oracle") {
  const SimParams p;
  const auto bits = make_bit_pattern({PatternKind::SeededRandom, 3}, p.n_pulses);
  const auto sig = input_concentration(bits, p.m_A, p);
  REQUIRE(sig.samples.size() == 500);
  CHECK(sig.dt == 36.0);
  for (int j = 0; j < p.j_tot; ++j) {
    const double since = j * 36.0 - p.tau_in;
    double want = 0.0;
    if (since >= 0) {
      const int k = static_cast<int>(since / p.t_p);
      if (k < p.n_pulses && bits.bits[k]) want = oracle::pulse(p.m_A, since - k * p.t_p, p.tau_in, p.z1, p.D);
    }
    CHECK(sig.samples[j] == doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("zero amplitude gives silence") {
  const SimParams p;
  const auto sig = input_concentration(make_bit_pattern({PatternKind::AllOnes, 0}, 10), 0.0, p);
  CHECK(std::all_of(sig.samples.begin(), sig.samples.end(), [](double v) { return v == 0.0; }));
}

TEST_CASE("linearity in the amplitude") {
  const SimParams p;
  const auto bits = make_bit_pattern({PatternKind::SeededRandom, 11}, 10);
  const auto one = input_concentration(bits, 1e-3, p);
  const auto two = input_concentration(bits, 2e-3, p);
  for (std::size_t j = 0; j < one.samples.size(); ++j) CHECK(two.samples[j] == 2.0 * one.samples[j]);
}

TEST_CASE("support lies inside shifted bit-1 windows") {
  const SimParams p;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto bits = make_bit_pattern({PatternKind::SeededRandom, seed}, 10);
    const auto sig = input_concentration(bits, 1e-3, p);
    for (int j = 0; j < p.j_tot; ++j) {
      if (sig.samples[j] == 0.0) continue;
      const double since = j * p.dt() - p.tau_in;
      REQUIRE(since >= 0.0);
      CHECK(bits.bits[static_cast<std::size_t>(since / p.t_p)] == 1);
    }
  }
}

TEST_CASE("envelope is non-increasing inside a pulse") {
  SimParams p;
  const auto sig = input_concentration(make_bit_pattern({PatternKind::AllOnes, 0}, 10), 1e-3, p);
  for (int j = 1; j < p.j_tot; ++j) {
    const double prev_since = (j - 1) * p.dt() - p.tau_in;
    const double since = j * p.dt() - p.tau_in;
    if (prev_since < 0) continue;
    if (static_cast<int>(since / p.t_p) != static_cast<int>(prev_since / p.t_p)) continue;
    CHECK(sig.samples[j] <= sig.samples[j - 1]);
  }
}

TEST_CASE("line amplitudes") {
  const SimParams p;
  CHECK(line_amplitude(Line::A, p) == p.m_A);
  CHECK(line_amplitude(Line::B, p) == p.m_B);
  CHECK(line_amplitude(Line::C, p) == p.m_C);
}

TEST_CASE("pattern length must match the grid") {
  const SimParams p;
  CHECK_THROWS_AS(input_concentration(make_bit_pattern({PatternKind::AllOnes, 0}, 9), 1e-3, p), InvalidArgument);
}
