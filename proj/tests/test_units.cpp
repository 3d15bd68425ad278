#include <doctest.h>

#include <cmath>
#include <random>

#include "bmcoc/error.hpp"
#include "bmcoc/units.hpp"

using namespace bmcoc;

TEST_CASE("default parameter values") {
  const SimParams p;
  CHECK(p.K_A == 10.0);
  CHECK(p.K_B == 10.0);
  CHECK(p.K_C == 10.0);
  CHECK(p.n == 2.0);
  CHECK(p.gamma == 0.01);
  CHECK(p.D == 1.37e-7);
  CHECK(p.z1 == 5e-6);
  CHECK(p.z2 == 50e-6);
  CHECK(p.m_A == 1.2e-3);
  CHECK(p.m_B == 1.8e-3);
  CHECK(p.m_C == 1.2e-3);
  CHECK(p.t_c == 720.0);
  CHECK(p.t_total == 18000.0);
  CHECK(p.t_p == 1800.0);
  CHECK(p.tau_in == 100.0);
  CHECK(p.tau_g == 100.0);
  CHECK(p.Gamma_s == 34.892);
  CHECK(p.T_abs == 300.15);
  CHECK(p.a_e == 100e-12);
  CHECK(p.sigma_AND == 2e-9);
  CHECK(p.sigma_ON == 1e-9);
  CHECK(p.samples_per_pulse == 50);
  CHECK(p.n_pulses == 10);
  CHECK(p.j_tot == 500);
  CHECK(p.r_ch == 5e-6);
  CHECK(p.h_ch1 == 10e-6);
  CHECK(p.dt() == 36.0);
  CHECK(p.samples_for(p.t_c) == 20);
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("grid identities hold for the defaults") {
  const SimParams p;
  CHECK(p.j_tot == p.samples_per_pulse * p.n_pulses);
  CHECK(p.t_total == p.t_p * p.n_pulses);
}

TEST_CASE("load_params") {
  SUBCASE("empty text gives defaults") { CHECK(load_params("") == SimParams{}); }
  SUBCASE("single override") {
    auto p = load_params("tau_g = 600\n");
    SimParams want;
    want.tau_g = 600.0;
    CHECK(p == want);
  }
  SUBCASE("comments and blank lines") {
    auto p = load_params("# header\n\n  gamma = 0.02   # faster decay\n");
    CHECK(p.gamma == 0.02);
  }
  SUBCASE("non-positive value") { CHECK_THROWS_AS(load_params("gamma = -1"), ConfigError); }
  SUBCASE("unknown key") { CHECK_THROWS_AS(load_params("gama = 1"), ConfigError); }
  SUBCASE("duplicate key") { CHECK_THROWS_AS(load_params("gamma = 1\ngamma = 2"), ConfigError); }
  SUBCASE("garbage value") { CHECK_THROWS_AS(load_params("gamma = fast"), ConfigError); }
  SUBCASE("missing equals") { CHECK_THROWS_AS(load_params("gamma 1"), ConfigError); }
  SUBCASE("derived grid") {
    auto p = load_params("n_pulses = 25");
    CHECK(p.j_tot == 1250);
    CHECK(p.t_total == 45000.0);
  }
  SUBCASE("inconsistent grid") { CHECK_THROWS_AS(load_params("n_pulses = 25\nj_tot = 500"), ConfigError); }
  SUBCASE("large seed keeps every bit") {
    auto p = load_params("seed = 18446744073709551615");
    CHECK(p.seed == 18446744073709551615ull);
  }
  SUBCASE("L_p below one") { CHECK_THROWS_AS(load_params("L_p = 0.5"), ConfigError); }
  SUBCASE("missing file") { CHECK_THROWS_AS(load_params_file("/nonexistent/x.cfg"), ConfigError); }
}

TEST_CASE("serialize round-trips for random valid parameters") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> f(0.1, 10.0);
  for (int i = 0; i < 50; ++i) {
    SimParams p;
    p.gamma = 0.01 * f(rng);
    p.D = 1e-7 * f(rng);
    p.m_B = 1e-3 * f(rng);
    p.tau_g = 100.0 * f(rng);
    p.output_scale = 1e-13 * f(rng);
    p.L_p = 1.0 + f(rng);
    p.seed = rng();
    p.n_pulses = 1 + static_cast<int>(rng() % 30);
    p.j_tot = p.samples_per_pulse * p.n_pulses;
    p.t_total = p.t_p * p.n_pulses;
    CHECK(load_params(serialize(p)) == p);
  }
}

TEST_CASE("get_param and set_param") {
  SimParams p;
  CHECK(get_param(p, "tau_g") == 100.0);
  set_param(p, "tau_g", 250.0);
  CHECK(p.tau_g == 250.0);
  set_param(p, "n_pulses", 12.0);
  CHECK(p.n_pulses == 12);
  CHECK_THROWS_AS(get_param(p, "nope"), ConfigError);
  CHECK_THROWS_AS(set_param(p, "n_pulses", 2.5), ConfigError);
}

TEST_CASE("chamber_volumes") {
  const auto v = chamber_volumes(5e-6, 10e-6, 1.0, 1.0, 1.0);
  CHECK(v.population == doctest::Approx(7.853981633974483e-16).epsilon(1e-12));
  CHECK(v.diffusion == 1.0);
  CHECK_THROWS_AS(chamber_volumes(0.0, 10e-6, 1, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(chamber_volumes(1, 1, 1, -1, 1), InvalidArgument);
}

TEST_CASE("convert_concentration") {
  CHECK(convert_concentration(1.2, "mmol/L", "mol/L") == doctest::Approx(1.2e-3).epsilon(1e-15));
  CHECK(convert_concentration(2.0, "nmol/L", "mol/L") == doctest::Approx(2e-9).epsilon(1e-15));
  CHECK(convert_concentration(1.0, "mol/L", "mol/m3") == 1000.0);
  CHECK(convert_concentration(3.0, "µmol/L", "umol/L") == 3.0);
  CHECK_THROWS_AS(convert_concentration(1.0, "g/L", "mol/L"), InvalidArgument);

  const char* units[] = {"mol/L", "mmol/L", "umol/L", "nmol/L", "mol/m3"};
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> val(1e-6, 1e3);
  for (const char* a : units) {
    for (const char* b : units) {
      for (int i = 0; i < 20; ++i) {
        const double x = val(rng);
        const double back = convert_concentration(convert_concentration(x, a, b), b, a);
        CHECK(std::abs(back - x) <= 2 * std::numeric_limits<double>::epsilon() * x);
      }
    }
  }
}

TEST_CASE("scenario labels") {
  CHECK(ScenarioFlags{false, false}.label() == "NPN-NPD");
  CHECK(ScenarioFlags{true, false}.label() == "YPN-NPD");
  CHECK(ScenarioFlags{false, true}.label() == "NPN-YPD");
  CHECK(ScenarioFlags{true, true}.label() == "YPN-YPD");
}
