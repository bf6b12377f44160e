// Copyright 2026 The horizonq developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "horizonq/analysis.hpp"
#include "horizonq/entanglement.hpp"
#include "horizonq/teleport.hpp"
#include "testutil.hpp"

using namespace horizonq;

namespace {

Scenario w_schwarzschild(double temperature = 1.0) {
  Scenario sc;
  sc.family = Family::W;
  sc.model = BlackHoleModel::schwarzschild_temperature(temperature);
  sc.traced = kLabelB;
  return sc;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("axis point arithmetic") {
  Axis a{"omega", 0.0, 1.0, 0.5};
  CHECK(a.points() == 3);
  CHECK(a.value(2) == 1.0);

  const Axis b = Axis::with_points("temperature", 1.0, 10.0, 200);
  CHECK(b.points() == 200);
  CHECK(b.value(0) == 1.0);
  CHECK(b.value(199) == doctest::Approx(10.0).epsilon(1e-12));

  Axis single{"omega", 2.0, 2.0, 1.0};
  CHECK(single.points() == 1);
}

TEST_CASE("grid validation") {
  const Axis omega{"omega", 0.0, 1.0, 0.5};
  const Axis temp{"temperature", 1.0, 2.0, 1.0};

  CHECK_NOTHROW((SweepGrid{omega, temp}.validate()));
  CHECK_THROWS_AS((SweepGrid{Axis{"omega", 1.0, 0.0, 0.5}, temp}.validate()),
                  ConfigError);
  CHECK_THROWS_AS((SweepGrid{Axis{"omega", 0.0, 1.0, -0.5}, temp}.validate()),
                  ConfigError);
  CHECK_THROWS_AS((SweepGrid{Axis{"banana", 0.0, 1.0, 0.5}, temp}.validate()),
                  ConfigError);
  CHECK_THROWS_AS((SweepGrid{omega, omega}.validate()), ConfigError);
  CHECK_THROWS_AS(
      (SweepGrid{Axis{"omega", 0.0, 10000.0, 0.001}, Axis{"temperature", 0.0,
                                                          10.0, 0.01}}
           .validate()),
      ConfigError);
  // A single axis past the cap is rejected before any size arithmetic.
  CHECK_THROWS_AS((Axis{"omega", 0.0, 1.0, 1e-9}.points()), ConfigError);
}

TEST_CASE("run_sweep: small W fidelity grid") {
  const SweepGrid grid{Axis{"omega", 0.0, 1.0, 0.5},
                       Axis{"temperature", 1.0, 2.0, 1.0}};
  const auto records =
      run_sweep(w_schwarzschild(), grid, {Measure::Fidelity});
  REQUIRE(records.size() == 6);
  for (const auto& rec : records) {
    CHECK(rec.values.at(Measure::Fidelity) > 2.0 / 3.0);
    CHECK_FALSE(rec.unphysical_regime);
  }
  // Row-major order: axis1 = omega outer, axis2 = temperature inner.
  CHECK(records[0].axis1 == 0.0);
  CHECK(records[0].axis2 == 1.0);
  CHECK(records[1].axis1 == 0.0);
  CHECK(records[1].axis2 == 2.0);
  CHECK(records[2].axis1 == 0.5);
}

TEST_CASE("run_sweep: GHZ residual tangle is 1 on any grid") {
  Scenario sc;
  sc.family = Family::Ghz;
  sc.model = BlackHoleModel::schwarzschild_temperature(1.0);
  const SweepGrid grid{Axis{"omega", 0.0, 2.0, 0.25},
                       Axis{"temperature", 0.5, 5.0, 0.75}};
  const auto records = run_sweep(sc, grid, {Measure::ResidualTangle});
  for (const auto& rec : records) {
    CHECK(std::abs(rec.values.at(Measure::ResidualTangle) - 1.0) <= 1e-8);
  }
}

TEST_CASE("run_sweep: dilaton regime flag follows D >= M") {
  Scenario sc;
  sc.family = Family::W;
  sc.model = BlackHoleModel::dilaton(1.0, 0.0);
  sc.traced = kLabelB;
  const SweepGrid grid{Axis{"dilaton", 0.5, 2.0, 0.25},
                       Axis{"omega", 0.0, 1.0, 0.5}};
  const auto records = run_sweep(sc, grid, {Measure::Fidelity});
  for (const auto& rec : records) {
    CHECK(rec.unphysical_regime == (rec.axis1 >= 1.0));
  }
}

TEST_CASE("run_sweep configuration errors") {
  const SweepGrid grid{Axis{"omega", 0.0, 1.0, 0.5},
                       Axis{"temperature", 1.0, 2.0, 1.0}};

  Scenario no_trace = w_schwarzschild();
  no_trace.traced.reset();
  CHECK_THROWS_AS(run_sweep(no_trace, grid, {Measure::Fidelity}), ConfigError);
  CHECK_NOTHROW(run_sweep(no_trace, grid, {Measure::ResidualTangle}));

  Scenario dil;
  dil.family = Family::W;
  dil.model = BlackHoleModel::dilaton(1.0, 0.5);
  dil.traced = kLabelB;
  CHECK_THROWS_AS(run_sweep(dil, grid, {Measure::Fidelity}), ConfigError);

  CHECK_THROWS_AS(run_sweep(w_schwarzschild(), grid, {}), ConfigError);
}

TEST_CASE("serial and parallel sweeps agree bitwise") {
  const SweepGrid grid{Axis{"omega", 0.0, 1.0, 0.05},
                       Axis{"temperature", 1.0, 4.0, 0.2}};
  const std::vector<Measure> measures = {Measure::Concurrence,
                                         Measure::Fidelity, Measure::NValue,
                                         Measure::Useful};
  const auto serial = run_sweep_serial(w_schwarzschild(), grid, measures);
  const auto parallel =
      run_sweep(w_schwarzschild(), grid, measures, Execution::Parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].axis1 == parallel[i].axis1);
    CHECK(serial[i].axis2 == parallel[i].axis2);
    CHECK(serial[i].mu == parallel[i].mu);
    CHECK(serial[i].nu == parallel[i].nu);
    REQUIRE(serial[i].values.size() == parallel[i].values.size());
    for (const auto& [m, v] : serial[i].values) {
      CHECK(v == parallel[i].values.at(m));
    }
  }
}

TEST_CASE("csv emission format") {
  const SweepGrid grid{Axis{"omega", 0.0, 1.0, 1.0},
                       Axis{"temperature", 1.0, 2.0, 1.0}};
  const std::vector<Measure> measures = {Measure::Fidelity,
                                         Measure::Concurrence};
  const auto records = run_sweep(w_schwarzschild(), grid, measures);
  std::ostringstream os;
  write_csv(os, records, measures);
  const std::string csv = os.str();

  CHECK(csv.rfind("axis1,axis2,mu,nu,measure,value,unphysical\n", 0) == 0);
  // 4 grid points x 2 measures + header.
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 9);
  CHECK(csv.find("fidelity") != std::string::npos);
  CHECK(csv.find("concurrence") != std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);

  // Byte determinism.
  std::ostringstream os2;
  write_csv(os2, run_sweep(w_schwarzschild(), grid, measures), measures);
  CHECK(os2.str() == csv);
}

TEST_CASE("closed-form fidelity") {
  CHECK(closed_form_fidelity_w(1.0, 0.0) ==
        doctest::Approx(7.0 / 9.0).epsilon(1e-12));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(closed_form_fidelity_w(r, r) ==
        doctest::Approx(0.69880151).epsilon(1e-7));
  CHECK_THROWS_AS(closed_form_fidelity_w(0.5, 0.5), ContractError);

  // The published form deviates from the pipeline by exactly mu^2 nu^2 / 18.
  for (double x : {0.0, 0.4, 1.0, 2.5}) {
    const ModeAmplitudes amps = ModeAmplitudes::from_exponent(x);
    const DensityOp pair = build_reduced_from_amps(Family::W, amps, kLabelB);
    const double pipeline = teleportation_fidelity(pair).fidelity;
    const double closed = closed_form_fidelity_w(amps.mu, amps.nu);
    const double expected_gap =
        amps.mu * amps.mu * amps.nu * amps.nu / 18.0;
    CHECK(std::abs((pipeline - closed) - expected_gap) <= 1e-12);
    CHECK(std::abs(pipeline - closed) <= 1.0 / 72.0 + 1e-12);
  }
}

TEST_CASE("closed-form concurrence") {
  CHECK(closed_form_concurrence_w(1.0, 0.0) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK_THROWS_AS(closed_form_concurrence_w(0.9, 0.9), ContractError);

  // The published radicals reduce to the pipeline value for normalized
  // amplitudes; the diff is recorded but is numerically zero.
  for (double x : {0.0, 0.7, 1.0, 3.0}) {
    const ModeAmplitudes amps = ModeAmplitudes::from_exponent(x);
    const DensityOp pair = build_reduced_from_amps(Family::W, amps, kLabelB);
    CHECK(test::approx(closed_form_concurrence_w(amps.mu, amps.nu),
                       concurrence(pair), 1e-9));
  }
}

TEST_CASE("closed-form GHZ tangle") {
  CHECK(closed_form_tangle_ghz(1.0, 0.0) == 1.0);
  const ModeAmplitudes amps = ModeAmplitudes::from_exponent(0.8);
  CHECK(closed_form_tangle_ghz(amps.mu, amps.nu) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // No normalization precondition: the raw formula value is returned.
  CHECK(closed_form_tangle_ghz(0.9, 0.3) == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("flat-limit agreement of pipeline and closed forms") {
  const ModeAmplitudes flat{1.0, 0.0};
  const DensityOp pair = build_reduced_from_amps(Family::W, flat, kLabelB);
  CHECK(test::approx(teleportation_fidelity(pair).fidelity,
                     closed_form_fidelity_w(1.0, 0.0), 1e-9));
  CHECK(test::approx(concurrence(pair), closed_form_concurrence_w(1.0, 0.0),
                     1e-9));
  const DensityOp rho3 = build_reduced_from_amps(Family::Ghz, flat, std::nullopt);
  CHECK(test::approx(residual_tangle(rho3, kLabelA).residual,
                     closed_form_tangle_ghz(1.0, 0.0), 1e-9));
}

TEST_CASE("reference matrix reports") {
  const ModeAmplitudes amps = ModeAmplitudes::from_exponent(1.0);
  const double nu2 = amps.nu * amps.nu;
  const double nu4 = nu2 * nu2;

  const auto ghz3 =
      compare_reference_matrix(ReferenceMatrix::GhzTripartite, amps.mu, amps.nu);
  CHECK(ghz3.max_abs_entry_diff <= 1e-12);
  CHECK(ghz3.symmetric);
  CHECK(ghz3.trace_of_reference == doctest::Approx(1.0).epsilon(1e-12));

  const auto w3 =
      compare_reference_matrix(ReferenceMatrix::WTripartite, amps.mu, amps.nu);
  CHECK(w3.max_abs_entry_diff <= 1e-12);
  CHECK(w3.trace_of_reference == doctest::Approx(1.0).epsilon(1e-12));

  // The published W pair matrix has a mistyped second diagonal entry: its
  // trace misses 1 by (nu^2 - nu^4)/3 and the worst entry deviates by the
  // same amount.
  const auto wp =
      compare_reference_matrix(ReferenceMatrix::WPairAC, amps.mu, amps.nu);
  CHECK(std::abs(wp.trace_of_reference - (1.0 + (nu4 - nu2) / 3.0)) <= 1e-12);
  CHECK(std::abs(wp.max_abs_entry_diff - std::abs(nu2 - nu4) / 3.0) <= 1e-12);
  CHECK(wp.symmetric);

  // The published W1 tripartite matrix is not symmetric.
  const auto w13 =
      compare_reference_matrix(ReferenceMatrix::W1Tripartite, amps.mu, amps.nu);
  CHECK_FALSE(w13.symmetric);

  // The published W1 pair matrix is exact.
  const auto w1p =
      compare_reference_matrix(ReferenceMatrix::W1PairAC, amps.mu, amps.nu);
  CHECK(w1p.max_abs_entry_diff <= 1e-12);
  CHECK(w1p.trace_of_reference == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w1p.symmetric);

  // The published GHZ pair matrices drop the excited-branch weight.
  const auto gbc =
      compare_reference_matrix(ReferenceMatrix::GhzPairBC, amps.mu, amps.nu);
  CHECK(gbc.trace_of_reference == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(gbc.max_abs_entry_diff == doctest::Approx(0.5).epsilon(1e-9));

  const auto gac =
      compare_reference_matrix(ReferenceMatrix::GhzPairAC, amps.mu, amps.nu);
  CHECK(gac.trace_of_reference == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gac.max_abs_entry_diff == doctest::Approx(nu4 / 2.0).epsilon(1e-9));

  CHECK_THROWS_AS(compare_reference_matrix(ReferenceMatrix::WPairAC, 0.9, 0.9),
                  ContractError);

  const auto family_reports = compare_family_references(Family::Ghz, amps.mu,
                                                        amps.nu);
  CHECK(family_reports.size() == 3);
  const std::string json = to_json(family_reports[0]);
  CHECK(json.find("\"target\":\"ghz_tripartite\"") != std::string::npos);
}

TEST_CASE("figure reproduction") {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / "horizonq_test_fig5";
  fs::remove_all(dir);

  const auto files = reproduce_figure(5, dir);
  REQUIRE(files.size() == 1);
  CHECK(files[0].filename() == "fig5_fidelity.csv");

  const std::string csv = slurp(files[0]);
  CHECK(csv.rfind("axis1,axis2,mu,nu,measure,value,unphysical\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 200 * 200 + 1);

  // The fidelity surface spans the published band.
  double vmin = 1.0, vmax = 0.0;
  std::istringstream rows(csv);
  std::string row;
  std::getline(rows, row);  // header
  while (std::getline(rows, row)) {
    const auto a = row.rfind(',');
    const auto b = row.rfind(',', a - 1);
    vmin = std::min(vmin, std::stod(row.substr(b + 1, a - b - 1)));
    vmax = std::max(vmax, std::stod(row.substr(b + 1, a - b - 1)));
  }
  CHECK(vmin == doctest::Approx(0.7166).epsilon(0.007));
  CHECK(vmax == doctest::Approx(0.7456).epsilon(0.007));

  // Deterministic bytes across runs.
  const fs::path dir2 = fs::temp_directory_path() / "horizonq_test_fig5b";
  fs::remove_all(dir2);
  const auto files2 = reproduce_figure(5, dir2);
  CHECK(slurp(files2[0]) == csv);

  fs::remove_all(dir);
  fs::remove_all(dir2);

  CHECK_THROWS_AS(reproduce_figure(1, dir), ConfigError);
  CHECK_THROWS_AS(reproduce_figure(11, dir), ConfigError);
}

TEST_CASE("figure 2 emits both models with tangle pinned at 1") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "horizonq_test_fig2";
  fs::remove_all(dir);
  const auto files = reproduce_figure(2, dir);
  REQUIRE(files.size() == 2);
  CHECK(files[0].filename() == "fig2_residual_tangle_schwarzschild.csv");
  CHECK(files[1].filename() == "fig2_residual_tangle_dilaton.csv");

  for (const auto& file : files) {
    std::istringstream rows(slurp(file));
    std::string row;
    std::getline(rows, row);
    std::size_t n = 0;
    while (std::getline(rows, row)) {
      const auto a = row.rfind(',');
      const auto b = row.rfind(',', a - 1);
      const double v = std::stod(row.substr(b + 1, a - b - 1));
      REQUIRE(std::abs(v - 1.0) <= 1e-8);
      ++n;
    }
    CHECK(n == 200 * 200);
  }
  fs::remove_all(dir);
}

TEST_CASE("W1 dilaton concurrence decays for large D") {
  // The fig-8 scenario at omega = 1: beyond D ~ 1.5 the channel is dead.
  Scenario sc;
  sc.family = Family::W1;
  sc.model = BlackHoleModel::dilaton(1.0, 0.1);
  sc.traced = kLabelB;
  const SweepGrid grid{Axis{"dilaton", 1.5, 10.0, 0.5},
                       Axis{"omega", 1.0, 1.0, 1.0}};
  const auto records = run_sweep(sc, grid, {Measure::Concurrence});
  for (const auto& rec : records) {
    CHECK(rec.values.at(Measure::Concurrence) <= 1e-3);
    if (rec.axis1 >= 2.5) CHECK(rec.values.at(Measure::Concurrence) <= 1e-6);
    CHECK(rec.unphysical_regime);
  }
}
