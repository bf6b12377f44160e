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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "horizonq/horizon.hpp"

namespace horizonq {

enum class Measure {
  Concurrence,
  OneTangle,
  ResidualTangle,
  NValue,
  Fidelity,
  Useful,
};

std::string measure_name(Measure m);
Measure measure_from_name(const std::string& name);

/// One sweep axis: values start + k * step for k = 0 .. points() - 1.
/// Valid names: omega, temperature, dilaton, charge, mass.
struct Axis {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::size_t points() const;
  double value(std::size_t k) const { return start + static_cast<double>(k) * step; }

  /// Axis covering [start, stop] with exactly `count` evenly spaced points.
  static Axis with_points(std::string name, double start, double stop,
                          std::size_t count);
};

/// Two-axis grid, evaluated row-major (axis1 outer, axis2 inner). The total
/// point count is capped at 10^6.
struct SweepGrid {
  Axis axis1;
  Axis axis2;

  void validate() const;
  std::size_t total_points() const { return axis1.points() * axis2.points(); }
};

/// Measures evaluated at one grid point.
struct MeasureRecord {
  double axis1 = 0.0;
  double axis2 = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  std::map<Measure, double> values;  // Useful stored as 0/1
  bool unphysical_regime = false;
};

enum class Execution { Serial, Parallel };

/// Evaluates the scenario template over the grid. Records come back in
/// row-major grid order regardless of scheduling, so serial and parallel
/// runs produce identical output. Bipartite measures (concurrence, n_value,
/// fidelity, useful) require sc.traced to be set.
std::vector<MeasureRecord> run_sweep(const Scenario& sc, const SweepGrid& grid,
                                     const std::vector<Measure>& measures,
                                     Execution exec = Execution::Parallel);

/// Serial reference implementation; run_sweep(..., Execution::Parallel)
/// must agree with it byte for byte.
inline std::vector<MeasureRecord> run_sweep_serial(
    const Scenario& sc, const SweepGrid& grid,
    const std::vector<Measure>& measures) {
  return run_sweep(sc, grid, measures, Execution::Serial);
}

/// CSV emission: header axis1,axis2,mu,nu,measure,value,unphysical; one row
/// per (record, measure) with floats printed to 9 significant digits and LF
/// line endings. Deterministic.
void write_csv(std::ostream& os, const std::vector<MeasureRecord>& records,
               const std::vector<Measure>& measures);

// --- published closed forms (diff targets, never computation inputs) ----

/// Closed-form teleportation fidelity of the reduced W pair state:
/// 1/2 + (mu^4 + nu^2)/18 + 2(mu^3 + mu nu^2)/9, evaluated verbatim.
/// Differs from the first-principles pipeline by exactly mu^2 nu^2 / 18.
double closed_form_fidelity_w(double mu, double nu);

/// Closed-form concurrence of the reduced W pair state (verbatim f1..f4
/// radicals, clamped at zero).
double closed_form_concurrence_w(double mu, double nu);

/// Closed-form tangle of the dressed GHZ state: mu^2 + nu^2 (identically 1
/// for normalized amplitudes). No normalization is enforced here.
double closed_form_tangle_ghz(double mu, double nu);

// --- reference matrix cross-checks --------------------------------------

/// The published reduced density matrices this toolkit diffs against.
/// Tripartite targets are written in Hamming-weight basis order; pair
/// targets in lexicographic order.
enum class ReferenceMatrix {
  GhzTripartite,  // rho over (A,B,C) after tracing the barred modes
  GhzPairBC,      // additionally traces A
  GhzPairAC,      // additionally traces B
  WTripartite,
  WPairAC,
  W1Tripartite,
  W1PairAC,
};

std::string reference_matrix_name(ReferenceMatrix id);

/// Structured diff of the first-principles pipeline against one published
/// matrix evaluated at (mu, nu). The published form is reconstructed
/// symbolically and never feeds back into any computation.
struct DiscrepancyReport {
  std::string target;
  double max_abs_entry_diff = 0.0;
  double trace_of_reference = 0.0;
  bool symmetric = true;
  std::string notes;
};

DiscrepancyReport compare_reference_matrix(ReferenceMatrix id, double mu,
                                           double nu);

/// All reference diffs for one family.
std::vector<DiscrepancyReport> compare_family_references(Family family,
                                                         double mu, double nu);

std::string to_json(const DiscrepancyReport& report);

// --- figure reproduction -------------------------------------------------

/// Emits the CSV data set(s) for one published figure (ids 2 through 10)
/// into outdir, 200 points per axis. Returns the written paths.
std::vector<std::filesystem::path> reproduce_figure(
    int id, const std::filesystem::path& outdir);

}  // namespace horizonq
