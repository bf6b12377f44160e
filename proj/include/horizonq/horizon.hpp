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

#include <optional>
#include <string>
#include <vector>

#include "horizonq/qstate.hpp"

namespace horizonq {

enum class Family { Ghz, W, W1 };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// The undressed channel state of a family, over parties (A, B, C).
PureState family_state(Family f);

/// Black-hole background parameters in natural units (G = hbar = c = k_B = 1).
///
/// Schwarzschild models may be built from the mass M (Hawking temperature
/// T = 1/(8 pi M)) or directly from a temperature, since parameter sweeps
/// treat T as a free axis. Dilaton models carry mass M and dilaton D, with
/// D = Q^2/(2M) when built from a charge Q. D < M is the physical regime;
/// larger D is accepted but reported through unphysical_regime().
class BlackHoleModel {
 public:
  static BlackHoleModel schwarzschild_mass(double mass);
  /// Direct temperature; T = 0 is accepted as the zero-temperature limit.
  static BlackHoleModel schwarzschild_temperature(double temperature);
  static BlackHoleModel dilaton(double mass, double dilaton);
  static BlackHoleModel dilaton_charge(double mass, double charge);

  bool is_schwarzschild() const { return kind_ == Kind::Schwarzschild; }
  bool is_dilaton() const { return kind_ == Kind::Dilaton; }

  /// Mass, when the model was built from one; unset for direct-temperature
  /// Schwarzschild models.
  std::optional<double> mass() const { return mass_; }
  std::optional<double> temperature() const { return temperature_; }
  std::optional<double> dilaton_parameter() const { return dilaton_; }

  /// True for dilaton models with D >= M.
  bool unphysical_regime() const;

 private:
  enum class Kind { Schwarzschild, Dilaton };
  BlackHoleModel() = default;

  Kind kind_ = Kind::Schwarzschild;
  std::optional<double> mass_;
  std::optional<double> temperature_;
  std::optional<double> dilaton_;
};

/// Hawking temperature of a Schwarzschild model: 1/(8 pi M) from the mass,
/// or the stored temperature verbatim. Dilaton models raise ContractError
/// (their sweeps are parametrized by (M, D, omega), never by T).
double hawking_temperature(const BlackHoleModel& model);

/// Two-mode squeezing amplitudes of the near-horizon vacuum,
/// |0> -> mu|00> + nu|11| with mu^2 + nu^2 = 1. mu >= nu whenever the
/// effective exponent is nonnegative (the physical regime).
struct ModeAmplitudes {
  double mu;
  double nu;

  /// Builds from the effective exponent x: mu = 1/sqrt(exp(-x) + 1),
  /// nu = 1/sqrt(exp(x) + 1). Evaluation saturates to (1, 0) for large x so
  /// no overflow occurs.
  static ModeAmplitudes from_exponent(double x);
};

/// Amplitudes for one monochromatic mode of frequency omega >= 0.
/// Schwarzschild: exponent omega/T. Dilaton: exponent 8 pi (M - D) omega.
ModeAmplitudes mode_amplitudes(const BlackHoleModel& model, double omega);

/// One experiment layout: which family, which background, which parties sit
/// near the horizon, and which party (if any) is traced out of the final
/// tripartite state.
struct Scenario {
  Family family = Family::Ghz;
  BlackHoleModel model = BlackHoleModel::schwarzschild_temperature(1.0);
  double omega = 0.0;
  std::vector<QubitLabel> dressed = {kLabelB, kLabelC};
  std::optional<QubitLabel> traced;
};

/// Replaces each qubit in `parties` by the ordered pair (q, qbar) with
/// |0> -> mu|0 0> + nu|1 1> and |1> -> |1 0>; other qubits are untouched.
/// The map is an isometry, so the output norm is checked and renormalized.
PureState dress_state(const PureState& s,
                      const std::vector<QubitLabel>& parties,
                      const ModeAmplitudes& amps);

/// Full pipeline: family state -> dress -> trace all barred modes -> trace
/// the optional party. Yields a 3-qubit (or 2-qubit) density operator.
DensityOp build_reduced(const Scenario& sc);

/// Same pipeline with explicit amplitudes, dressing B and C.
DensityOp build_reduced_from_amps(Family family, const ModeAmplitudes& amps,
                                  const std::optional<QubitLabel>& traced);

// Scenario JSON:
// {"family": "ghz", "model": {"type": "schwarzschild", "temperature": 1.0},
//  "omega": 1.0, "dressed": ["B", "C"], "trace": "B"}
Scenario scenario_from_json(const std::string& text);
std::string to_json(const Scenario& sc);

}  // namespace horizonq
