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

#include "horizonq/horizon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

namespace horizonq {

namespace {

// Beyond this exponent magnitude exp() would overflow; the amplitudes have
// saturated to machine precision long before.
constexpr double kExponentSaturation = 700.0;

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Ghz: return "ghz";
    case Family::W: return "w";
    case Family::W1: return "w1";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "ghz") return Family::Ghz;
  if (name == "w") return Family::W;
  if (name == "w1") return Family::W1;
  throw ConfigError("unknown state family '" + name + "'");
}

PureState family_state(Family f) {
  switch (f) {
    case Family::Ghz: return make_ghz();
    case Family::W: return make_w();
    case Family::W1: return make_w1();
  }
  throw ConfigError("unknown state family");
}

BlackHoleModel BlackHoleModel::schwarzschild_mass(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw DomainError("Schwarzschild mass must be positive and finite");
  }
  BlackHoleModel m;
  m.kind_ = Kind::Schwarzschild;
  m.mass_ = mass;
  return m;
}

BlackHoleModel BlackHoleModel::schwarzschild_temperature(double temperature) {
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw DomainError("Hawking temperature must be nonnegative and finite");
  }
  BlackHoleModel m;
  m.kind_ = Kind::Schwarzschild;
  m.temperature_ = temperature;
  return m;
}

BlackHoleModel BlackHoleModel::dilaton(double mass, double dilaton) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw DomainError("dilaton model mass must be positive and finite");
  }
  if (!(dilaton >= 0.0) || !std::isfinite(dilaton)) {
    throw DomainError("dilaton parameter must be nonnegative and finite");
  }
  BlackHoleModel m;
  m.kind_ = Kind::Dilaton;
  m.mass_ = mass;
  m.dilaton_ = dilaton;
  return m;
}

BlackHoleModel BlackHoleModel::dilaton_charge(double mass, double charge) {
  if (!std::isfinite(charge)) throw DomainError("charge must be finite");
  return dilaton(mass, charge * charge / (2.0 * mass));
}

bool BlackHoleModel::unphysical_regime() const {
  return kind_ == Kind::Dilaton && *dilaton_ >= *mass_;
}

double hawking_temperature(const BlackHoleModel& model) {
  if (model.is_dilaton()) {
    throw ContractError(
        "hawking_temperature is defined for Schwarzschild models only");
  }
  if (model.temperature()) return *model.temperature();
  return 1.0 / (8.0 * std::numbers::pi * *model.mass());
}

ModeAmplitudes ModeAmplitudes::from_exponent(double x) {
  ModeAmplitudes a{};
  if (x >= kExponentSaturation) {
    a.mu = 1.0;
    a.nu = 0.0;
  } else if (x <= -kExponentSaturation) {
    a.mu = 0.0;
    a.nu = 1.0;
  } else {
    a.mu = 1.0 / std::sqrt(std::exp(-x) + 1.0);
    a.nu = 1.0 / std::sqrt(std::exp(x) + 1.0);
  }
  if (std::abs(a.mu * a.mu + a.nu * a.nu - 1.0) > 1e-12) {
    throw NumericError("mode amplitudes lost normalization");
  }
  return a;
}

ModeAmplitudes mode_amplitudes(const BlackHoleModel& model, double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw DomainError("mode frequency omega must be nonnegative and finite");
  }
  double x = 0.0;
  if (model.is_schwarzschild()) {
    const double temp = hawking_temperature(model);
    if (temp == 0.0) {
      // Zero-temperature limit: fully transparent horizon.
      x = omega > 0.0 ? kExponentSaturation : 0.0;
    } else {
      x = omega / temp;
    }
  } else {
    x = 8.0 * std::numbers::pi * (*model.mass() - *model.dilaton_parameter()) *
        omega;
  }
  return ModeAmplitudes::from_exponent(x);
}

PureState dress_state(const PureState& s,
                      const std::vector<QubitLabel>& parties,
                      const ModeAmplitudes& amps) {
  std::vector<std::size_t> positions;
  positions.reserve(parties.size());
  for (const auto& q : parties) positions.push_back(s.position_of(q));
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) !=
      positions.end()) {
    throw LabelError("dress_state: duplicate party in dressing set");
  }

  std::vector<QubitLabel> labels = s.labels();
  std::vector<complexd> amplitudes = s.amplitudes();
  std::size_t n = s.n_qubits();

  // Dress left to right; each insertion shifts the remaining positions.
  for (std::size_t d = 0; d < positions.size(); ++d) {
    const std::size_t pos = positions[d] + d;
    std::vector<complexd> next(amplitudes.size() * 2, complexd{});
    const std::size_t low_bits = n - 1 - pos;  // bits to the right of pos
    const std::size_t low_mask = (std::size_t{1} << low_bits) - 1;
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
      const complexd a = amplitudes[i];
      if (a == complexd{}) continue;
      const std::size_t high = i >> (low_bits + 1);
      const std::size_t bit = (i >> low_bits) & 1u;
      const std::size_t low = i & low_mask;
      const auto index = [&](std::size_t b1, std::size_t b2) {
        return (((high << 1 | b1) << 1 | b2) << low_bits) | low;
      };
      if (bit == 0) {
        next[index(0, 0)] += amps.mu * a;
        next[index(1, 1)] += amps.nu * a;
      } else {
        next[index(1, 0)] += a;
      }
    }
    labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                  barred(labels[pos]));
    amplitudes = std::move(next);
    ++n;
  }

  double norm_sq = 0.0;
  for (const auto& a : amplitudes) norm_sq += std::norm(a);
  if (std::abs(norm_sq - 1.0) > 1e-12) {
    throw NumericError("dressed state lost normalization");
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& a : amplitudes) a *= inv;
  return PureState(std::move(labels), std::move(amplitudes));
}

DensityOp build_reduced(const Scenario& sc) {
  const ModeAmplitudes amps = mode_amplitudes(sc.model, sc.omega);
  const PureState base = family_state(sc.family);
  const PureState dressed = dress_state(base, sc.dressed, amps);
  if (sc.traced) {
    // Validate the traced label against the original register.
    bool found = false;
    for (const auto& q : base.labels()) found = found || q == *sc.traced;
    if (!found) {
      throw LabelError("traced party '" + sc.traced->name +
                       "' is not in the register");
    }
  }
  std::vector<QubitLabel> keep;
  for (const auto& q : base.labels()) {
    if (sc.traced && *sc.traced == q) continue;
    keep.push_back(q);
  }
  return partial_trace(dressed, keep);
}

DensityOp build_reduced_from_amps(Family family, const ModeAmplitudes& amps,
                                  const std::optional<QubitLabel>& traced) {
  const PureState dressed =
      dress_state(family_state(family), {kLabelB, kLabelC}, amps);
  std::vector<QubitLabel> keep;
  for (const auto& q : {kLabelA, kLabelB, kLabelC}) {
    if (traced && *traced == q) continue;
    keep.push_back(q);
  }
  return partial_trace(dressed, keep);
}

namespace {

Scenario scenario_from_parsed(const nlohmann::json& j) {
  Scenario sc;
  sc.family = family_from_name(j.at("family").get<std::string>());
  const auto& jm = j.at("model");
  const std::string type = jm.at("type").get<std::string>();
  if (type == "schwarzschild") {
    if (jm.contains("mass") && jm.contains("temperature")) {
      throw ConfigError("give either mass or temperature, not both");
    }
    if (jm.contains("mass")) {
      sc.model = BlackHoleModel::schwarzschild_mass(jm.at("mass").get<double>());
    } else if (jm.contains("temperature")) {
      sc.model = BlackHoleModel::schwarzschild_temperature(
          jm.at("temperature").get<double>());
    } else {
      throw ConfigError("schwarzschild model needs mass or temperature");
    }
  } else if (type == "dilaton") {
    if (!jm.contains("mass")) throw ConfigError("dilaton model needs mass");
    const double mass = jm.at("mass").get<double>();
    if (jm.contains("dilaton") && jm.contains("charge")) {
      throw ConfigError("give either dilaton or charge, not both");
    }
    if (jm.contains("dilaton")) {
      sc.model = BlackHoleModel::dilaton(mass, jm.at("dilaton").get<double>());
    } else if (jm.contains("charge")) {
      sc.model =
          BlackHoleModel::dilaton_charge(mass, jm.at("charge").get<double>());
    } else {
      throw ConfigError("dilaton model needs dilaton or charge");
    }
  } else {
    throw ConfigError("unknown model type '" + type + "'");
  }
  sc.omega = j.at("omega").get<double>();
  if (j.contains("dressed")) {
    sc.dressed.clear();
    for (const auto& d : j.at("dressed"))
      sc.dressed.emplace_back(d.get<std::string>());
  }
  if (j.contains("trace")) {
    sc.traced = QubitLabel{j.at("trace").get<std::string>()};
  }
  return sc;
}

}  // namespace

Scenario scenario_from_json(const std::string& text) {
  try {
    return scenario_from_parsed(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid scenario JSON: ") + e.what());
  }
}

std::string to_json(const Scenario& sc) {
  nlohmann::json jm;
  if (sc.model.is_schwarzschild()) {
    jm["type"] = "schwarzschild";
    if (sc.model.mass()) jm["mass"] = *sc.model.mass();
    if (sc.model.temperature()) jm["temperature"] = *sc.model.temperature();
  } else {
    jm["type"] = "dilaton";
    jm["mass"] = *sc.model.mass();
    jm["dilaton"] = *sc.model.dilaton_parameter();
  }
  nlohmann::json j;
  j["family"] = family_name(sc.family);
  j["model"] = jm;
  j["omega"] = sc.omega;
  nlohmann::json dressed = nlohmann::json::array();
  for (const auto& d : sc.dressed) dressed.push_back(d.name);
  j["dressed"] = dressed;
  if (sc.traced) j["trace"] = sc.traced->name;
  return j.dump();
}

}  // namespace horizonq
