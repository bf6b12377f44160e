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

#include "horizonq/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "horizonq/entanglement.hpp"
#include "horizonq/teleport.hpp"

namespace horizonq {

namespace {

constexpr std::size_t kMaxGridPoints = 1000000;

std::string format9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

bool valid_axis_name(const std::string& name) {
  return name == "omega" || name == "temperature" || name == "dilaton" ||
         name == "charge" || name == "mass";
}

Scenario bind_axis(Scenario sc, const std::string& name, double value) {
  if (name == "omega") {
    sc.omega = value;
  } else if (name == "temperature") {
    if (!sc.model.is_schwarzschild()) {
      throw ConfigError("temperature axis requires a Schwarzschild model");
    }
    sc.model = BlackHoleModel::schwarzschild_temperature(value);
  } else if (name == "mass") {
    if (sc.model.is_schwarzschild()) {
      sc.model = BlackHoleModel::schwarzschild_mass(value);
    } else {
      sc.model =
          BlackHoleModel::dilaton(value, *sc.model.dilaton_parameter());
    }
  } else if (name == "dilaton") {
    if (!sc.model.is_dilaton()) {
      throw ConfigError("dilaton axis requires a dilaton model");
    }
    sc.model = BlackHoleModel::dilaton(*sc.model.mass(), value);
  } else if (name == "charge") {
    if (!sc.model.is_dilaton()) {
      throw ConfigError("charge axis requires a dilaton model");
    }
    sc.model = BlackHoleModel::dilaton_charge(*sc.model.mass(), value);
  } else {
    throw ConfigError("unknown sweep axis '" + name + "'");
  }
  return sc;
}

MeasureRecord evaluate_point(const Scenario& base, const SweepGrid& grid,
                             std::size_t i, std::size_t j,
                             const std::vector<Measure>& measures,
                             bool needs_pair, bool needs_triple) {
  const double v1 = grid.axis1.value(i);
  const double v2 = grid.axis2.value(j);
  const Scenario sc =
      bind_axis(bind_axis(base, grid.axis1.name, v1), grid.axis2.name, v2);
  const ModeAmplitudes amps = mode_amplitudes(sc.model, sc.omega);

  MeasureRecord rec;
  rec.axis1 = v1;
  rec.axis2 = v2;
  rec.mu = amps.mu;
  rec.nu = amps.nu;
  rec.unphysical_regime = sc.model.unphysical_regime();

  const PureState channel = family_state(sc.family);
  const PureState dressed = dress_state(channel, sc.dressed, amps);
  const std::vector<QubitLabel>& parties = channel.labels();

  if (needs_triple) {
    const DensityOp rho3 = partial_trace(dressed, parties);
    for (Measure m : measures) {
      if (m == Measure::OneTangle) {
        rec.values[m] = one_tangle(rho3, parties.front());
      } else if (m == Measure::ResidualTangle) {
        rec.values[m] = residual_tangle(rho3, parties.front()).residual;
      }
    }
  }
  if (needs_pair) {
    std::vector<QubitLabel> keep;
    for (const auto& q : parties)
      if (q != *sc.traced) keep.push_back(q);
    bool have_fidelity = false;
    FidelityRecord fid{};
    for (Measure m : measures) {
      switch (m) {
        case Measure::Concurrence:
          // The factor route keeps full accuracy in the saturated corners
          // of the grids where the pair state is nearly singular.
          rec.values[m] =
              concurrence_from_factor(reduced_gram_factor(dressed, keep));
          break;
        case Measure::NValue:
        case Measure::Fidelity:
        case Measure::Useful:
          if (!have_fidelity) {
            fid = teleportation_fidelity(partial_trace(dressed, keep));
            have_fidelity = true;
          }
          rec.values[m] = m == Measure::NValue    ? fid.n_value
                          : m == Measure::Fidelity ? fid.fidelity
                                                    : (fid.useful ? 1.0 : 0.0);
          break;
        default:
          break;
      }
    }
  }
  return rec;
}

}  // namespace

std::string measure_name(Measure m) {
  switch (m) {
    case Measure::Concurrence: return "concurrence";
    case Measure::OneTangle: return "one_tangle";
    case Measure::ResidualTangle: return "residual_tangle";
    case Measure::NValue: return "n_value";
    case Measure::Fidelity: return "fidelity";
    case Measure::Useful: return "useful";
  }
  return "?";
}

Measure measure_from_name(const std::string& name) {
  for (Measure m : {Measure::Concurrence, Measure::OneTangle,
                    Measure::ResidualTangle, Measure::NValue,
                    Measure::Fidelity, Measure::Useful}) {
    if (measure_name(m) == name) return m;
  }
  throw ConfigError("unknown measure '" + name + "'");
}

std::size_t Axis::points() const {
  if (start == stop) return 1;
  const double count = std::floor((stop - start) / step + 1e-9) + 1.0;
  if (!(count >= 1.0) || count > static_cast<double>(kMaxGridPoints)) {
    throw ConfigError("axis '" + name + "' exceeds 10^6 points");
  }
  return static_cast<std::size_t>(count);
}

Axis Axis::with_points(std::string name, double start, double stop,
                       std::size_t count) {
  Axis a;
  a.name = std::move(name);
  a.start = start;
  a.stop = stop;
  a.step = count > 1 ? (stop - start) / static_cast<double>(count - 1) : 1.0;
  return a;
}

void SweepGrid::validate() const {
  for (const Axis* a : {&axis1, &axis2}) {
    if (!valid_axis_name(a->name)) {
      throw ConfigError("unknown sweep axis '" + a->name + "'");
    }
    if (!(a->step > 0.0) || !std::isfinite(a->step)) {
      throw ConfigError("axis step must be positive");
    }
    if (!(a->start <= a->stop)) {
      throw ConfigError("axis start must not exceed stop");
    }
  }
  if (axis1.name == axis2.name) {
    throw ConfigError("sweep axes must differ");
  }
  if (total_points() > kMaxGridPoints) {
    throw ConfigError("grid exceeds 10^6 points");
  }
}

std::vector<MeasureRecord> run_sweep(const Scenario& sc, const SweepGrid& grid,
                                     const std::vector<Measure>& measures,
                                     Execution exec) {
  grid.validate();
  if (measures.empty()) throw ConfigError("no measures requested");

  bool needs_pair = false;
  bool needs_triple = false;
  for (Measure m : measures) {
    needs_pair |= m == Measure::Concurrence || m == Measure::NValue ||
                  m == Measure::Fidelity || m == Measure::Useful;
    needs_triple |= m == Measure::OneTangle || m == Measure::ResidualTangle;
  }
  if (needs_pair && !sc.traced) {
    throw ConfigError(
        "bipartite measures need a traced party (set trace/traced)");
  }
  // Surface axis/model mismatches before entering the parallel region.
  bind_axis(bind_axis(sc, grid.axis1.name, grid.axis1.start), grid.axis2.name,
            grid.axis2.start);

  const std::size_t n2 = grid.axis2.points();
  const std::size_t total = grid.total_points();
  std::vector<MeasureRecord> out(total);

  std::atomic<bool> failed{false};
  std::exception_ptr error;

  const auto body = [&](std::size_t idx) {
    if (failed.load(std::memory_order_relaxed)) return;
    try {
      out[idx] = evaluate_point(sc, grid, idx / n2, idx % n2, measures,
                                needs_pair, needs_triple);
    } catch (...) {
#pragma omp critical(horizonq_sweep_error)
      {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };

  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
      body(static_cast<std::size_t>(idx));
    }
  } else {
    for (std::size_t idx = 0; idx < total; ++idx) body(idx);
  }

  if (failed.load()) std::rethrow_exception(error);
  return out;
}

void write_csv(std::ostream& os, const std::vector<MeasureRecord>& records,
               const std::vector<Measure>& measures) {
  os << "axis1,axis2,mu,nu,measure,value,unphysical\n";
  for (const auto& rec : records) {
    for (Measure m : measures) {
      const auto it = rec.values.find(m);
      if (it == rec.values.end()) continue;
      os << format9(rec.axis1) << ',' << format9(rec.axis2) << ','
         << format9(rec.mu) << ',' << format9(rec.nu) << ','
         << measure_name(m) << ',' << format9(it->second) << ','
         << (rec.unphysical_regime ? '1' : '0') << '\n';
    }
  }
}

double closed_form_fidelity_w(double mu, double nu) {
  if (std::abs(mu * mu + nu * nu - 1.0) > 1e-9) {
    throw ContractError("closed_form_fidelity_w needs mu^2 + nu^2 = 1");
  }
  return 0.5 + (std::pow(mu, 4) + nu * nu) / 18.0 +
         2.0 * (std::pow(mu, 3) + mu * nu * nu) / 9.0;
}

double closed_form_concurrence_w(double mu, double nu) {
  const double s = mu * mu + nu * nu;
  if (std::abs(s - 1.0) > 1e-9) {
    throw ContractError("closed_form_concurrence_w needs mu^2 + nu^2 = 1");
  }
  const double nu4 = std::pow(nu, 4);
  const double radical = 2.0 * std::sqrt(s * (nu4 + s));
  const double f1 = (nu4 + 2.0 * s + radical) * s * mu * mu / 9.0;
  const double f2 = (nu4 + 2.0 * s - radical) * s * mu * mu / 9.0;
  const double f34 = mu * mu * nu * nu * s / 9.0;
  const double c = std::sqrt(std::max(f1, 0.0)) -
                   std::sqrt(std::max(f2, 0.0)) - 2.0 * std::sqrt(f34);
  return std::max(0.0, c);
}

double closed_form_tangle_ghz(double mu, double nu) {
  return mu * mu + nu * nu;
}

// --- reference matrices --------------------------------------------------

namespace {

DenseMatrix ref_ghz_tripartite(double mu, double nu) {
  DenseMatrix m(8, 8);
  m(0, 0) = std::pow(mu, 4);
  m(1, 1) = mu * mu * nu * nu;
  m(2, 2) = mu * mu * nu * nu;
  m(4, 4) = std::pow(nu, 4);
  m(7, 7) = 1.0;
  m(0, 7) = mu * mu;
  m(7, 0) = mu * mu;
  return 0.5 * m;
}

DenseMatrix ref_ghz_pair_bc(double mu, double nu) {
  DenseMatrix m(4, 4);
  m(0, 0) = std::pow(mu, 4);
  m(1, 1) = mu * mu * nu * nu;
  m(2, 2) = mu * mu * nu * nu;
  m(3, 3) = std::pow(nu, 4);
  return 0.5 * m;
}

DenseMatrix ref_ghz_pair_ac(double mu, double nu) {
  DenseMatrix m(4, 4);
  m(0, 0) = std::pow(mu, 4) + mu * mu * nu * nu;
  m(1, 1) = mu * mu * nu * nu;
  m(2, 2) = std::pow(nu, 4);
  m(3, 3) = 1.0;
  return 0.5 * m;
}

DenseMatrix ref_w_tripartite(double mu, double nu) {
  DenseMatrix m(8, 8);
  const double mu2 = mu * mu, mu3 = std::pow(mu, 3), mu4 = std::pow(mu, 4);
  const double nu2 = nu * nu;
  m(1, 1) = mu2; m(1, 2) = mu2; m(1, 3) = mu3;
  m(2, 1) = mu2; m(2, 2) = mu2; m(2, 3) = mu3;
  m(3, 1) = mu3; m(3, 2) = mu3; m(3, 3) = mu4;
  m(4, 4) = 2.0 * nu2;
  m(4, 5) = mu * nu2; m(4, 6) = mu * nu2;
  m(5, 4) = mu * nu2; m(6, 4) = mu * nu2;
  m(5, 5) = mu2 * nu2; m(6, 6) = mu2 * nu2;
  m(7, 7) = nu2 * nu2;
  return (1.0 / 3.0) * m;
}

DenseMatrix ref_w_pair_ac(double mu, double nu) {
  DenseMatrix m(4, 4);
  const double mu2 = mu * mu, nu2 = nu * nu;
  m(0, 0) = mu2;
  m(1, 1) = mu2 + nu2 + nu2 * nu2;  // printed entry; trace deviates from 1
  m(2, 2) = std::pow(mu, 4) + mu2 * nu2;
  m(3, 3) = mu2 * nu2 + nu2 * nu2;
  m(1, 2) = std::pow(mu, 3) + mu * nu2;
  m(2, 1) = m(1, 2);
  return (1.0 / 3.0) * m;
}

DenseMatrix ref_w1_tripartite(double mu, double nu) {
  DenseMatrix m(8, 8);
  const double r2 = std::sqrt(2.0);
  const double mu2 = mu * mu, mu3 = std::pow(mu, 3), mu4 = std::pow(mu, 4);
  const double nu2 = nu * nu;
  m(1, 1) = 2.0 * mu2; m(1, 2) = r2 * mu2; m(1, 3) = r2 * mu3;
  m(2, 1) = r2 * mu2;  m(2, 2) = mu2;      // printed (2,3) is zero
  m(3, 1) = r2 * mu3;  m(3, 2) = mu3;      m(3, 3) = mu4;
  m(4, 4) = 3.0 * nu2;
  m(4, 5) = mu * nu2;      m(4, 6) = r2 * mu * nu2;
  m(5, 4) = 2.0 * mu * nu2;  // printed transpose of (4,5) differs
  m(6, 4) = r2 * mu * nu2;
  m(5, 5) = mu2 * nu2; m(6, 6) = mu2 * nu2;
  m(7, 7) = nu2 * nu2;
  return 0.25 * m;
}

DenseMatrix ref_w1_pair_ac(double mu, double nu) {
  DenseMatrix m(4, 4);
  const double r2 = std::sqrt(2.0);
  const double mu2 = mu * mu, nu2 = nu * nu;
  m(0, 0) = mu2;
  m(1, 1) = 2.0 * mu2 + 3.0 * nu2;
  m(2, 2) = std::pow(mu, 4) + mu2 * nu2;
  m(3, 3) = mu2 * nu2 + nu2 * nu2;
  m(1, 2) = r2 * std::pow(mu, 3) + r2 * mu * nu2;
  m(2, 1) = m(1, 2);
  return 0.25 * m;
}

struct ReferenceInfo {
  Family family;
  bool tripartite;
  std::optional<QubitLabel> traced;
  DenseMatrix (*build)(double, double);
};

ReferenceInfo reference_info(ReferenceMatrix id) {
  switch (id) {
    case ReferenceMatrix::GhzTripartite:
      return {Family::Ghz, true, std::nullopt, &ref_ghz_tripartite};
    case ReferenceMatrix::GhzPairBC:
      return {Family::Ghz, false, kLabelA, &ref_ghz_pair_bc};
    case ReferenceMatrix::GhzPairAC:
      return {Family::Ghz, false, kLabelB, &ref_ghz_pair_ac};
    case ReferenceMatrix::WTripartite:
      return {Family::W, true, std::nullopt, &ref_w_tripartite};
    case ReferenceMatrix::WPairAC:
      return {Family::W, false, kLabelB, &ref_w_pair_ac};
    case ReferenceMatrix::W1Tripartite:
      return {Family::W1, true, std::nullopt, &ref_w1_tripartite};
    case ReferenceMatrix::W1PairAC:
      return {Family::W1, false, kLabelB, &ref_w1_pair_ac};
  }
  throw ConfigError("unknown reference matrix");
}

}  // namespace

std::string reference_matrix_name(ReferenceMatrix id) {
  switch (id) {
    case ReferenceMatrix::GhzTripartite: return "ghz_tripartite";
    case ReferenceMatrix::GhzPairBC: return "ghz_pair_bc";
    case ReferenceMatrix::GhzPairAC: return "ghz_pair_ac";
    case ReferenceMatrix::WTripartite: return "w_tripartite";
    case ReferenceMatrix::WPairAC: return "w_pair_ac";
    case ReferenceMatrix::W1Tripartite: return "w1_tripartite";
    case ReferenceMatrix::W1PairAC: return "w1_pair_ac";
  }
  return "?";
}

DiscrepancyReport compare_reference_matrix(ReferenceMatrix id, double mu,
                                           double nu) {
  if (std::abs(mu * mu + nu * nu - 1.0) > 1e-9) {
    throw ContractError("compare_reference_matrix needs mu^2 + nu^2 = 1");
  }
  const ReferenceInfo info = reference_info(id);
  const ModeAmplitudes amps{mu, nu};
  const DensityOp pipeline =
      build_reduced_from_amps(info.family, amps, info.traced);
  const DenseMatrix lhs = info.tripartite ? permute_to_weight_order(pipeline)
                                          : pipeline.matrix();
  const DenseMatrix ref = info.build(mu, nu);

  DiscrepancyReport report;
  report.target = reference_matrix_name(id);
  report.max_abs_entry_diff = max_abs_diff(lhs, ref);
  report.trace_of_reference = trace(ref).real();
  report.symmetric = true;
  for (std::size_t i = 0; i < ref.rows() && report.symmetric; ++i)
    for (std::size_t j = i + 1; j < ref.cols(); ++j)
      if (std::abs(ref(i, j) - ref(j, i)) > 1e-12) {
        report.symmetric = false;
        break;
      }

  std::ostringstream notes;
  if (report.max_abs_entry_diff <= 1e-12) {
    notes << "reference matches the pipeline";
  } else {
    notes << "max entry deviation " << format9(report.max_abs_entry_diff);
  }
  if (std::abs(report.trace_of_reference - 1.0) > 1e-12) {
    notes << "; reference trace " << format9(report.trace_of_reference)
          << " differs from 1";
  }
  if (!report.symmetric) {
    notes << "; reference matrix is asymmetric";
  }
  report.notes = notes.str();
  return report;
}

std::vector<DiscrepancyReport> compare_family_references(Family family,
                                                         double mu,
                                                         double nu) {
  std::vector<ReferenceMatrix> ids;
  switch (family) {
    case Family::Ghz:
      ids = {ReferenceMatrix::GhzTripartite, ReferenceMatrix::GhzPairBC,
             ReferenceMatrix::GhzPairAC};
      break;
    case Family::W:
      ids = {ReferenceMatrix::WTripartite, ReferenceMatrix::WPairAC};
      break;
    case Family::W1:
      ids = {ReferenceMatrix::W1Tripartite, ReferenceMatrix::W1PairAC};
      break;
  }
  std::vector<DiscrepancyReport> reports;
  reports.reserve(ids.size());
  for (ReferenceMatrix id : ids)
    reports.push_back(compare_reference_matrix(id, mu, nu));
  return reports;
}

std::string to_json(const DiscrepancyReport& report) {
  nlohmann::json j;
  j["target"] = report.target;
  j["max_abs_entry_diff"] = report.max_abs_entry_diff;
  j["trace_of_reference"] = report.trace_of_reference;
  j["symmetric"] = report.symmetric;
  j["notes"] = report.notes;
  return j.dump();
}

// --- figure reproduction -------------------------------------------------

namespace {

struct FigureConfig {
  Family family;
  bool dilaton_model;
  Measure measure;
  Axis axis1;
  Axis axis2;
  std::optional<QubitLabel> traced;
  std::string filename;
};

std::vector<FigureConfig> figure_configs(int id) {
  constexpr std::size_t kPoints = 200;
  const auto ax = [](const char* name, double a, double b) {
    return Axis::with_points(name, a, b, kPoints);
  };
  switch (id) {
    case 2:
      return {{Family::Ghz, false, Measure::ResidualTangle,
               ax("omega", 0.0, 900.0), ax("temperature", 0.0, 10.0),
               std::nullopt, "fig2_residual_tangle_schwarzschild.csv"},
              {Family::Ghz, true, Measure::ResidualTangle,
               ax("omega", 0.0, 50.0), ax("charge", 0.0, 20.0), std::nullopt,
               "fig2_residual_tangle_dilaton.csv"}};
    case 3:
      return {{Family::W, false, Measure::Concurrence, ax("omega", 0.0, 1.0),
               ax("temperature", 1.0, 10.0), kLabelB, "fig3_concurrence.csv"}};
    case 4:
      return {{Family::W, true, Measure::Concurrence, ax("omega", 0.0, 1.0),
               ax("dilaton", 1.0, 10.0), kLabelB, "fig4_concurrence.csv"}};
    case 5:
      return {{Family::W, false, Measure::Fidelity, ax("omega", 0.0, 1.0),
               ax("temperature", 1.0, 10.0), kLabelB, "fig5_fidelity.csv"}};
    case 6:
      return {{Family::W, true, Measure::Fidelity, ax("omega", 0.0, 1.0),
               ax("dilaton", 1.0, 10.0), kLabelB, "fig6_fidelity.csv"}};
    case 7:
      return {{Family::W1, false, Measure::Concurrence, ax("omega", 0.0, 1.0),
               ax("temperature", 1.0, 5.0), kLabelB, "fig7_concurrence.csv"}};
    case 8:
      return {{Family::W1, true, Measure::Concurrence, ax("omega", 0.0, 1.0),
               ax("dilaton", 0.1, 10.0), kLabelB, "fig8_concurrence.csv"}};
    case 9:
      return {{Family::W1, false, Measure::Fidelity, ax("omega", 0.0, 1.0),
               ax("temperature", 1.0, 5.0), kLabelB, "fig9_fidelity.csv"}};
    case 10:
      return {{Family::W1, true, Measure::Fidelity, ax("omega", 0.0, 1.0),
               ax("dilaton", 0.1, 10.0), kLabelB, "fig10_fidelity.csv"}};
    default:
      throw ConfigError("figure id must be between 2 and 10");
  }
}

}  // namespace

std::vector<std::filesystem::path> reproduce_figure(
    int id, const std::filesystem::path& outdir) {
  const auto configs = figure_configs(id);
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + outdir.string() + ": " +
                  ec.message());
  }

  std::vector<std::filesystem::path> written;
  for (const auto& cfg : configs) {
    Scenario sc;
    sc.family = cfg.family;
    sc.model = cfg.dilaton_model
                   ? BlackHoleModel::dilaton(1.0, 0.0)  // M = 1 by default
                   : BlackHoleModel::schwarzschild_temperature(1.0);
    sc.traced = cfg.traced;
    SweepGrid grid{cfg.axis1, cfg.axis2};
    const auto records = run_sweep(sc, grid, {cfg.measure});

    const std::filesystem::path path = outdir / cfg.filename;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    write_csv(os, records, {cfg.measure});
    os.flush();
    if (!os) throw IoError("write failed for " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace horizonq
