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

#include "horizonq/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "horizonq/analysis.hpp"
#include "horizonq/entanglement.hpp"
#include "horizonq/teleport.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace horizonq::cli {

namespace {

struct ModelFlags {
  std::string type;
  std::optional<double> mass;
  std::optional<double> temperature;
  std::optional<double> dilaton;
  std::optional<double> charge;
};

// Registers the shared model flags on a subcommand.
void add_model_options(CLI::App* cmd, ModelFlags* flags) {
  cmd->add_option("--model", flags->type, "black hole model")
      ->required()
      ->check(CLI::IsMember({"schwarzschild", "dilaton"}));
  cmd->add_option("--mass", flags->mass, "black hole mass (natural units)");
  cmd->add_option("--temp", flags->temperature, "Hawking temperature");
  cmd->add_option("--dilaton", flags->dilaton, "dilaton parameter D");
  cmd->add_option("--charge", flags->charge, "charge Q (D = Q^2 / 2M)");
}

BlackHoleModel build_model(const ModelFlags& f) {
  if (f.type == "schwarzschild") {
    if (f.dilaton || f.charge) {
      throw ConfigError("--dilaton/--charge apply to the dilaton model only");
    }
    if (f.mass && f.temperature) {
      throw ConfigError("give either --mass or --temp, not both");
    }
    if (f.mass) return BlackHoleModel::schwarzschild_mass(*f.mass);
    if (f.temperature) {
      return BlackHoleModel::schwarzschild_temperature(*f.temperature);
    }
    throw ConfigError("schwarzschild model needs --mass or --temp");
  }
  if (f.temperature) {
    throw ConfigError("--temp applies to the schwarzschild model only");
  }
  if (!f.mass) throw ConfigError("dilaton model needs --mass");
  if (f.dilaton && f.charge) {
    throw ConfigError("give either --dilaton or --charge, not both");
  }
  if (f.dilaton) return BlackHoleModel::dilaton(*f.mass, *f.dilaton);
  if (f.charge) return BlackHoleModel::dilaton_charge(*f.mass, *f.charge);
  throw ConfigError("dilaton model needs --dilaton or --charge");
}

std::vector<QubitLabel> parse_label_list(const std::string& csv) {
  std::vector<QubitLabel> labels;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) labels.emplace_back(item);
  }
  return labels;
}

Axis parse_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4) {
    throw ConfigError("axis must be name:start:stop:step, got '" + spec + "'");
  }
  Axis axis;
  axis.name = parts[0];
  try {
    axis.start = std::stod(parts[1]);
    axis.stop = std::stod(parts[2]);
    axis.step = std::stod(parts[3]);
  } catch (const std::exception&) {
    throw ConfigError("axis '" + spec + "' has non-numeric bounds");
  }
  return axis;
}

void write_output(const std::optional<std::string>& path,
                  const std::string& content) {
  if (!path) {
    std::cout << content;
    return;
  }
  std::ofstream os(*path, std::ios::binary);
  if (!os) throw IoError("cannot open " + *path + " for writing");
  os << content;
  os.flush();
  if (!os) throw IoError("write failed for " + *path);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path + " for reading");
  std::ostringstream ss;
  ss << is.rdbuf();
  if (is.bad()) throw IoError("read failed for " + path);
  return ss.str();
}

std::string format17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void apply_thread_env() {
#ifdef _OPENMP
  if (const char* env = std::getenv("HORIZONQ_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
#endif
}

// --- subcommand bodies ---------------------------------------------------

int run_state(const std::string& family, const std::string& format,
              const std::optional<std::string>& out) {
  const PureState s = family_state(family_from_name(family));
  if (format == "json") {
    write_output(out, to_json(s) + "\n");
  } else {
    std::string csv = "index,re,im\n";
    for (std::size_t i = 0; i < s.amplitudes().size(); ++i) {
      csv += std::to_string(i) + "," + format17(s.amplitude(i).real()) + "," +
             format17(s.amplitude(i).imag()) + "\n";
    }
    write_output(out, csv);
  }
  return 0;
}

int run_dress(const std::string& family, const ModelFlags& model_flags,
              double omega, const std::string& dress_list,
              const std::optional<std::string>& trace,
              const std::optional<std::string>& out) {
  Scenario sc;
  sc.family = family_from_name(family);
  sc.model = build_model(model_flags);
  sc.omega = omega;
  sc.dressed = parse_label_list(dress_list);
  if (trace) sc.traced = QubitLabel{*trace};
  const DensityOp rho = build_reduced(sc);
  write_output(out, to_json(rho) + "\n");
  return 0;
}

int run_measure(const std::string& in_path, bool want_concurrence,
                bool want_tangle, bool want_fidelity, bool want_fef,
                std::size_t fef_budget, std::uint64_t seed,
                const KernelTolerances& ktol, const std::string& format,
                const std::optional<std::string>& out) {
  const LoadedState loaded = state_from_json(read_file(in_path));
  const DensityOp rho = loaded.as_density();

  if (!want_concurrence && !want_tangle && !want_fidelity && !want_fef) {
    // Default to everything the state supports.
    want_concurrence = want_fidelity = rho.n_qubits() == 2;
    want_tangle = rho.n_qubits() == 3;
    if (!want_concurrence && !want_tangle) {
      throw ConfigError("no measures apply to a " +
                        std::to_string(rho.n_qubits()) + "-qubit state");
    }
  }

  nlohmann::json result;
  if (want_concurrence || want_fidelity || want_fef) {
    if (rho.n_qubits() != 2) {
      throw ConfigError(
          "concurrence/fidelity need a two-qubit state; trace a party first");
    }
  }
  if (want_concurrence) result["concurrence"] = concurrence(rho, ktol);
  if (want_fidelity) {
    const FidelityRecord fid = teleportation_fidelity(rho, ktol);
    result["n_value"] = fid.n_value;
    result["fidelity"] = fid.fidelity;
    result["useful"] = fid.useful;
  }
  if (want_fef) {
    const double fef = fully_entangled_fraction(rho, fef_budget, seed);
    result["fef"] = fef;
    result["fef_fidelity"] = (2.0 * fef + 1.0) / 3.0;
  }
  if (want_tangle) {
    if (rho.n_qubits() != 3) {
      throw ConfigError("tangle needs a three-qubit state");
    }
    QubitLabel pivot = rho.labels().front();
    for (const auto& q : rho.labels())
      if (q == kLabelA) pivot = q;
    const TangleBreakdown tb = residual_tangle(rho, pivot, ktol);
    result["one_tangle"] = tb.one_tangle;
    result["c2_ab"] = tb.c2_ab;
    result["c2_ac"] = tb.c2_ac;
    result["residual_tangle"] = tb.residual;
  }

  if (format == "json") {
    write_output(out, result.dump(2) + "\n");
  } else {
    std::string csv = "measure,value\n";
    for (const auto& [key, value] : result.items()) {
      csv += key + "," +
             (value.is_boolean() ? std::string(value.get<bool>() ? "1" : "0")
                                 : format17(value.get<double>())) +
             "\n";
    }
    write_output(out, csv);
  }
  return 0;
}

int run_sweep_cmd(const std::string& family, const ModelFlags& model_flags,
                  const std::string& axis1, const std::string& axis2,
                  const std::string& measures_csv,
                  const std::string& dress_list,
                  const std::optional<std::string>& trace, bool serial,
                  const std::string& format,
                  const std::optional<std::string>& out) {
  Scenario sc;
  sc.family = family_from_name(family);
  sc.model = build_model(model_flags);
  sc.dressed = parse_label_list(dress_list);
  if (trace) sc.traced = QubitLabel{*trace};

  SweepGrid grid{parse_axis(axis1), parse_axis(axis2)};
  std::vector<Measure> measures;
  std::stringstream ss(measures_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) measures.push_back(measure_from_name(item));
  }

  const auto records = run_sweep(
      sc, grid, measures, serial ? Execution::Serial : Execution::Parallel);

  if (format == "csv") {
    std::ostringstream os;
    write_csv(os, records, measures);
    write_output(out, os.str());
  } else {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rec : records) {
      nlohmann::json j;
      j["axis1"] = rec.axis1;
      j["axis2"] = rec.axis2;
      j["mu"] = rec.mu;
      j["nu"] = rec.nu;
      j["unphysical"] = rec.unphysical_regime;
      for (const auto& [m, v] : rec.values) j[measure_name(m)] = v;
      arr.push_back(j);
    }
    write_output(out, arr.dump(2) + "\n");
  }
  return 0;
}

int run_reproduce(int figure, const std::string& outdir) {
  const auto written = reproduce_figure(figure, outdir);
  for (const auto& path : written) std::cout << path.string() << "\n";
  return 0;
}

int run_crosscheck(const std::string& family, const ModelFlags& model_flags,
                   double omega, const std::optional<std::string>& out) {
  const BlackHoleModel model = build_model(model_flags);
  const ModeAmplitudes amps = mode_amplitudes(model, omega);
  const auto reports =
      compare_family_references(family_from_name(family), amps.mu, amps.nu);

  nlohmann::json j;
  j["mu"] = amps.mu;
  j["nu"] = amps.nu;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(nlohmann::json::parse(to_json(r)));
  j["reports"] = arr;
  write_output(out, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int dispatch(std::vector<std::string> args) {
  apply_thread_env();

  CLI::App app{"entanglement and teleportation measures for tripartite "
               "states dressed by black-hole horizon modes"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  app.add_option("--seed", seed, "seed for sampling oracles")
      ->capture_default_str();
  KernelTolerances ktol;
  app.add_option("--herm-tol", ktol.hermiticity,
                 "Hermiticity tolerance of the eigensolver")
      ->capture_default_str();
  app.add_option("--psd-tol", ktol.psd_floor,
                 "lowest tolerated eigenvalue before a matrix counts as "
                 "non-positive")
      ->capture_default_str();

  // state
  auto* state_cmd = app.add_subcommand("state", "print a channel state");
  std::string state_family;
  std::string state_format = "json";
  std::optional<std::string> state_out;
  state_cmd->add_option("--family", state_family)->required()
      ->check(CLI::IsMember({"ghz", "w", "w1"}));
  state_cmd->add_option("--format", state_format)
      ->check(CLI::IsMember({"json", "csv"}));
  state_cmd->add_option("--out", state_out, "output path (default stdout)");

  // dress
  auto* dress_cmd =
      app.add_subcommand("dress", "dress parties near the horizon and reduce");
  std::string dress_family;
  ModelFlags dress_model;
  double dress_omega = 0.0;
  std::string dress_parties = "B,C";
  std::optional<std::string> dress_trace;
  std::optional<std::string> dress_out;
  dress_cmd->add_option("--family", dress_family)->required()
      ->check(CLI::IsMember({"ghz", "w", "w1"}));
  add_model_options(dress_cmd, &dress_model);
  dress_cmd->add_option("--omega", dress_omega, "mode frequency")->required();
  dress_cmd->add_option("--dress", dress_parties,
                        "comma list of dressed parties")
      ->capture_default_str();
  dress_cmd->add_option("--trace-qubit", dress_trace)
      ->check(CLI::IsMember({"A", "B", "C"}));
  dress_cmd->add_option("--out", dress_out, "output path")->required();

  // measure
  auto* measure_cmd = app.add_subcommand("measure", "score a stored state");
  std::string measure_in;
  bool m_conc = false, m_tangle = false, m_fid = false, m_fef = false;
  std::size_t fef_budget = 2000;
  std::string measure_format = "json";
  std::optional<std::string> measure_out;
  measure_cmd->add_option("--in", measure_in, "state JSON file")->required();
  measure_cmd->add_flag("--concurrence", m_conc);
  measure_cmd->add_flag("--tangle", m_tangle);
  measure_cmd->add_flag("--fidelity", m_fid);
  measure_cmd->add_flag("--fef", m_fef,
                        "also run the fully-entangled-fraction oracle");
  measure_cmd->add_option("--budget", fef_budget, "oracle sample budget")
      ->capture_default_str();
  measure_cmd->add_option("--format", measure_format)
      ->check(CLI::IsMember({"json", "csv"}));
  measure_cmd->add_option("--out", measure_out);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate measures on a grid");
  std::string sweep_family;
  ModelFlags sweep_model;
  std::string sweep_axis1, sweep_axis2, sweep_measures;
  std::string sweep_parties = "B,C";
  std::optional<std::string> sweep_trace;
  bool sweep_serial = false;
  std::string sweep_format = "csv";
  std::optional<std::string> sweep_out;
  sweep_cmd->add_option("--family", sweep_family)->required()
      ->check(CLI::IsMember({"ghz", "w", "w1"}));
  add_model_options(sweep_cmd, &sweep_model);
  sweep_cmd->add_option("--axis1", sweep_axis1, "name:start:stop:step")
      ->required();
  sweep_cmd->add_option("--axis2", sweep_axis2, "name:start:stop:step")
      ->required();
  sweep_cmd->add_option("--measures", sweep_measures, "comma list")->required();
  sweep_cmd->add_option("--dress", sweep_parties)->capture_default_str();
  sweep_cmd->add_option("--trace-qubit", sweep_trace)
      ->check(CLI::IsMember({"A", "B", "C"}));
  sweep_cmd->add_flag("--serial", sweep_serial,
                      "use the serial reference evaluator");
  sweep_cmd->add_option("--format", sweep_format)
      ->check(CLI::IsMember({"json", "csv"}));
  sweep_cmd->add_option("--out", sweep_out, "output path")->required();

  // reproduce
  auto* repro_cmd =
      app.add_subcommand("reproduce", "emit the data set of one figure");
  int figure = 0;
  std::string outdir;
  repro_cmd->add_option("--figure", figure)->required();
  repro_cmd->add_option("--outdir", outdir)->required();

  // crosscheck
  auto* cross_cmd = app.add_subcommand(
      "crosscheck", "diff the pipeline against published reference matrices");
  std::string cross_family;
  ModelFlags cross_model;
  double cross_omega = 0.0;
  std::optional<std::string> cross_out;
  cross_cmd->add_option("--family", cross_family)->required()
      ->check(CLI::IsMember({"ghz", "w", "w1"}));
  add_model_options(cross_cmd, &cross_model);
  cross_cmd->add_option("--omega", cross_omega)->required();
  cross_cmd->add_option("--out", cross_out);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cout, std::cerr);
    return 2;
  }

  try {
    if (state_cmd->parsed()) {
      return run_state(state_family, state_format, state_out);
    }
    if (dress_cmd->parsed()) {
      return run_dress(dress_family, dress_model, dress_omega, dress_parties,
                       dress_trace, dress_out);
    }
    if (measure_cmd->parsed()) {
      return run_measure(measure_in, m_conc, m_tangle, m_fid, m_fef,
                         fef_budget, seed, ktol, measure_format, measure_out);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep_cmd(sweep_family, sweep_model, sweep_axis1, sweep_axis2,
                           sweep_measures, sweep_parties, sweep_trace,
                           sweep_serial, sweep_format, sweep_out);
    }
    if (repro_cmd->parsed()) {
      return run_reproduce(figure, outdir);
    }
    if (cross_cmd->parsed()) {
      return run_crosscheck(cross_family, cross_model, cross_omega, cross_out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.category()) {
      case Error::Category::Usage: return 2;
      case Error::Category::Numeric: return 3;
      case Error::Category::Io: return 4;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace horizonq::cli
