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

#include "horizonq/qstate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>

#include <json.hpp>

namespace horizonq {

namespace {

void check_unique_labels(const std::vector<QubitLabel>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) {
        throw LabelError("duplicate qubit label '" + labels[i].name + "'");
      }
}

std::size_t position_in(const std::vector<QubitLabel>& labels,
                        const QubitLabel& q) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == q) return i;
  throw LabelError("unknown qubit label '" + q.name + "'");
}

// Sorted positions of the kept labels; throws on unknown/duplicate labels.
std::vector<std::size_t> keep_positions(const std::vector<QubitLabel>& labels,
                                        const std::vector<QubitLabel>& keep) {
  if (keep.empty()) throw LabelError("partial_trace: keep set is empty");
  check_unique_labels(keep);
  std::vector<std::size_t> pos;
  pos.reserve(keep.size());
  for (const auto& q : keep) pos.push_back(position_in(labels, q));
  std::sort(pos.begin(), pos.end());
  return pos;
}

// Assembles a full basis index from kept and traced sub-indices. Positions
// count from the left (position 0 = most significant bit).
std::size_t compose_index(std::size_t n, const std::vector<std::size_t>& kept,
                          const std::vector<std::size_t>& traced,
                          std::size_t kept_bits, std::size_t traced_bits) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const std::size_t bit = (kept_bits >> (kept.size() - 1 - i)) & 1u;
    idx |= bit << (n - 1 - kept[i]);
  }
  for (std::size_t i = 0; i < traced.size(); ++i) {
    const std::size_t bit = (traced_bits >> (traced.size() - 1 - i)) & 1u;
    idx |= bit << (n - 1 - traced[i]);
  }
  return idx;
}

std::string format17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

QubitLabel barred(const QubitLabel& q) { return QubitLabel{q.name + "bar"}; }

PureState::PureState(std::vector<QubitLabel> labels,
                     std::vector<complexd> amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
  if (labels_.empty()) throw ContractError("pure state needs >= 1 qubit");
  check_unique_labels(labels_);
  if (amplitudes_.size() != (std::size_t{1} << labels_.size())) {
    throw ShapeError("amplitude count is not 2^n");
  }
  for (const auto& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw ContractError("amplitude is not finite");
    }
  }
  if (std::abs(norm() - 1.0) > kNormTol) {
    throw ContractError("pure state is not normalized");
  }
}

double PureState::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

std::size_t PureState::position_of(const QubitLabel& q) const {
  return position_in(labels_, q);
}

DensityOp::DensityOp(std::vector<QubitLabel> labels, DenseMatrix matrix)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
  check_unique_labels(labels_);
  const std::size_t dim = std::size_t{1} << labels_.size();
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw ShapeError("density matrix shape does not match label count");
  }
  if (!is_hermitian(matrix_, kHermitianTol)) {
    throw ContractError("density matrix is not Hermitian");
  }
  if (std::abs(trace(matrix_) - complexd{1.0, 0.0}) > kTraceTol) {
    throw ContractError("density matrix trace is not 1");
  }
}

DensityOp DensityOp::from_matrix(std::vector<QubitLabel> labels,
                                 DenseMatrix matrix) {
  DensityOp rho(std::move(labels), std::move(matrix));
  if (rho.min_eigenvalue() < kPsdFloor) {
    throw NumericError("density matrix is not positive semidefinite");
  }
  return rho;
}

std::size_t DensityOp::position_of(const QubitLabel& q) const {
  return position_in(labels_, q);
}

double DensityOp::min_eigenvalue(const KernelTolerances& tol) const {
  const EigenResult eig = hermitian_eig(matrix_, tol);
  return eig.eigenvalues.back();
}

PureState make_ghz() {
  std::vector<complexd> amp(8, 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  amp[0b000] = r;
  amp[0b111] = r;
  return PureState({kLabelA, kLabelB, kLabelC}, std::move(amp));
}

PureState make_w() {
  std::vector<complexd> amp(8, 0.0);
  const double r = 1.0 / std::sqrt(3.0);
  amp[0b100] = r;
  amp[0b010] = r;
  amp[0b001] = r;
  return PureState({kLabelA, kLabelB, kLabelC}, std::move(amp));
}

PureState make_w1() {
  std::vector<complexd> amp(8, 0.0);
  amp[0b100] = 0.5;
  amp[0b010] = 0.5;
  amp[0b001] = std::sqrt(2.0) / 2.0;
  return PureState({kLabelA, kLabelB, kLabelC}, std::move(amp));
}

DensityOp to_density(const PureState& s) {
  const std::size_t dim = s.amplitudes().size();
  DenseMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const complexd ai = s.amplitude(i);
    if (ai == complexd{}) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      m(i, j) = ai * std::conj(s.amplitude(j));
    }
  }
  return DensityOp(s.labels(), std::move(m));
}

DensityOp partial_trace(const DensityOp& rho,
                        const std::vector<QubitLabel>& keep) {
  const std::size_t n = rho.n_qubits();
  const auto kept = keep_positions(rho.labels(), keep);
  std::vector<std::size_t> traced;
  for (std::size_t p = 0; p < n; ++p)
    if (std::find(kept.begin(), kept.end(), p) == kept.end())
      traced.push_back(p);

  const std::size_t kdim = std::size_t{1} << kept.size();
  const std::size_t tdim = std::size_t{1} << traced.size();
  DenseMatrix out(kdim, kdim);
  for (std::size_t i = 0; i < kdim; ++i)
    for (std::size_t j = 0; j < kdim; ++j) {
      complexd sum{};
      for (std::size_t e = 0; e < tdim; ++e) {
        const std::size_t fi = compose_index(n, kept, traced, i, e);
        const std::size_t fj = compose_index(n, kept, traced, j, e);
        sum += rho.matrix()(fi, fj);
      }
      out(i, j) = sum;
    }

  std::vector<QubitLabel> out_labels;
  out_labels.reserve(kept.size());
  for (std::size_t p : kept) out_labels.push_back(rho.labels()[p]);
  return DensityOp(std::move(out_labels), std::move(out));
}

DensityOp partial_trace(const PureState& s,
                        const std::vector<QubitLabel>& keep) {
  const std::size_t n = s.n_qubits();
  const auto kept = keep_positions(s.labels(), keep);
  std::vector<std::size_t> traced;
  for (std::size_t p = 0; p < n; ++p)
    if (std::find(kept.begin(), kept.end(), p) == kept.end())
      traced.push_back(p);

  const std::size_t kdim = std::size_t{1} << kept.size();
  const std::size_t tdim = std::size_t{1} << traced.size();
  DenseMatrix out(kdim, kdim);
  // rho[i, j] = sum_e psi(i, e) conj(psi(j, e)); accumulate one environment
  // column at a time so the cost is 2^n * 2^k, not 4^n.
  std::vector<complexd> column(kdim);
  for (std::size_t e = 0; e < tdim; ++e) {
    for (std::size_t i = 0; i < kdim; ++i) {
      column[i] = s.amplitude(compose_index(n, kept, traced, i, e));
    }
    for (std::size_t i = 0; i < kdim; ++i) {
      if (column[i] == complexd{}) continue;
      for (std::size_t j = 0; j < kdim; ++j) {
        out(i, j) += column[i] * std::conj(column[j]);
      }
    }
  }

  std::vector<QubitLabel> out_labels;
  out_labels.reserve(kept.size());
  for (std::size_t p : kept) out_labels.push_back(s.labels()[p]);
  return DensityOp(std::move(out_labels), std::move(out));
}

DenseMatrix reduced_gram_factor(const PureState& s,
                                const std::vector<QubitLabel>& keep) {
  const std::size_t n = s.n_qubits();
  const auto kept = keep_positions(s.labels(), keep);
  std::vector<std::size_t> traced;
  for (std::size_t p = 0; p < n; ++p)
    if (std::find(kept.begin(), kept.end(), p) == kept.end())
      traced.push_back(p);

  const std::size_t kdim = std::size_t{1} << kept.size();
  const std::size_t tdim = std::size_t{1} << traced.size();
  DenseMatrix factor(kdim, tdim);
  for (std::size_t e = 0; e < tdim; ++e)
    for (std::size_t i = 0; i < kdim; ++i)
      factor(i, e) = s.amplitude(compose_index(n, kept, traced, i, e));
  return factor;
}

DenseMatrix permute_to_weight_order(const DensityOp& rho) {
  if (rho.n_qubits() != 3) {
    throw ShapeError("permute_to_weight_order expects a 3-qubit operator");
  }
  std::vector<std::size_t> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [](std::size_t a, std::size_t b) {
    const int wa = std::popcount(a), wb = std::popcount(b);
    return wa != wb ? wa < wb : a < b;
  });
  DenseMatrix out(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      out(i, j) = rho.matrix()(perm[i], perm[j]);
  return out;
}

double purity(const DensityOp& rho) {
  return trace(rho.matrix() * rho.matrix()).real();
}

std::string to_json(const PureState& s) {
  std::string out = "{\"kind\":\"pure\",\"labels\":[";
  for (std::size_t i = 0; i < s.labels().size(); ++i) {
    if (i) out += ",";
    out += "\"" + s.labels()[i].name + "\"";
  }
  out += "],\"amplitudes\":[";
  for (std::size_t i = 0; i < s.amplitudes().size(); ++i) {
    if (i) out += ",";
    out += "[" + format17(s.amplitude(i).real()) + "," +
           format17(s.amplitude(i).imag()) + "]";
  }
  out += "]}";
  return out;
}

std::string to_json(const DensityOp& rho) {
  std::string out = "{\"kind\":\"density\",\"labels\":[";
  for (std::size_t i = 0; i < rho.labels().size(); ++i) {
    if (i) out += ",";
    out += "\"" + rho.labels()[i].name + "\"";
  }
  out += "],\"matrix\":[";
  const auto& m = rho.matrix();
  bool first = true;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!first) out += ",";
      first = false;
      out += "[" + format17(m(i, j).real()) + "," + format17(m(i, j).imag()) +
             "]";
    }
  out += "]}";
  return out;
}

DensityOp LoadedState::as_density() const {
  if (density) return *density;
  return to_density(*pure);
}

LoadedState state_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("invalid state JSON: ") + e.what());
  }

  const auto parse_pairs = [](const nlohmann::json& arr) {
    std::vector<complexd> vals;
    vals.reserve(arr.size());
    for (const auto& p : arr) {
      if (!p.is_array() || p.size() != 2) {
        throw ContractError("state JSON entries must be [re, im] pairs");
      }
      vals.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return vals;
  };

  try {
    std::vector<QubitLabel> labels;
    for (const auto& l : j.at("labels"))
      labels.emplace_back(l.get<std::string>());

    const std::string kind = j.at("kind").get<std::string>();
    LoadedState loaded;
    if (kind == "pure") {
      loaded.pure = PureState(labels, parse_pairs(j.at("amplitudes")));
    } else if (kind == "density") {
      auto vals = parse_pairs(j.at("matrix"));
      const std::size_t dim = std::size_t{1} << labels.size();
      loaded.density = DensityOp::from_matrix(
          labels, DenseMatrix(dim, dim, std::move(vals)));
    } else {
      throw ContractError("state JSON kind must be 'pure' or 'density'");
    }
    return loaded;
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("invalid state JSON: ") + e.what());
  }
}

}  // namespace horizonq
