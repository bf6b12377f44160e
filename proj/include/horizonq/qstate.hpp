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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "horizonq/dense_matrix.hpp"
#include "horizonq/eigen.hpp"

namespace horizonq {

/// Name of one qubit in a register. Labels within a register are unique;
/// the conventional parties are A, B, C with near-horizon partner modes
/// Bbar, Cbar.
struct QubitLabel {
  std::string name;

  QubitLabel() = default;
  QubitLabel(std::string n) : name(std::move(n)) {}
  QubitLabel(const char* n) : name(n) {}

  friend bool operator==(const QubitLabel& a, const QubitLabel& b) {
    return a.name == b.name;
  }
  friend bool operator!=(const QubitLabel& a, const QubitLabel& b) {
    return !(a == b);
  }
};

/// The inaccessible partner mode of a party ("B" -> "Bbar").
QubitLabel barred(const QubitLabel& q);

inline const QubitLabel kLabelA{"A"};
inline const QubitLabel kLabelB{"B"};
inline const QubitLabel kLabelC{"C"};

// Validation tolerances for state invariants.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdFloor = -1e-10;

/// Labeled multi-qubit pure state. The leftmost label is the most
/// significant bit of the basis index (lexicographic big-endian ordering),
/// and the amplitude vector has unit norm within kNormTol.
class PureState {
 public:
  PureState(std::vector<QubitLabel> labels, std::vector<complexd> amplitudes);

  std::size_t n_qubits() const { return labels_.size(); }
  const std::vector<QubitLabel>& labels() const { return labels_; }
  const std::vector<complexd>& amplitudes() const { return amplitudes_; }
  complexd amplitude(std::size_t basis_index) const {
    return amplitudes_[basis_index];
  }

  double norm() const;

  /// Position of a label in the register; LabelError if absent.
  std::size_t position_of(const QubitLabel& q) const;

 private:
  std::vector<QubitLabel> labels_;
  std::vector<complexd> amplitudes_;
};

/// Labeled density operator: Hermitian within kHermitianTol, unit trace
/// within kTraceTol. Positive semidefiniteness (smallest eigenvalue at
/// least kPsdFloor) holds for every operator the toolkit constructs; it is
/// verified eagerly on untrusted input (from_matrix) and on demand via
/// min_eigenvalue().
class DensityOp {
 public:
  /// Validates Hermiticity, trace and positivity. Use for matrices of
  /// unknown provenance (e.g. parsed from a file).
  static DensityOp from_matrix(std::vector<QubitLabel> labels,
                               DenseMatrix matrix);

  std::size_t n_qubits() const { return labels_.size(); }
  const std::vector<QubitLabel>& labels() const { return labels_; }
  const DenseMatrix& matrix() const { return matrix_; }

  std::size_t position_of(const QubitLabel& q) const;

  double min_eigenvalue(const KernelTolerances& tol = {}) const;

 private:
  friend DensityOp to_density(const PureState&);
  friend DensityOp partial_trace(const DensityOp&,
                                 const std::vector<QubitLabel>&);
  friend DensityOp partial_trace(const PureState&,
                                 const std::vector<QubitLabel>&);

  // Trusted path: checks Hermiticity and trace only. Positivity follows from
  // the Gram-form construction used by the friends above.
  DensityOp(std::vector<QubitLabel> labels, DenseMatrix matrix);

  std::vector<QubitLabel> labels_;
  DenseMatrix matrix_;
};

// The three tripartite channel states over parties (A, B, C).
PureState make_ghz();  // (|000> + |111>)/sqrt(2)
PureState make_w();    // (|100> + |010> + |001>)/sqrt(3)
PureState make_w1();   // (|100> + |010> + sqrt(2)|001>)/2

/// Outer product |s><s|.
DensityOp to_density(const PureState& s);

/// Reduced operator over `keep`, in the same relative label order as the
/// input register. `keep` must be a nonempty subset of the labels.
DensityOp partial_trace(const DensityOp& rho,
                        const std::vector<QubitLabel>& keep);

/// Partial trace of |s><s| without materializing the full outer product.
DensityOp partial_trace(const PureState& s,
                        const std::vector<QubitLabel>& keep);

/// Gram factor L of the same reduction: the columns are the environment
/// branches of |s>, so that partial_trace(s, keep) = L L^dagger. Entries
/// are plain amplitude values, exact at every magnitude, which makes L the
/// preferred input for spectra of nearly singular reductions.
DenseMatrix reduced_gram_factor(const PureState& s,
                                const std::vector<QubitLabel>& keep);

/// Similarity transform of a three-qubit operator into the basis ordered by
/// Hamming weight (000, 001, 010, 100, 011, 101, 110, 111), ties within a
/// weight class broken lexicographically.
DenseMatrix permute_to_weight_order(const DensityOp& rho);

double purity(const DensityOp& rho);

// --- state file format ------------------------------------------------
//
// {"kind": "pure"|"density", "labels": [...],
//  "amplitudes": [[re, im], ...] | "matrix": [[re, im], ...] (row-major)}
// Floats are written with 17 significant digits so values round-trip
// exactly.

std::string to_json(const PureState& s);
std::string to_json(const DensityOp& rho);

/// A parsed state file: exactly one of the two members is set.
struct LoadedState {
  std::optional<PureState> pure;
  std::optional<DensityOp> density;

  /// The density form of whichever state was loaded.
  DensityOp as_density() const;
};

LoadedState state_from_json(const std::string& text);

}  // namespace horizonq
