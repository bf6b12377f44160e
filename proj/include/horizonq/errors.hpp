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

#include <stdexcept>
#include <string>

namespace horizonq {

/// Error taxonomy shared by the whole toolkit. The category drives the CLI
/// exit code: Usage -> 2, Numeric -> 3, Io -> 4.
class Error : public std::runtime_error {
 public:
  enum class Category { Usage, Numeric, Io };

  Error(Category category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  Category category() const { return category_; }

 private:
  Category category_;
};

/// Dimension mismatch (non-square trace, incompatible product, ...).
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what)
      : Error(Category::Numeric, what) {}
};

/// A precondition on the values (not the shapes) was violated.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what)
      : Error(Category::Numeric, what) {}
};

/// Unknown qubit label.
class LabelError : public Error {
 public:
  explicit LabelError(const std::string& what)
      : Error(Category::Numeric, what) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(Category::Numeric, what) {}
};

/// Numerical failure at runtime (non-convergence, loss of positivity).
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what)
      : Error(Category::Numeric, what) {}
};

/// Inconsistent run configuration (bad axis spec, model/axis mismatch, ...).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(Category::Usage, what) {}
};

/// File system failure; the message carries the offending path.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(Category::Io, what) {}
};

}  // namespace horizonq
