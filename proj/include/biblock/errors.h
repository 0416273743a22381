// Copyright 2026 The Biblock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIBLOCK_ERRORS_H_
#define BIBLOCK_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace biblock {

// Division by zero or a division that does not come out exact.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A rational function was evaluated where its denominator vanishes.
class PoleError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

// Operands of a matrix operation have incompatible shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public ArithmeticError {
 public:
  SingularMatrixError(std::size_t step, const std::string& what)
      : ArithmeticError(what), step_(step) {}

  // Elimination column at which no nonzero pivot was found.
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// Malformed block specification or graph file.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation requested at a value of q outside the admissible domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace biblock

#endif  // BIBLOCK_ERRORS_H_
