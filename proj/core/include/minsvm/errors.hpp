// Copyright 2026 The minsvm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MINSVM_ERRORS_HPP
#define MINSVM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace minsvm {

// Bad input: malformed data, invalid configuration, mismatched dimensions.
// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A computation produced NaN or Inf.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Training hit a non-finite objective or gradient at `iteration()`.
class DivergenceError : public NumericalError {
 public:
  DivergenceError(const std::string& what, int iteration)
      : NumericalError(what), iteration_(iteration) {}

  int iteration() const noexcept { return iteration_; }

 private:
  int iteration_;
};

}  // namespace minsvm

#endif  // MINSVM_ERRORS_HPP
