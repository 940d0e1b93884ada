// Copyright 2026 The qumera Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qumera {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed contraction / permutation / shape arguments.
class SpecError : public Error {
 public:
  using Error::Error;
};

// Polar retraction of a matrix whose smallest singular value is too small.
class RankDeficientError : public Error {
 public:
  using Error::Error;
};

// An input violates a documented invariant (isometry, trace, hermiticity).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Iterative solver gave up; carries the last residual it reached.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// The optimizer could not evaluate any proposal for several sweeps.
class OptimizerAbortError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qumera
