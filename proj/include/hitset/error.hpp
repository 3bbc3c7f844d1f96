// Copyright 2026 The hitset Authors.
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

#ifndef HITSET_ERROR_HPP_
#define HITSET_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hitset {

// Argument and precondition violations are reported with std::invalid_argument
// and std::out_of_range. The types below cover failures of a solve.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The covering LP has no feasible point (some range is empty).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// The simplex did not reach a certified optimum.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// A run hit its configured work limit (oracle calls, search size).
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// An unhit range carries zero LP weight, so resampling cannot normalize.
class ZeroWeightRangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace hitset

#endif  // HITSET_ERROR_HPP_
