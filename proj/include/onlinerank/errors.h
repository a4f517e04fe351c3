// Copyright 2026 The Authors.
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

#ifndef ONLINERANK_ERRORS_H_
#define ONLINERANK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace onlinerank {

// Malformed arguments: out-of-range elements, negative weights, mismatched
// ground sets, bad parameters.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A query needs exhaustive subset enumeration beyond the supported size.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance has no positive singleton value anywhere.
class DegenerateInstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Monte-Carlo ordering could not find an element meeting the toss threshold.
class EstimationError : public std::runtime_error {
 public:
  EstimationError(const std::string& what, int best_element, double estimate)
      : std::runtime_error(what),
        best_element_(best_element),
        estimate_(estimate) {}

  int best_element() const { return best_element_; }
  double estimate() const { return estimate_; }

 private:
  int best_element_;
  double estimate_;
};

}  // namespace onlinerank

#endif  // ONLINERANK_ERRORS_H_
