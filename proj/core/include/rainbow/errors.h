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

#ifndef RAINBOW_ERRORS_H_
#define RAINBOW_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

// Malformed input, or a value that breaks a structural invariant.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The instance is well formed, but the hypothesis of the theorem being
// applied does not hold. `culprit` names the offending colors: a single
// color, a pair, or a color set J.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(const std::string& what, std::vector<int> culprit)
      : std::runtime_error(what), culprit_(std::move(culprit)) {}

  const std::vector<int>& culprit() const { return culprit_; }

 private:
  std::vector<int> culprit_;
};

// A check backed by a proven theorem failed on an instance satisfying its
// hypotheses. This is always a bug in this library.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exhaustive routine was asked for more than its size cap allows.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rainbow

#endif  // RAINBOW_ERRORS_H_
