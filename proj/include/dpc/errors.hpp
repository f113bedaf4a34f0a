//
// Copyright 2026 The dpcoupling Authors
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
//

#ifndef DPC_ERRORS_HPP
#define DPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dpc {

// Requesting a noise multiplier for mu = 0 (no privacy spent) would mean
// infinite noise; callers must treat that case explicitly.
class InfiniteNoiseError : public std::domain_error {
 public:
  explicit InfiniteNoiseError(const std::string& what)
      : std::domain_error(what) {}
};

// Normal-equation solve hit a (numerically) singular system.
class SingularSystemError : public std::runtime_error {
 public:
  explicit SingularSystemError(const std::string& what)
      : std::runtime_error(what) {}
};

// A training update produced a non-finite parameter vector.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(long step, double eta, double alpha);
  long step() const { return step_; }
  double eta() const { return eta_; }
  double alpha() const { return alpha_; }

 private:
  long step_;
  double eta_;
  double alpha_;
};

// delta_metric with acc_method >= acc_nonpriv.
class DegenerateDenominatorError : public std::domain_error {
 public:
  explicit DegenerateDenominatorError(const std::string& what)
      : std::domain_error(what) {}
};

inline DivergenceError::DivergenceError(long step, double eta, double alpha)
    : std::runtime_error("training diverged at step " + std::to_string(step) +
                         " (eta=" + std::to_string(eta) +
                         ", alpha=" + std::to_string(alpha) + ")"),
      step_(step),
      eta_(eta),
      alpha_(alpha) {}

}  // namespace dpc

#endif  // DPC_ERRORS_HPP
