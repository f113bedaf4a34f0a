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

#ifndef DPC_DATASET_HPP
#define DPC_DATASET_HPP

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace dpc {

// Rows are samples. Labels are real for regression and {0, 1} for binary
// classification; classification() sniffs which one applies.
struct Dataset {
  Eigen::MatrixXd features;  // n x p
  Eigen::VectorXd labels;    // n
  std::string name;

  // Synthetic-regression provenance, persisted in a JSON sidecar.
  std::optional<Eigen::VectorXd> true_weights;
  std::optional<double> noise_sd;

  Eigen::Index rows() const { return features.rows(); }
  Eigen::Index cols() const { return features.cols(); }
  bool empty() const { return features.rows() == 0; }
  bool classification() const;
  void validate() const;

  Dataset take(const std::vector<Eigen::Index>& indices) const;
};

Dataset concat(const Dataset& a, const Dataset& b);

// CSV with header f0..f{p-1},label. save_csv also writes <path>.meta.json
// when the dataset carries synthetic metadata; load_csv reads it back if
// present.
Dataset load_csv(const std::string& path);
void save_csv(const Dataset& ds, const std::string& path);

}  // namespace dpc

#endif  // DPC_DATASET_HPP
