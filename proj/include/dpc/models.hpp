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

#ifndef DPC_MODELS_HPP
#define DPC_MODELS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "dpc/dataset.hpp"

namespace dpc {

// Small differentiable models with hand-derived, exact per-sample gradients.
// No autodiff framework: every kind is tiny (d up to ~1e4) so dense B x d
// gradient rows stay cheap and fully deterministic.
//
//   least-squares: l(x, y; w) = 1/2 (w.x - y)^2
//   logistic:      l(x, y; w) = softplus(w.x) - y * w.x,  y in {0, 1}
//   mlp:           layers [p, hidden..., 1], tanh or relu, linear output;
//                  squared loss for regression, sigmoid cross-entropy for
//                  classification (inferred from the labels)
//
// An L2 penalty (l2/2)||theta||^2 is added per sample when configured, so the
// mean loss carries it exactly once. Models have no separate intercept; the
// parameter dimension of a linear model equals the feature count.

enum class ModelKind { kLeastSquares, kLogistic, kMlp };
enum class Activation { kTanh, kRelu };

struct ModelSpec {
  ModelKind kind = ModelKind::kLeastSquares;
  std::vector<int> hidden;  // mlp only; at least one layer
  Activation activation = Activation::kTanh;
  double l2 = 0.0;

  int param_dim(int input_dim) const;
  void validate(int input_dim) const;

  static ModelKind parse_kind(const std::string& text);
  static Activation parse_activation(const std::string& text);
};

struct PerSampleGradients {
  Eigen::MatrixXd grads;   // B x d, row i = gradient of sample indices[i]
  Eigen::VectorXd losses;  // B
  std::vector<Eigen::Index> indices;

  Eigen::Index batch_size() const { return grads.rows(); }
  void validate() const;
};

// Constants consumed by the closed-form alpha and bound formulas.
struct ProblemConstants {
  double smoothness = 1.0;        // L
  double initial_loss = 0.0;      // loss at w_1
  double grad_noise = 0.0;        // xi
  double optimum_distance = 0.0;  // ||w_1 - w*||
  double loss_variance = 0.0;     // Var_z[l(z)]
  double vc_dim = 1.0;
  void validate() const;
};

// Row i is the exact gradient of sample batch[i]'s loss at params.
PerSampleGradients per_sample_grads(const ModelSpec& spec,
                                    const Eigen::VectorXd& params,
                                    const Dataset& data,
                                    const std::vector<Eigen::Index>& batch);

struct BatchEval {
  double loss = 0.0;      // mean per-sample loss
  double accuracy = 0.0;  // NaN for regression
};

BatchEval batch_loss(const ModelSpec& spec, const Eigen::VectorXd& params,
                     const Dataset& data,
                     const std::vector<Eigen::Index>& batch);

// Mean-loss gradient over the whole dataset (vectorized for linear kinds).
Eigen::VectorXd mean_gradient(const ModelSpec& spec,
                              const Eigen::VectorXd& params,
                              const Dataset& data);

// Largest Hessian eigenvalue of the mean loss, by power iteration on
// Hessian-vector products taken as central gradient differences (step 1e-4)
// along random directions. Returns the max over `probes` random restarts.
double estimate_smoothness(const ModelSpec& spec, const Eigen::VectorXd& params,
                           const Dataset& data, int probes, std::uint64_t seed);

// xi estimate: sqrt(mean over sampled i of ||g_i - g_bar||^2), with g_bar the
// full-data mean gradient. sample_count >= n means full enumeration.
double estimate_grad_noise(const ModelSpec& spec, const Eigen::VectorXd& params,
                           const Dataset& data, long sample_count,
                           std::uint64_t seed);

// Normal-equation solution of the (mean) least-squares problem with ridge l2.
Eigen::VectorXd least_squares_optimum(const Dataset& data, double l2);

// i.i.d. uniform in [-1/sqrt(fan_in), 1/sqrt(fan_in)] per layer.
Eigen::VectorXd init_params(const ModelSpec& spec, int input_dim,
                            std::uint64_t seed, std::uint64_t stream);

}  // namespace dpc

#endif  // DPC_MODELS_HPP
