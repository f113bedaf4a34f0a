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

#ifndef DPC_CLIPPING_HPP
#define DPC_CLIPPING_HPP

#include <string>
#include <vector>

#include <Eigen/Core>

namespace dpc {

struct PerSampleGradients;  // models.hpp

// Per-sample clipping rules. "automatic" rescales by 1/(||g|| + 1) with the
// threshold hard-wired to R = 1 (the gamma generalization is not exposed);
// "flat" is min{R/||g||, 1}; "adaptive quantile" computes a flat threshold
// per batch from the nearest-rank quantile of the raw gradient norms. The
// quantile is taken on pre-noise private norms, so runs using it are a
// non-private threshold diagnostic rather than an accounted mechanism.
enum class ClipKind { kAutomatic, kFlat, kIdentity, kAdaptiveQuantile };

struct ClipRule {
  ClipKind kind = ClipKind::kAutomatic;
  double flat_r = 1.0;      // flat threshold, > 0
  double quantile = 0.9;    // adaptive rank, in (0, 1)
  double fallback_r = 1.0;  // adaptive threshold when the quantile is 0

  // "automatic" | "flat:R" | "identity" | "quantile:q"
  static ClipRule parse(const std::string& text);
  std::string to_string() const;
  void validate() const;
};

// Scale factor for one gradient of the given norm. `threshold` is the
// effective flat bound (rule.flat_r for flat; the per-batch quantile for
// adaptive); automatic and identity ignore it.
double clip_factor(const ClipRule& rule, double norm, double threshold);

// Nearest-rank quantile: sort ascending, return the ceil(q*B)-th element
// (1-based). Always a member of the input.
double quantile_threshold(std::vector<double> norms, double q);

struct ClippedBatch {
  Eigen::VectorXd sum;      // sum_i factor_i * g_i, rows reduced in index order
  Eigen::VectorXd factors;  // per-sample clip factors C_i
  double threshold = 1.0;   // effective R (infinity for identity)
};

ClippedBatch clip_batch(const PerSampleGradients& grads, const ClipRule& rule);

}  // namespace dpc

#endif  // DPC_CLIPPING_HPP
