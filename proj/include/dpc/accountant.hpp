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

#ifndef DPC_ACCOUNTANT_HPP
#define DPC_ACCOUNTANT_HPP

#include <cstdint>

namespace dpc {

// Conversions between the three views of privacy strength:
//
//   (epsilon, delta)  <->  mu (Gaussian DP)  <->  noise multiplier sigma
//
// for the subsampled Gaussian mechanism run T iterations at batch size B over
// n private samples:
//
//   mu      = (B/n) * sqrt(T * (e^{1/sigma^2} - 1))
//   epsilon = mu^2 + mu * sqrt(2 * ln(1/delta))
//   sigma^2 = 1 / ln(n^2 mu^2 / (T B^2) + 1)            (exact inverse)
//   sigma^2 ~ B^2 T / (n^2 mu^2)                        (first-order Taylor)
//
// The mu formula is an asymptotic (large-T) statement; it is adopted here as
// the exact accountant for all T, which is also how every downstream formula
// in this project uses it. All arithmetic is 64-bit floating point.

struct ApproxDpBudget {
  double epsilon = 0.0;  // privacy loss, >= 0
  double delta = 1e-5;   // failure probability, in (0, 1)
  void validate() const;
};

struct GdpLevel {
  double mu = 0.0;  // Gaussian DP parameter, >= 0
  void validate() const;
};

struct AccountingContext {
  long n_priv = 1;      // private sample count
  long batch = 1;       // B, must be <= n_priv
  long iterations = 1;  // T, >= 1
  double sigma = 1.0;   // noise multiplier, > 0
  void validate() const;
};

GdpLevel mu_from_sigma(const AccountingContext& ctx);

ApproxDpBudget epsilon_from_mu(const GdpLevel& level, double delta);

// Unique nonnegative root of epsilon = mu^2 + mu*sqrt(2 ln(1/delta)),
// evaluated in the cancellation-free form 2*eps / (c + sqrt(c^2 + 4*eps)).
GdpLevel mu_from_epsilon(const ApproxDpBudget& budget);

// Exact inverse of mu_from_sigma for the same (n, B, T). Throws
// InfiniteNoiseError for mu = 0.
double sigma_for_mu(long n_priv, long batch, long iterations, double mu);

// Taylor form sigma = B*sqrt(T)/(n*mu); valid only when n^2 mu^2/(T B^2) is
// small (the log argument near 1).
double sigma_approx(long n_priv, long batch, long iterations, double mu);

// delta = n_priv^{-1.1}
double delta_rule(long n_priv);

// Guideline check: delta should not exceed 1/n_priv. Callers that want to
// surface the condition print a warning; it is never an error.
bool delta_exceeds_guideline(double delta, long n_priv);

}  // namespace dpc

#endif  // DPC_ACCOUNTANT_HPP
