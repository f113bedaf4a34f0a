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

#include "dpc/accountant.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dpc/errors.hpp"

namespace dpc {

void ApproxDpBudget::validate() const {
  if (!(epsilon >= 0.0)) {
    throw std::invalid_argument("epsilon must be >= 0");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must be in (0, 1)");
  }
}

void GdpLevel::validate() const {
  if (!(mu >= 0.0)) throw std::invalid_argument("mu must be >= 0");
}

void AccountingContext::validate() const {
  if (n_priv < 1) throw std::invalid_argument("n_priv must be >= 1");
  if (batch < 1) throw std::invalid_argument("batch must be >= 1");
  if (batch > n_priv) {
    throw std::invalid_argument("batch must not exceed n_priv");
  }
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
}

GdpLevel mu_from_sigma(const AccountingContext& ctx) {
  ctx.validate();
  const double ratio = static_cast<double>(ctx.batch) / ctx.n_priv;
  const double t = static_cast<double>(ctx.iterations);
  return GdpLevel{ratio * std::sqrt(t * std::expm1(1.0 / (ctx.sigma * ctx.sigma)))};
}

ApproxDpBudget epsilon_from_mu(const GdpLevel& level, double delta) {
  level.validate();
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must be in (0, 1)");
  }
  const double mu = level.mu;
  return ApproxDpBudget{mu * mu + mu * std::sqrt(2.0 * std::log(1.0 / delta)),
                        delta};
}

GdpLevel mu_from_epsilon(const ApproxDpBudget& budget) {
  budget.validate();
  if (budget.epsilon == 0.0) return GdpLevel{0.0};
  const double c = std::sqrt(2.0 * std::log(1.0 / budget.delta));
  const double eps = budget.epsilon;
  return GdpLevel{2.0 * eps / (c + std::sqrt(c * c + 4.0 * eps))};
}

double sigma_for_mu(long n_priv, long batch, long iterations, double mu) {
  if (mu == 0.0) {
    throw InfiniteNoiseError("mu = 0 requires infinite noise");
  }
  AccountingContext ctx{n_priv, batch, iterations, 1.0};
  ctx.validate();
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be >= 0");
  const double n = static_cast<double>(n_priv);
  const double b = static_cast<double>(batch);
  const double t = static_cast<double>(iterations);
  const double arg = n * n * mu * mu / (t * b * b);
  return std::sqrt(1.0 / std::log1p(arg));
}

double sigma_approx(long n_priv, long batch, long iterations, double mu) {
  if (mu == 0.0) {
    throw InfiniteNoiseError("mu = 0 requires infinite noise");
  }
  AccountingContext ctx{n_priv, batch, iterations, 1.0};
  ctx.validate();
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be >= 0");
  const double n = static_cast<double>(n_priv);
  const double b = static_cast<double>(batch);
  const double t = static_cast<double>(iterations);
  return b * std::sqrt(t) / (n * mu);
}

double delta_rule(long n_priv) {
  if (n_priv < 2) throw std::invalid_argument("n_priv must be >= 2");
  return std::pow(static_cast<double>(n_priv), -1.1);
}

bool delta_exceeds_guideline(double delta, long n_priv) {
  return n_priv >= 1 && delta > 1.0 / static_cast<double>(n_priv);
}

}  // namespace dpc
