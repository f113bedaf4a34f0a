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

#include "dpc/philox.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dpc {
namespace {

constexpr std::uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ull;
constexpr std::uint64_t kPhiloxM1 = 0xCA5A826395121157ull;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

inline PhiloxCounter round_once(const PhiloxCounter& c, const PhiloxKey& k) {
  std::uint64_t hi0, lo0, hi1, lo1;
  mulhilo(kPhiloxM0, c[0], hi0, lo0);
  mulhilo(kPhiloxM1, c[2], hi1, lo1);
  return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

// 64-bit output -> double in (0, 1].
inline double to_unit(std::uint64_t x) {
  return static_cast<double>((x >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

PhiloxCounter philox4x64_10(const PhiloxCounter& ctr, const PhiloxKey& key) {
  PhiloxCounter c = ctr;
  PhiloxKey k = key;
  for (int r = 0; r < 10; ++r) {
    c = round_once(c, k);
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return c;
}

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint64_t stream,
                           RngPurpose purpose, std::uint64_t tag)
    : key_{seed, stream},
      ctr_{0, tag, 0, static_cast<std::uint64_t>(purpose)} {}

void PhiloxStream::refill() {
  buffer_ = philox4x64_10(ctr_, key_);
  ++ctr_[0];
  buffer_pos_ = 0;
}

std::uint64_t PhiloxStream::next_u64() {
  if (buffer_pos_ == 4) refill();
  return buffer_[buffer_pos_++];
}

double PhiloxStream::next_unit() { return to_unit(next_u64()); }

double PhiloxStream::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_gaussian_;
  }
  const double u1 = next_unit();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_gaussian_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t PhiloxStream::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be > 0");
  const std::uint64_t rem =
      (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
  std::uint64_t x = next_u64();
  if (rem != 0) {
    while (x > std::numeric_limits<std::uint64_t>::max() - rem) {
      x = next_u64();
    }
  }
  return x % bound;
}

Eigen::VectorXd gaussian_vector(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t step, Eigen::Index d,
                                double scale) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(d);
  if (scale == 0.0) return out;
  const PhiloxKey key{seed, stream};
  Eigen::Index i = 0;
  std::uint64_t block = 0;
  while (i < d) {
    const PhiloxCounter ctr{block, step, 0,
                            static_cast<std::uint64_t>(RngPurpose::kNoise)};
    const PhiloxCounter words = philox4x64_10(ctr, key);
    // One block gives two Box-Muller pairs -> four normals.
    for (int pair = 0; pair < 2 && i < d; ++pair) {
      const double u1 = to_unit(words[2 * pair]);
      const double u2 = to_unit(words[2 * pair + 1]);
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double theta = 2.0 * std::numbers::pi * u2;
      out[i++] = scale * (r * std::cos(theta));
      if (i < d) out[i++] = scale * (r * std::sin(theta));
    }
    ++block;
  }
  return out;
}

Eigen::VectorXd unit_vector(PhiloxStream& rng, Eigen::Index d) {
  Eigen::VectorXd v(d);
  double norm = 0.0;
  do {
    for (Eigen::Index i = 0; i < d; ++i) v[i] = rng.next_gaussian();
    norm = v.norm();
  } while (norm == 0.0);
  return v / norm;
}

void shuffle_indices(std::vector<Eigen::Index>& indices, PhiloxStream& rng) {
  for (std::size_t i = indices.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(indices[i - 1], indices[j]);
  }
}

std::vector<Eigen::Index> iota_indices(Eigen::Index n) {
  std::vector<Eigen::Index> v(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace dpc
