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

#ifndef DPC_PHILOX_HPP
#define DPC_PHILOX_HPP

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace dpc {

// All randomness in this project flows through Philox4x64-10 (Salmon et al.,
// "Parallel random numbers: as easy as 1, 2, 3"), a counter-based generator:
// output = bijection(counter; key). Draws are addressed, not consumed, so a
// vector at (seed, stream, step) is the same no matter what was drawn before
// it. The implementation matches numpy.random.Philox blockwise, which is the
// pinned reference.
using PhiloxCounter = std::array<std::uint64_t, 4>;
using PhiloxKey = std::array<std::uint64_t, 2>;

PhiloxCounter philox4x64_10(const PhiloxCounter& ctr, const PhiloxKey& key);

// Counter word 3 separates unrelated uses of the same (seed, stream) key so
// that, e.g., shuffles can never collide with noise draws.
enum class RngPurpose : std::uint64_t {
  kParamInit = 1,
  kNoise = 2,
  kShufflePublic = 3,
  kShufflePrivate = 4,
  kSplit = 5,
  kTestSplit = 6,
  kData = 7,
  kProbe = 8,
  kGeneric = 9,
};

// Sequential view of one Philox stream: key = (seed, stream), counter words
// 1/2 fixed by the caller, word 0 advancing one block (4 outputs) at a time.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream, RngPurpose purpose,
               std::uint64_t tag = 0);

  std::uint64_t next_u64();
  // Uniform on (0, 1]; never returns 0 so log(u) is always finite.
  double next_unit();
  // Standard normal via Box-Muller; generated in pairs.
  double next_gaussian();
  // Uniform integer in [0, bound) without modulo bias.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  void refill();

  PhiloxKey key_;
  PhiloxCounter ctr_;
  std::array<std::uint64_t, 4> buffer_{};
  int buffer_pos_ = 4;
  double spare_gaussian_ = 0.0;
  bool has_spare_ = false;
};

// d i.i.d. N(0, scale^2) draws addressed by (seed, stream, step). The vector
// depends only on those coordinates, never on prior consumption.
Eigen::VectorXd gaussian_vector(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t step, Eigen::Index d,
                                double scale);

// Uniformly random unit vector (normalized Gaussian).
Eigen::VectorXd unit_vector(PhiloxStream& rng, Eigen::Index d);

// In-place Fisher-Yates driven by one stream.
void shuffle_indices(std::vector<Eigen::Index>& indices, PhiloxStream& rng);

// identity permutation [0, n)
std::vector<Eigen::Index> iota_indices(Eigen::Index n);

}  // namespace dpc

#endif  // DPC_PHILOX_HPP
