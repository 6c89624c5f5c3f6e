// Copyright 2026 The halfcavity Authors
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

#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace halfcavity {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Chosen for
// bit-reproducible streams across platforms and for cheap stream splitting:
// (seed, stream) pairs give statistically independent sequences, so parallel
// trajectory workers and the serial path draw identical numbers.
class PhiloxRng {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit PhiloxRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        counter_{0, 0, static_cast<std::uint32_t>(stream),
                 static_cast<std::uint32_t>(stream >> 32)} {}

  /// One 10-round Philox block; exposed for known-answer tests.
  static Counter block(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      ctr = single_round(ctr, key);
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }

  std::uint32_t next_u32() {
    if (index_ == 4) {
      buffer_ = block(counter_, key_);
      advance_counter();
      index_ = 0;
    }
    return buffer_[static_cast<std::size_t>(index_++)];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1]; safe as a survival-probability threshold.
  double uniform_open01() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Exponential waiting time with the given rate (rate > 0).
  double exponential(double rate) { return -std::log(uniform_open01()) / rate; }

 private:
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  static constexpr std::uint32_t kMult0 = 0xD2511F53u;
  static constexpr std::uint32_t kMult1 = 0xCD9E8D57u;

  static Counter single_round(const Counter& ctr, const Key& key) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * ctr[2];
    return {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
            static_cast<std::uint32_t>(p1),
            static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
            static_cast<std::uint32_t>(p0)};
  }

  void advance_counter() {
    if (++counter_[0] == 0) ++counter_[1];
  }

  Key key_;
  Counter counter_;
  Counter buffer_{};
  int index_ = 4;
};

}  // namespace halfcavity
