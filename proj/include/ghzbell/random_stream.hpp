// Copyright 2026 The ghzbell Authors
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

#pragma once

#include <cstdint>

namespace ghzbell {

/// SplitMix64 finalizer (Steele, Lea & Flood constants).
std::uint64_t mix64(std::uint64_t x);

/**
 * Counter-based random stream.
 *
 * Output i is mix64(key + (i + 1)·0x9E3779B97F4A7C15), so the stream is a
 * pure function of (key, position) and copies are independent replicas.
 *
 * Draw accounting:
 *   next_u64      1 word
 *   next_uniform  1 word, 53-bit mantissa in [0, 1)
 *   next_gaussian 2 words (Box-Muller, cosine branch only, no caching)
 */
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64();
  double next_uniform();
  double next_gaussian();

  std::uint64_t key() const { return key_; }
  std::uint64_t position() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Independent stream for sample `index` of a run seeded with `seed`:
/// key = mix64(seed ^ mix64(index + 0xD1B54A32D192ED03)).
RandomStream substream(std::uint64_t seed, std::uint64_t index);

}  // namespace ghzbell
