// Copyright 2026 The bioadv Authors.
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

// Platform-independent random stream used by every attack.
//
// The generator is splitmix64:
//
//   mix64(z):  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//              z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//              return z ^ (z >> 31)
//   next():    state += 0x9e3779b97f4a7c15; return mix64(state)
//
// all arithmetic modulo 2^64. uniform(n) draws next() and rejects values below
// (2^64 - n) mod n, returning the accepted value mod n, so it is unbiased and
// identical on every platform.
//
// Attacks never share one sequential stream. Each token (or span, keyed by its
// first token) gets its own generator seeded with
//
//   derive_seed(seed, sentence, token)
//       = mix64(mix64(seed ^ mix64(sentence + 1)) ^ mix64(~(token + 1)))
//
// which makes output independent of processing order.

#pragma once

#include <cstddef>
#include <cstdint>

namespace bioadv {

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t sentence,
                                    std::uint64_t token) noexcept {
  return mix64(mix64(seed ^ mix64(sentence + 1)) ^ mix64(~(token + 1)));
}

class DeterministicRng {
 public:
  constexpr explicit DeterministicRng(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform integer in [0, n). n must be positive.
  constexpr std::size_t uniform(std::size_t n) noexcept {
    const auto bound = static_cast<std::uint64_t>(n);
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return static_cast<std::size_t>(r % bound);
    }
  }

  constexpr std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace bioadv
