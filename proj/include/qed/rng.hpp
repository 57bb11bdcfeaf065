// Copyright 2026 The qed422 authors
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
#include <random>

namespace qed {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stream seed for one unit of work; mixing keeps parallel streams disjoint
/// while staying a pure function of (seed, indices).
inline uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
  uint64_t s = splitmix64(master ^ 0x6a09e667f3bcc908ULL);
  s = splitmix64(s ^ a);
  s = splitmix64(s ^ (b * 0x9e3779b97f4a7c15ULL));
  s = splitmix64(s ^ (c * 0xc2b2ae3d27d4eb4fULL));
  return s;
}

/// Uniform double in [0, 1) from the top 53 bits; avoids the
/// implementation-defined std::uniform_real_distribution.
inline double next_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int next_bit(std::mt19937_64& rng) { return static_cast<int>(rng() >> 63); }

}  // namespace qed
