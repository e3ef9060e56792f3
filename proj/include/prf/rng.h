/*
 * Copyright 2026 The prfmap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PRF_RNG_H_
#define PRF_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>

namespace prf {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of stream k derived from a run seed. Stream 0 of seed s differs from
// stream 1 of seed s - 1.
inline std::uint64_t StreamSeed(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64(SplitMix64(seed) ^ (0x632be59bd9b4e019ULL * (stream + 1)));
}

// Uniform in [0, 1) from the top 53 bits, identical on every platform.
inline double Uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double UniformReal(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * Uniform01(rng);
}

// Uniform integer in [0, n), n > 0.
inline int UniformIndex(Rng& rng, int n) {
  const int k = static_cast<int>(Uniform01(rng) * n);
  return k < n ? k : n - 1;
}

inline double StandardNormal(Rng& rng) {
  // Box-Muller on two platform-independent uniforms.
  const double u1 = 1.0 - Uniform01(rng);
  const double u2 = Uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace prf

#endif  // PRF_RNG_H_
