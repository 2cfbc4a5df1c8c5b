// laug/rng.h

// Copyright 2026 The LAUG Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef LAUG_RNG_H_
#define LAUG_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace laug {

// Seeded random source. The std distributions are implementation-defined, so
// all sampling here is done by hand on top of mt19937_64 to keep outputs
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for one unit of work, e.g. (seed, "SD", dialog, turn).
  static Rng Derive(std::uint64_t seed, std::string_view label,
                    std::string_view key = {}, std::uint64_t index = 0);

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, n). n must be > 0.
  std::size_t Uniform(std::size_t n);

  // Uniform in [0, 1).
  double UniformReal();

  bool Bernoulli(double p);

  // Index drawn proportionally to non-negative weights; at least one weight
  // must be positive.
  std::size_t Weighted(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
};

// 64-bit FNV-1a, used for stream derivation and config hashes.
std::uint64_t Fnv1a(std::string_view bytes,
                    std::uint64_t basis = 14695981039346656037ULL);

}  // namespace laug

#endif  // LAUG_RNG_H_
