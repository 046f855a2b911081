// Copyright 2026 The salientpref Authors
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

// Seed derivation. Every random stream in the library is an mt19937_64 seeded
// with DeriveSeed(root, {stream tag, ...}); streams never share state, so the
// order in which they are consumed does not matter.

#ifndef SALIENT_RNG_H_
#define SALIENT_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace salient {

using Rng = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t DeriveSeed(std::uint64_t root,
                                   std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = Mix64(root);
  for (std::uint64_t p : path) h = Mix64(h ^ Mix64(p));
  return h;
}

// Stream tags used by the simulation pipeline.
namespace streams {
inline constexpr std::uint64_t kFeatures = 1;
inline constexpr std::uint64_t kJudgment = 2;
inline constexpr std::uint64_t kSelection = 3;
inline constexpr std::uint64_t kComparisons = 4;
inline constexpr std::uint64_t kTrial = 5;
}  // namespace streams

}  // namespace salient

#endif  // SALIENT_RNG_H_
