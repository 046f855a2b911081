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


// Random instances for simulation studies: every entry of U and w* is drawn
// from a normal distribution with standard deviation 1/sqrt(d), so that
// E|U_j|^2 = E|w*|^2 = 1.

#ifndef SALIENT_SYNTHETIC_H_
#define SALIENT_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>

#include "salient/features.h"

namespace salient {

struct SyntheticInstance {
  FeatureMatrix u;
  Vector w_star;
};

// U uses stream kFeatures and w* uses stream kJudgment of `seed`, so changing
// n leaves w* untouched.
SyntheticInstance SampleInstance(std::size_t d, std::size_t n,
                                 std::uint64_t seed);

}  // namespace salient

#endif  // SALIENT_SYNTHETIC_H_
