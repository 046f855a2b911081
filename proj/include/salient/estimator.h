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

// Maximum likelihood estimation of the judgment vector.

#ifndef SALIENT_ESTIMATOR_H_
#define SALIENT_ESTIMATOR_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "salient/features.h"
#include "salient/model.h"
#include "salient/selection.h"

namespace salient {

struct FitConfig {
  double mu = 0.0;
  double tol_grad = 1e-8;
  int max_iters = 5000;
  // Starting point; zeros when unset.
  std::optional<Vector> init;
  // Newton steps are used up to this dimension, gradient descent above it.
  std::size_t newton_max_dim = 64;
  // Record the objective after every iteration in FitResult::trace.
  bool keep_trace = false;

  void Validate() const;
};

struct FitResult {
  Vector w_hat;
  double final_grad_norm = 0.0;
  double final_objective = 0.0;
  int iterations = 0;
  bool converged = false;
  // Objective at the start point followed by one entry per iteration; only
  // filled when FitConfig::keep_trace is set.
  std::vector<double> trace;
};

// Minimizes Nll(w) + mu |w|^2 with damped Newton steps and Armijo
// backtracking. Hitting max_iters is reported through `converged`, not thrown.
// Throws NumericalError if the objective or gradient becomes non-finite and
// PreconditionError on empty data or an invalid config.
FitResult Fit(const FeatureMatrix& u, const RealizedSelection& sel,
              const ComparisonDataset& data, const FitConfig& config = {});

// Same, on a prebuilt objective.
FitResult Fit(const Objective& objective, const FitConfig& config = {});

// True iff max over all pairs of |<w, masked difference>| <= b (+1e-12).
bool CheckInWb(const FeatureMatrix& u, const RealizedSelection& sel,
               const Vector& w, double b);

}  // namespace salient

#endif  // SALIENT_ESTIMATOR_H_
