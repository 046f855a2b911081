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

#include "salient/estimator.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "salient/errors.h"

namespace salient {
namespace {

constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-20;

void CheckFinite(double f, const Vector& g) {
  if (!std::isfinite(f) || !g.allFinite()) {
    throw NumericalError("Fit: objective or gradient is not finite");
  }
}

// Newton direction, regularizing the Hessian if it is singular or the solve
// does not give a descent direction (possible for non-identifiable data).
Vector NewtonDirection(const Matrix& h, const Vector& g) {
  const double scale = std::max(1.0, h.diagonal().cwiseAbs().maxCoeff());
  double damping = 0.0;
  for (int attempt = 0; attempt < 12; ++attempt) {
    Matrix reg = h;
    reg.diagonal().array() += damping;
    const Eigen::LDLT<Matrix> ldlt(reg);
    if (ldlt.info() == Eigen::Success && ldlt.isPositive()) {
      Vector p = -ldlt.solve(g);
      if (p.allFinite() && g.dot(p) < 0.0) return p;
    }
    damping = damping == 0.0 ? 1e-12 * scale : damping * 100.0;
  }
  return -g;
}

}  // namespace

void FitConfig::Validate() const {
  if (!(mu >= 0.0)) throw PreconditionError("FitConfig: mu must be >= 0");
  if (!(tol_grad > 0.0)) {
    throw PreconditionError("FitConfig: tol_grad must be > 0");
  }
  if (max_iters < 1) throw PreconditionError("FitConfig: max_iters must be >= 1");
}

FitResult Fit(const FeatureMatrix& u, const RealizedSelection& sel,
              const ComparisonDataset& data, const FitConfig& config) {
  config.Validate();
  if (data.empty()) throw PreconditionError("Fit: dataset is empty");
  return Fit(Objective(u, sel, data, config.mu), config);
}

FitResult Fit(const Objective& objective, const FitConfig& config) {
  config.Validate();
  if (objective.num_samples() == 0) {
    throw PreconditionError("Fit: dataset is empty");
  }
  const auto d = static_cast<Eigen::Index>(objective.dim());
  Vector w = config.init.value_or(Vector::Zero(d));
  CheckJudgmentVector(w, objective.dim());
  const bool use_newton = objective.dim() <= config.newton_max_dim;

  double f = objective.Value(w);
  Vector g = objective.Gradient(w);
  CheckFinite(f, g);

  FitResult result;
  if (config.keep_trace) result.trace.push_back(f);
  double gd_step = 1.0 / std::max<double>(1.0, objective.num_samples());

  int iter = 0;
  while (iter < config.max_iters && g.norm() > config.tol_grad) {
    const Vector p = use_newton ? NewtonDirection(objective.Hessian(w), g)
                                : Vector(-g);
    const double slope = g.dot(p);
    double step = use_newton ? 1.0 : 2.0 * gd_step;
    const double noise =
        64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(f));
    const double shrink = use_newton ? 0.5 : 1.0;
    bool accepted = false;
    Vector w_next;
    Vector g_next;
    double f_next = f;
    while (step >= kMinStep) {
      w_next = w + step * p;
      f_next = objective.Value(w_next);
      if (std::isfinite(f_next) && f_next <= f + kArmijo * step * slope) {
        accepted = true;
        break;
      }
      // Near the optimum the predicted decrease drops below the rounding
      // error of f. A step that leaves f unchanged up to that error but
      // clearly shrinks the gradient is still progress.
      if (std::isfinite(f_next) && f_next <= f + noise) {
        g_next = objective.Gradient(w_next);
        if (g_next.allFinite() && g_next.norm() < shrink * g.norm()) {
          accepted = true;
          break;
        }
        g_next.resize(0);
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no representable decrease left
    if (!use_newton) gd_step = step;
    w = std::move(w_next);
    f = f_next;
    g = g_next.size() > 0 ? std::move(g_next) : objective.Gradient(w);
    CheckFinite(f, g);
    ++iter;
    if (config.keep_trace) result.trace.push_back(f);
  }

  result.final_grad_norm = g.norm();
  result.final_objective = f;
  result.iterations = iter;
  result.converged = result.final_grad_norm <= config.tol_grad;
  result.w_hat = std::move(w);
  return result;
}

bool CheckInWb(const FeatureMatrix& u, const RealizedSelection& sel,
               const Vector& w, double b) {
  if (!(b >= 0.0)) throw PreconditionError("CheckInWb: b must be >= 0");
  const std::size_t n = u.num_items();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(MaskedUtilityGap(u, w, sel, i, j)) > b + 1e-12) return false;
    }
  }
  return true;
}

}  // namespace salient
