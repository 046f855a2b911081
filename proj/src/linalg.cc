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

#include "salient/linalg.h"

#include <algorithm>
#include <cmath>

#include "salient/errors.h"

namespace salient {

Eigen::VectorXd SymmetricEigenvalues(const Eigen::MatrixXd& a,
                                     const JacobiOptions& options) {
  if (a.rows() != a.cols()) {
    throw DimensionError("SymmetricEigenvalues: matrix is not square");
  }
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd m = a.selfadjointView<Eigen::Upper>();
  if (!m.allFinite()) {
    throw NumericalError("SymmetricEigenvalues: non-finite entry");
  }
  const double scale = m.norm();
  Eigen::VectorXd out(n);
  if (scale == 0.0) {
    out.setZero();
    return out;
  }

  auto off_norm = [&m, n]() {
    double s = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) s += 2.0 * m(p, q) * m(p, q);
    }
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_norm() <= options.tol * scale) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        // Rotation angle zeroing m(p, q) (Golub & Van Loan, Alg. 8.4.1).
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double mkp = m(k, p);
          const double mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double mpk = m(p, k);
          const double mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
      }
    }
  }

  out = m.diagonal();
  std::sort(out.data(), out.data() + n);
  return out;
}

double MinEigenvalue(const Eigen::MatrixXd& a) {
  return SymmetricEigenvalues(a)(0);
}

double MaxEigenvalue(const Eigen::MatrixXd& a) {
  const Eigen::VectorXd ev = SymmetricEigenvalues(a);
  return ev(ev.size() - 1);
}

}  // namespace salient
