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

// Small dense symmetric eigenproblems.

#ifndef SALIENT_LINALG_H_
#define SALIENT_LINALG_H_

#include <Eigen/Dense>

namespace salient {

struct JacobiOptions {
  // Sweeps stop once the off-diagonal Frobenius norm falls below
  // tol * Frobenius norm of the input.
  double tol = 1e-12;
  int max_sweeps = 100;
};

// Eigenvalues of a symmetric matrix in ascending order, computed with cyclic
// Jacobi rotations. Only the upper triangle is read.
Eigen::VectorXd SymmetricEigenvalues(const Eigen::MatrixXd& a,
                                     const JacobiOptions& options = {});

double MinEigenvalue(const Eigen::MatrixXd& a);
double MaxEigenvalue(const Eigen::MatrixXd& a);

}  // namespace salient

#endif  // SALIENT_LINALG_H_
