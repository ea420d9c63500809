/*
   Copyright 2026 The qhl authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QHL_NUMERICS_HPP
#define QHL_NUMERICS_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

namespace qhl {

using cplx = std::complex<double>;

/// The one dense complex matrix type shared across the project.
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct SvdResult {
  std::vector<double> singular_values;  // descending, nonnegative
};

/// Singular values of M, descending.
SvdResult svd_values(const Mat& M);

/// Largest singular value. Dense SVD up to dimension 2000, deterministic
/// power iteration on A^H A beyond (relative tolerance 1e-9, at most 5000
/// iterations, fixed seed). Throws empty-matrix on a 0-dimensional input.
double opnorm(const Mat& M);

/// Count of singular values above tol * sigma_max. tol must lie in (0,1).
int numerical_rank(const Mat& M, double tol);

/// Standard Kronecker product, first factor on the most significant index.
Mat kron(const Mat& A, const Mat& B);

/// Matrix-free operator for norm computations on structured matrices.
struct LinearOp {
  Eigen::Index rows = 0, cols = 0;
  std::function<Vec(const Vec&)> apply;          // x (cols) -> A x (rows)
  std::function<Vec(const Vec&)> apply_adjoint;  // y (rows) -> A^H y (cols)
};

/// Largest singular value of a matrix-free operator via power iteration on
/// A^H A; seeded deterministically.
double opnorm_power(const LinearOp& op, double tol = 1e-9, int max_iter = 5000,
                    unsigned seed = 42);

}  // namespace qhl

#endif
