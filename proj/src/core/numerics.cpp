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

#include "core/numerics.hpp"

#include <random>

#include "core/error.hpp"

namespace qhl {

namespace {

constexpr Eigen::Index kDenseSvdLimit = 2000;

void ensure_nonempty(const Mat& M) {
  if (M.rows() == 0 || M.cols() == 0) fail(errc::empty_matrix, "matrix has no entries");
}

}  // namespace

SvdResult svd_values(const Mat& M) {
  ensure_nonempty(M);
  Eigen::BDCSVD<Mat> svd(M);
  SvdResult out;
  out.singular_values.assign(svd.singularValues().data(),
                             svd.singularValues().data() + svd.singularValues().size());
  return out;
}

double opnorm(const Mat& M) {
  ensure_nonempty(M);
  if (std::max(M.rows(), M.cols()) <= kDenseSvdLimit)
    return svd_values(M).singular_values.front();
  LinearOp op;
  op.rows = M.rows();
  op.cols = M.cols();
  op.apply = [&M](const Vec& x) -> Vec { return M * x; };
  op.apply_adjoint = [&M](const Vec& y) -> Vec { return M.adjoint() * y; };
  return opnorm_power(op);
}

int numerical_rank(const Mat& M, double tol) {
  if (tol <= 0.0 || tol >= 1.0) fail(errc::invalid_parameters, "rank tolerance must be in (0,1)");
  SvdResult s = svd_values(M);
  double smax = s.singular_values.front();
  if (smax == 0.0) return 0;
  int count = 0;
  for (double v : s.singular_values)
    if (v > tol * smax) ++count;
  return count;
}

Mat kron(const Mat& A, const Mat& B) {
  Mat out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

double opnorm_power(const LinearOp& op, double tol, int max_iter, unsigned seed) {
  if (op.rows == 0 || op.cols == 0) fail(errc::empty_matrix, "operator has no entries");
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(op.cols);
  for (Eigen::Index i = 0; i < op.cols; ++i) v[i] = cplx(gauss(rng), gauss(rng));
  v.normalize();

  double sigma = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Vec av = op.apply(v);
    double next = av.norm();
    if (next == 0.0) return 0.0;
    v = op.apply_adjoint(av);
    double vn = v.norm();
    if (vn == 0.0) return next;
    v /= vn;
    if (it > 0 && std::abs(next - sigma) <= tol * std::max(1.0, next)) {
      sigma = next;
      break;
    }
    sigma = next;
  }
  return sigma;
}

}  // namespace qhl
