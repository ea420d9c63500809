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

#include <algorithm>
#include <cmath>

#include "core/operators.hpp"

namespace qhl {

LaurentPoly nehari_symbol(const QuotientContext& ctx, int N) {
  LaurentPoly f(ctx.d);
  std::vector<int> alpha(ctx.d, 0);
  for (int n = 1; n <= N; ++n) {
    alpha[0] = n;
    alpha[1] = -n;
    f.add_term(alpha, 1.0 / n);
  }
  return invariantize(ctx.group, f);
}

NehariReport nehari_experiment(const QuotientContext& ctx, int N, int D, int q) {
  if (N < 1) fail(errc::invalid_parameters, "series truncation must be >= 1");
  if (D < N) fail(errc::invalid_parameters, "window must be at least the series truncation");
  if (q < 4 * N) fail(errc::invalid_parameters, "grid order must be >= 4N");

  NehariReport report;
  report.m = ctx.m;
  report.t = ctx.t;
  report.d = ctx.d;
  report.N = N;
  report.D = D;
  report.q = q;

  LaurentPoly phi = nehari_symbol(ctx, N);

  // Big Hankel truncation in sparse column form: column mu runs over
  // analytic entries, rows over co-analytic ones, entries by coefficient
  // pairing of phi * e_mu against e_lambda.
  BasisSet basis(ctx, D);
  const auto& cols = basis.analytic_indices();
  const auto& rows = basis.coanalytic_indices();
  std::vector<Eigen::Index> row_pos(basis.size(), -1);
  for (std::size_t k = 0; k < rows.size(); ++k) row_pos[rows[k]] = static_cast<Eigen::Index>(k);

  std::vector<std::vector<std::pair<Eigen::Index, cplx>>> col_data(cols.size());
  std::vector<int> canon(ctx.d);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    LaurentPoly prod = phi * basis.entry(cols[j]).e;
    std::map<Eigen::Index, cplx> accum;
    for (const auto& [alpha, c] : prod.terms()) {
      canon.assign(alpha.begin(), alpha.end());
      std::sort(canon.begin(), canon.end(), std::greater<int>());
      auto idx = basis.find(canon);
      if (!idx || row_pos[*idx] < 0) continue;  // analytic part or outside window
      cplx w = c * std::conj(basis.entry(*idx).e.coeff(alpha));
      if (w != cplx(0.0)) accum[row_pos[*idx]] += w;
    }
    col_data[j].assign(accum.begin(), accum.end());
  }

  LinearOp op;
  op.rows = static_cast<Eigen::Index>(rows.size());
  op.cols = static_cast<Eigen::Index>(cols.size());
  op.apply = [&col_data, &op](const Vec& x) -> Vec {
    Vec y = Vec::Zero(op.rows);
    for (Eigen::Index j = 0; j < op.cols; ++j)
      for (const auto& [i, v] : col_data[j]) y[i] += v * x[j];
    return y;
  };
  op.apply_adjoint = [&col_data, &op](const Vec& y) -> Vec {
    Vec x = Vec::Zero(op.cols);
    for (Eigen::Index j = 0; j < op.cols; ++j) {
      cplx acc = 0.0;
      for (const auto& [i, v] : col_data[j]) acc += std::conj(v) * y[i];
      x[j] = acc;
    }
    return x;
  };
  report.hankel_norm = opnorm_power(op);

  // One-variable extraction: keep exponents of the form (n, -n, 0, ..., 0).
  LaurentPoly phi0(1);
  for (const auto& [alpha, c] : phi.terms()) {
    bool diagonal = alpha[0] == -alpha[1];
    for (int j = 2; j < ctx.d; ++j) diagonal = diagonal && alpha[j] == 0;
    if (diagonal) phi0.add_term({alpha[0]}, c);
  }
  report.phi0_sup_lower = phi0.is_zero() ? 0.0 : grid_sup_norm(phi0, q);

  // Group elements feeding the divergent part: those fixing slots 1 and 2
  // (or swapping them) with equal phase factors.
  for (const auto& g : ctx.group) {
    bool equal_phase = (g.exps[0] - g.exps[1]) % ctx.m == 0;
    if (g.perm[0] == 0 && g.perm[1] == 1 && equal_phase) ++report.lambda1_prime;
    if (g.perm[0] == 1 && g.perm[1] == 0 && equal_phase) ++report.lambda2_prime;
  }
  return report;
}

}  // namespace qhl
