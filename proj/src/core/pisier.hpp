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

#ifndef QHL_PISIER_HPP
#define QHL_PISIER_HPP

#include "core/group.hpp"
#include "core/numerics.hpp"

namespace qhl {

/// The four 2x2 generators: V = diag(1,-1), C the lower shift, and the two
/// diagonal idempotents, satisfying V^2 = I, C^2 = 0, CV = C, VC = -C,
/// C*C = E11, CC* = E22 and VC + CV = 0 with exact integer entries.
struct BaseMatrices {
  Mat V, C, E11, E22;
};
BaseMatrices base_matrices();

/// C_i = V tensor i times, then C, then identities: a 2^n x 2^n matrix,
/// 0 <= i <= n-1.
Mat build_C(int i, int n);

/// W_i truncated to the first N blocks: the block diagonal of C_{i,n} over
/// n = 1..N_trunc, with C_{i,n} = 0 for i >= n. Dimension 2^(N+1) - 2.
Mat build_W(int i, int N_trunc);

/// Norm sandwich (1/2) sum|a_i| <= ||sum a_i C_i tensor C_i|| <= sum|a_i| at
/// level n; n <= 6 enforced (the operator acts on 4^n dimensions).
struct CcNormResult {
  double norm = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};
CcNormResult cc_norm_check(std::span<const cplx> a, int n);

/// | ||sum alpha_i C_{i,mn}|| - ||alpha||_2 |, exact isometry at every
/// truncation; mn <= 12 enforced.
double lambda_isometry_check(std::span<const cplx> alpha, int mn);

/// Coefficient sequence a_k = (k+1)^(-3/2).
double a_coefficient(int k);

/// The block operator F = [[S*, X], [0, S]] on K_trunc blocks, with
/// X = (a_{i+j} W_{i+j}) a block Hankel matrix and S the block shift.
struct FOperator {
  Mat F, S, X;
  int block_dim = 0;    // dimension of one W block
  int num_blocks = 0;   // K_trunc
};

struct PisierParams {
  int N_trunc = 4;  // W truncation, direct sum of C^(2^k) for k = 1..N_trunc
  int K_trunc = 8;  // shift-block count
};
FOperator build_F(const PisierParams& params);

/// Norm growth witness at level (m, n): the displayed matrix
///   sum_k (km)^2 |a_{km-1}|^2 C_{km-1,mn} tensor W_{km-1}
/// against the sup norm (sum_k (km)^2 |a_{km-1}|^2)^(1/2), with the bound
/// (1/2)((1/m) sum_{k<=n} 1/k)^(1/2). Requires m*n <= 6; the W truncation
/// at N_trunc = m*n keeps the witness block intact, so the lower bound
/// survives truncation.
struct DeltaGrowthReport {
  int m = 1, n = 1;
  double lhs_ratio = 0.0;
  double paper_bound = 0.0;
  double margin() const { return lhs_ratio - paper_bound; }
};
DeltaGrowthReport delta_growth_experiment(int m, int n);

/// The one-operator module action: a polynomial g in the quotient
/// coordinates acts as r(T) with r(z) = g(theta_1(z,..,z), ..., theta_d(z,..,z)).
/// Unital algebra homomorphism in g.
Mat theta_module_action(const Mat& T, const LaurentPoly& g_in_p, const QuotientContext& ctx);

/// The single-variable polynomial r above, as a 1-dim LaurentPoly.
LaurentPoly collapse_through_theta(const LaurentPoly& g_in_p, const QuotientContext& ctx);

}  // namespace qhl

#endif
