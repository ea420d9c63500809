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

#include "core/pisier.hpp"

#include <cmath>

namespace qhl {

namespace {

// Largest singular value of A tensor B without materializing the product:
// reshape x to a (dimA x dimB) matrix X and use (A (x) B)x = vec(A X B^T).
double kron_sum_opnorm(const std::vector<cplx>& coeffs, const std::vector<Mat>& As,
                       const std::vector<Mat>& Bs) {
  Eigen::Index ra = As.front().rows(), rb = Bs.front().rows();
  if (ra * rb <= 2000) {
    Mat M = Mat::Zero(ra * rb, ra * rb);
    for (std::size_t k = 0; k < coeffs.size(); ++k) M += coeffs[k] * kron(As[k], Bs[k]);
    return opnorm(M);
  }
  using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  LinearOp op;
  op.rows = op.cols = ra * rb;
  op.apply = [&](const Vec& x) -> Vec {
    Eigen::Map<const RowMat> X(x.data(), ra, rb);
    RowMat Y = RowMat::Zero(ra, rb);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      Y += coeffs[k] * (As[k] * X * Bs[k].transpose());
    return Eigen::Map<const Vec>(Y.data(), ra * rb);
  };
  op.apply_adjoint = [&](const Vec& y) -> Vec {
    Eigen::Map<const RowMat> Y(y.data(), ra, rb);
    RowMat X = RowMat::Zero(ra, rb);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      X += std::conj(coeffs[k]) * (As[k].adjoint() * Y * Bs[k].conjugate());
    return Eigen::Map<const Vec>(X.data(), ra * rb);
  };
  return opnorm_power(op);
}

}  // namespace

BaseMatrices base_matrices() {
  BaseMatrices b;
  b.V = Mat::Zero(2, 2);
  b.V(0, 0) = 1.0;
  b.V(1, 1) = -1.0;
  b.C = Mat::Zero(2, 2);
  b.C(1, 0) = 1.0;
  b.E11 = Mat::Zero(2, 2);
  b.E11(0, 0) = 1.0;
  b.E22 = Mat::Zero(2, 2);
  b.E22(1, 1) = 1.0;
  return b;
}

Mat build_C(int i, int n) {
  if (n < 1 || i < 0 || i >= n) fail(errc::invalid_parameters, "need 0 <= i <= n-1");
  BaseMatrices b = base_matrices();
  Mat out = Mat::Identity(1, 1);
  for (int k = 0; k < i; ++k) out = kron(out, b.V);
  out = kron(out, b.C);
  for (int k = i + 1; k < n; ++k) out = kron(out, Mat::Identity(2, 2));
  return out;
}

Mat build_W(int i, int N_trunc) {
  if (N_trunc < 1 || i < 0) fail(errc::invalid_parameters, "need N_trunc >= 1 and i >= 0");
  Eigen::Index dim = (Eigen::Index(1) << (N_trunc + 1)) - 2;
  Mat out = Mat::Zero(dim, dim);
  Eigen::Index offset = 0;
  for (int n = 1; n <= N_trunc; ++n) {
    Eigen::Index block = Eigen::Index(1) << n;
    if (i < n) out.block(offset, offset, block, block) = build_C(i, n);
    offset += block;
  }
  return out;
}

double a_coefficient(int k) {
  if (k < 0) fail(errc::invalid_parameters, "coefficient index must be >= 0");
  return std::pow(static_cast<double>(k + 1), -1.5);
}

CcNormResult cc_norm_check(std::span<const cplx> a, int n) {
  if (n < 1 || n > 6) fail(errc::size_guard, "cc_norm_check supports 1 <= n <= 6");
  if (static_cast<int>(a.size()) > n)
    fail(errc::invalid_parameters, "coefficient list longer than the level");

  std::vector<cplx> coeffs;
  std::vector<Mat> Cs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == cplx(0.0)) continue;
    coeffs.push_back(a[i]);
    Cs.push_back(build_C(static_cast<int>(i), n));
  }
  CcNormResult out;
  for (const cplx& c : a) out.upper += std::abs(c);
  out.lower = 0.5 * out.upper;
  out.norm = coeffs.empty() ? 0.0 : kron_sum_opnorm(coeffs, Cs, Cs);
  return out;
}

double lambda_isometry_check(std::span<const cplx> alpha, int mn) {
  if (mn < 1 || mn > 12) fail(errc::size_guard, "lambda_isometry_check supports 1 <= mn <= 12");
  if (static_cast<int>(alpha.size()) > mn)
    fail(errc::invalid_parameters, "coefficient list longer than the level");

  Eigen::Index dim = Eigen::Index(1) << mn;
  double expected = 0.0;
  for (const cplx& c : alpha) expected += std::norm(c);
  expected = std::sqrt(expected);

  double norm;
  if (dim <= 2000) {
    Mat A = Mat::Zero(dim, dim);
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] != cplx(0.0)) A += alpha[i] * build_C(static_cast<int>(i), mn);
    norm = A.isZero(0.0) ? 0.0 : opnorm(A);
  } else {
    // Matrix-free: C_i flips bit i (counted from the most significant end)
    // from 0 to 1 and picks up the V-parity of the higher bits.
    LinearOp op;
    op.rows = op.cols = dim;
    auto applyC = [mn](int i, const Vec& x, bool adjoint) -> Vec {
      Vec y = Vec::Zero(x.size());
      Eigen::Index bit = Eigen::Index(1) << (mn - 1 - i);
      Eigen::Index high_mask = ~((bit << 1) - 1);
      for (Eigen::Index idx = 0; idx < x.size(); ++idx) {
        bool set = (idx & bit) != 0;
        if (set == adjoint) continue;
        Eigen::Index src = adjoint ? (idx | bit) : (idx & ~bit);
        int parity = __builtin_popcountll(static_cast<unsigned long long>(idx & high_mask));
        double sign = (parity % 2 == 0) ? 1.0 : -1.0;
        y[idx] += sign * x[src];
      }
      return y;
    };
    op.apply = [&alpha, &applyC](const Vec& x) -> Vec {
      Vec y = Vec::Zero(x.size());
      for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] != cplx(0.0)) y += alpha[i] * applyC(static_cast<int>(i), x, false);
      return y;
    };
    op.apply_adjoint = [&alpha, &applyC](const Vec& y) -> Vec {
      Vec x = Vec::Zero(y.size());
      for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] != cplx(0.0)) x += std::conj(alpha[i]) * applyC(static_cast<int>(i), y, true);
      return x;
    };
    norm = expected == 0.0 ? 0.0 : opnorm_power(op);
  }
  return std::abs(norm - expected);
}

FOperator build_F(const PisierParams& params) {
  if (params.N_trunc < 1 || params.N_trunc > 8 || params.K_trunc < 2 || params.K_trunc > 64)
    fail(errc::size_guard, "truncation outside the supported range");

  FOperator out;
  out.block_dim = static_cast<int>((Eigen::Index(1) << (params.N_trunc + 1)) - 2);
  out.num_blocks = params.K_trunc;
  Eigen::Index h = out.block_dim, K = params.K_trunc;

  out.S = Mat::Zero(K * h, K * h);
  for (Eigen::Index k = 1; k < K; ++k)
    out.S.block(k * h, (k - 1) * h, h, h) = Mat::Identity(h, h);

  std::vector<Mat> W;
  for (int k = 0; k <= 2 * (params.K_trunc - 1); ++k)
    W.push_back(k < params.N_trunc ? build_W(k, params.N_trunc) : Mat::Zero(h, h));

  out.X = Mat::Zero(K * h, K * h);
  for (Eigen::Index i = 0; i < K; ++i)
    for (Eigen::Index j = 0; j < K; ++j)
      out.X.block(i * h, j * h, h, h) =
          a_coefficient(static_cast<int>(i + j)) * W[static_cast<std::size_t>(i + j)];

  out.F = Mat::Zero(2 * K * h, 2 * K * h);
  out.F.topLeftCorner(K * h, K * h) = out.S.adjoint();
  out.F.topRightCorner(K * h, K * h) = out.X;
  out.F.bottomRightCorner(K * h, K * h) = out.S;
  return out;
}

DeltaGrowthReport delta_growth_experiment(int m, int n) {
  if (m < 1 || n < 1 || m * n > 6) fail(errc::size_guard, "delta_growth requires m*n <= 6");
  const int mn = m * n;

  DeltaGrowthReport report;
  report.m = m;
  report.n = n;

  double sup_sq = 0.0;
  std::vector<double> coeff(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    double km = static_cast<double>(k) * m;
    double c = km * km * std::pow(a_coefficient(k * m - 1), 2);
    coeff[static_cast<std::size_t>(k)] = c;
    sup_sq += c;
  }
  double p_sup = std::sqrt(sup_sq);

  // The W factor is block diagonal, so the norm is the max over its blocks.
  double norm = 0.0;
  for (int block = 1; block <= mn; ++block) {
    std::vector<cplx> cs;
    std::vector<Mat> As, Bs;
    for (int k = 1; k <= n; ++k) {
      int i = k * m - 1;
      if (i >= block) continue;  // C_{i,block} vanishes
      cs.push_back(coeff[static_cast<std::size_t>(k)]);
      As.push_back(build_C(i, mn));
      Bs.push_back(build_C(i, block));
    }
    if (cs.empty()) continue;
    norm = std::max(norm, kron_sum_opnorm(cs, As, Bs));
  }

  report.lhs_ratio = norm / p_sup;
  double harmonic = 0.0;
  for (int k = 1; k <= n; ++k) harmonic += 1.0 / k;
  report.paper_bound = 0.5 * std::sqrt(harmonic / m);
  return report;
}

LaurentPoly collapse_through_theta(const LaurentPoly& g_in_p, const QuotientContext& ctx) {
  if (g_in_p.dims() != ctx.d)
    fail(errc::malformed_input, "module-action polynomials use the d quotient variables");
  if (!g_in_p.is_polynomial())
    fail(errc::malformed_input, "module-action polynomials must be analytic");

  // theta_j on the diagonal (z,...,z) is binomial(d,j) z^(j m) for j < d and
  // z^(d m / t) for j = d.
  std::vector<LaurentPoly> diag;
  diag.reserve(ctx.d);
  for (int j = 0; j < ctx.d; ++j) {
    LaurentPoly u(1);
    for (const auto& [alpha, c] : ctx.theta[j].terms())
      u.add_term({static_cast<int>(std::accumulate(alpha.begin(), alpha.end(), 0L))}, c);
    diag.push_back(std::move(u));
  }

  LaurentPoly r(1);
  for (const auto& [alpha, c] : g_in_p.terms()) {
    LaurentPoly term = LaurentPoly::constant(1, c);
    for (int j = 0; j < ctx.d; ++j)
      for (int rep = 0; rep < alpha[j]; ++rep) term = term * diag[j];
    r += term;
  }
  return r;
}

Mat theta_module_action(const Mat& T, const LaurentPoly& g_in_p, const QuotientContext& ctx) {
  if (T.rows() != T.cols()) fail(errc::invalid_parameters, "T must be square");
  LaurentPoly r = collapse_through_theta(g_in_p, ctx);

  // Horner evaluation of the one-variable polynomial r at T.
  int deg = r.total_degree();
  Mat out = Mat::Zero(T.rows(), T.cols());
  for (int k = deg; k >= 0; --k) {
    out = out * T;
    cplx c = r.coeff({k});
    if (c != cplx(0.0)) out += c * Mat::Identity(T.rows(), T.cols());
  }
  return out;
}

}  // namespace qhl
