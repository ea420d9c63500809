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

#ifndef QHL_OPERATORS_HPP
#define QHL_OPERATORS_HPP

#include <string>
#include <vector>

#include "core/basis.hpp"
#include "core/numerics.hpp"

namespace qhl {

/// Finite section of an operator in the {e_lambda} basis. Row and column
/// index sets are lists of canonical lambda vectors in (degree, lex) order;
/// entry(lambda, mu) = <Psi e_mu, e_lambda> for the pulled-back symbol Psi.
struct OperatorMatrix {
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> cols;
  Mat entries;
  struct Meta {
    std::string symbol;
    int window = 0;
    int margin = 0;
  } meta;
};

/// Residuals of an operator relation restricted to the interior window
/// (rows/cols of degree at most window - margin).
struct RelationReport {
  std::vector<std::pair<std::string, double>> residuals;
  int interior_count = 0;
  double max_residual() const {
    double m = 0.0;
    for (const auto& [k, v] : residuals) m = std::max(m, v);
    return m;
  }
};

/// Compression of multiplication by the G-invariant symbol Psi to the
/// analytic basis entries: the Toeplitz truncation. Rejects symbols whose
/// invariance residual exceeds 1e-10.
OperatorMatrix toeplitz_matrix(const QuotientContext& ctx, const BasisSet& basis,
                               const LaurentPoly& psi);

/// Big Hankel truncation: rows run over co-analytic entries, columns over
/// analytic ones; entry = <Psi e_mu, e_lambda>.
OperatorMatrix big_hankel_matrix(const QuotientContext& ctx, const BasisSet& basis,
                                 const LaurentPoly& psi);

/// Small Hankel truncation for an analytic quotient symbol phi given by its
/// polynomial pull-back Psi_phi = phi o theta. The operator is conjugate
/// linear; the matrix acts linearly on conjugated coefficient vectors via
///   entry(lambda, mu) = <Psi_phi * ell_rho * conj(g_hat_mu), e_lambda>_nu,
/// where e_mu = ell_rho g_hat_mu. This form exists because conj(e_mu)
/// written as |ell_rho|^2 conj(g_hat_mu) / conj(ell_rho) folds the
/// non-polynomial 1/conj(ell_rho) into the pairing.
OperatorMatrix small_hankel_matrix(const QuotientContext& ctx, const BasisSet& basis,
                                   const LaurentPoly& psi_phi);

/// Diagonal matrix of the dilation-compression delta_r on the analytic
/// entries; the eigenvalue on e_lambda is r^(m0 + deg e_lambda). Requires
/// 0 < r < 1.
OperatorMatrix delta_r_matrix(const QuotientContext& ctx, const BasisSet& basis, double r);

/// Residuals of the Brown-Halmos relations
///   T_{p_d}^* T_psi T_{p_d} = T_psi,
///   T_{p_{d-j}}^* T_psi T_{p_d}^t = T_psi T_{p_j}  (1 <= j < d)
/// on the interior window with margin t*m_d + max_j m_j. Throws
/// window-too-small when the window has no interior.
RelationReport check_brown_halmos(const QuotientContext& ctx, const BasisSet& basis,
                                  const LaurentPoly& psi);

/// Residual of the small-Hankel intertwining T_{p_j}^* h = h T_{p_j} in the
/// matrix realization (the right factor appears conjugated), margin max_j m_j.
RelationReport check_hankel_intertwining(const QuotientContext& ctx, const BasisSet& basis,
                                         const LaurentPoly& psi_phi);

/// Two-route check of the identity
///   integral |f - f~(p)|^2 P(p,.) dmu = ||f s_hat_p||^2 - |f~(p)|^2
/// plus the comparison against twice the sum of squared Hankel norms.
struct BmoIdentityReport {
  double lhs = 0.0;          // grid quadrature of |f - f~|^2 P
  double rhs = 0.0;          // exact-pairing route
  double residual1 = 0.0;    // |lhs - rhs|
  double residual2 = 0.0;    // max(0, lhs - 2(||H_f||^2 + ||H_fbar||^2))
  double hankel_f = 0.0;     // truncated ||H_f||
  double hankel_fbar = 0.0;  // truncated ||H_fbar||
  cplx extension = 0.0;      // f~(p)
};

BmoIdentityReport bmo_identity_check(const QuotientContext& ctx, const BasisSet& basis,
                                     const LaurentPoly& f_pullback, std::span<const cplx> z,
                                     int q);

/// Numerical rank, singular values above tol * sigma_max.
int matrix_rank(const OperatorMatrix& op, double tol);

/// #{lambda in Lambda_+ : sum(lambda) <= d0}, counted over the full analytic
/// index set (not the truncation window). This is the range-dimension bound
/// for the small Hankel of the symbol p^gamma with
/// d0 = m0 + sum_j gamma_j m_j.
int count_low_degree_analytic(const QuotientContext& ctx, int d0);

/// Largest |Psi| over a q^d torus grid; a sup-norm proxy for contractivity
/// comparisons.
double grid_sup_norm(const LaurentPoly& psi, int q);

/// JSON export mirroring the declared schema:
/// {"rows":[lambda...], "cols":[lambda...], "entries": row-major [re,im]}.
std::string operator_matrix_to_json(const OperatorMatrix& op);
OperatorMatrix operator_matrix_from_json(const std::string& text);

/// One run of the bounded-Hankel-versus-unbounded-sup experiment. The symbol
/// is the group average of the truncated series sum_{n<=N} (1/n) z1^n z2^-n;
/// hankel_norm is the largest singular value of its big Hankel truncation at
/// window D, phi0_sup_lower the grid maximum of the extracted one-variable
/// partial sum, and the lambda counts classify the group elements feeding the
/// divergent part.
struct NehariReport {
  int m = 1, t = 1, d = 2;
  int N = 0;  // series truncation
  int D = 0;  // basis window
  int q = 0;  // grid order for the sup
  double hankel_norm = 0.0;
  double phi0_sup_lower = 0.0;
  int lambda1_prime = 0;
  int lambda2_prime = 0;
};

/// Requires N >= 1, D >= N and q >= 4N. The Hankel norm is computed through
/// a sparse column representation, so large windows stay cheap.
NehariReport nehari_experiment(const QuotientContext& ctx, int N, int D, int q);

/// The G-averaged truncated series symbol used by the experiment.
LaurentPoly nehari_symbol(const QuotientContext& ctx, int N);

}  // namespace qhl

#endif
