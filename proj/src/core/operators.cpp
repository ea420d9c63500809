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

#include "core/operators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "core/kernels.hpp"
#include "json.hpp"

namespace qhl {

namespace {

constexpr double kInvarianceTol = 1e-10;

void ensure_invariant(const QuotientContext& ctx, const LaurentPoly& psi) {
  Character trivial{0, 0, ctx.m, ctx.t};
  if (relative_invariance_residual(ctx.group, trivial, psi) > kInvarianceTol)
    fail(errc::non_invariant_symbol, "symbol is not G-invariant");
}

std::vector<std::vector<int>> lambdas_of(const BasisSet& basis,
                                         const std::vector<std::size_t>& idx) {
  std::vector<std::vector<int>> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(basis.entry(i).lambda);
  return out;
}

// entry(lambda, mu) = <psi * e_mu, e_lambda> over the given index sets.
Mat pairing_matrix(const BasisSet& basis, const LaurentPoly& psi,
                   const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) {
  Mat M = Mat::Zero(static_cast<Eigen::Index>(row_idx.size()),
                    static_cast<Eigen::Index>(col_idx.size()));
  for (std::size_t j = 0; j < col_idx.size(); ++j) {
    LaurentPoly prod = psi * basis.entry(col_idx[j]).e;
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
      cplx v = inner_nu(prod, basis.entry(row_idx[i]).e);
      if (v != cplx(0.0)) M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  }
  return M;
}

int brown_halmos_margin(const QuotientContext& ctx) {
  int max_mj = *std::max_element(ctx.degrees.begin(), ctx.degrees.end());
  return ctx.t * ctx.degrees.back() + max_mj;
}

// Indices (within the analytic list) of entries with degree <= cutoff.
std::vector<Eigen::Index> interior_positions(const BasisSet& basis,
                                             const std::vector<std::size_t>& idx, int cutoff) {
  std::vector<Eigen::Index> out;
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (basis.entry(idx[k]).degree <= cutoff) out.push_back(static_cast<Eigen::Index>(k));
  return out;
}

double restricted_max_abs(const Mat& M, const std::vector<Eigen::Index>& rows,
                          const std::vector<Eigen::Index>& cols) {
  double worst = 0.0;
  for (Eigen::Index i : rows)
    for (Eigen::Index j : cols) worst = std::max(worst, std::abs(M(i, j)));
  return worst;
}

}  // namespace

OperatorMatrix toeplitz_matrix(const QuotientContext& ctx, const BasisSet& basis,
                               const LaurentPoly& psi) {
  ensure_invariant(ctx, psi);
  OperatorMatrix op;
  op.rows = lambdas_of(basis, basis.analytic_indices());
  op.cols = op.rows;
  op.entries = pairing_matrix(basis, psi, basis.analytic_indices(), basis.analytic_indices());
  op.meta = {"toeplitz", basis.window(), brown_halmos_margin(ctx)};
  return op;
}

OperatorMatrix big_hankel_matrix(const QuotientContext& ctx, const BasisSet& basis,
                                 const LaurentPoly& psi) {
  ensure_invariant(ctx, psi);
  OperatorMatrix op;
  op.rows = lambdas_of(basis, basis.coanalytic_indices());
  op.cols = lambdas_of(basis, basis.analytic_indices());
  op.entries = pairing_matrix(basis, psi, basis.coanalytic_indices(), basis.analytic_indices());
  op.meta = {"big-hankel", basis.window(), 0};
  return op;
}

OperatorMatrix small_hankel_matrix(const QuotientContext& ctx, const BasisSet& basis,
                                   const LaurentPoly& psi_phi) {
  if (!psi_phi.is_polynomial())
    fail(errc::non_analytic_symbol, "small Hankel symbols must be analytic");
  ensure_invariant(ctx, psi_phi);

  const auto& idx = basis.analytic_indices();
  OperatorMatrix op;
  op.rows = lambdas_of(basis, idx);
  op.cols = op.rows;
  op.entries = Mat::Zero(static_cast<Eigen::Index>(idx.size()),
                         static_cast<Eigen::Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) {
    LaurentPoly ghat = relative_factor(ctx, basis.entry(idx[j]));
    LaurentPoly weight = psi_phi * ctx.ell * conj_on_torus(ghat);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      cplx v = inner_nu(weight, basis.entry(idx[i]).e);
      if (v != cplx(0.0))
        op.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  }
  int max_mj = *std::max_element(ctx.degrees.begin(), ctx.degrees.end());
  op.meta = {"small-hankel", basis.window(), max_mj};
  return op;
}

OperatorMatrix delta_r_matrix(const QuotientContext& ctx, const BasisSet& basis, double r) {
  if (!(r > 0.0 && r < 1.0)) fail(errc::invalid_parameters, "r must lie in (0,1)");
  const auto& idx = basis.analytic_indices();
  OperatorMatrix op;
  op.rows = lambdas_of(basis, idx);
  op.cols = op.rows;
  op.entries = Mat::Zero(static_cast<Eigen::Index>(idx.size()),
                         static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    int k = basis.entry(idx[i]).degree;
    op.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
        std::pow(r, ctx.m0 + k);
  }
  op.meta = {"delta_r", basis.window(), 0};
  return op;
}

RelationReport check_brown_halmos(const QuotientContext& ctx, const BasisSet& basis,
                                  const LaurentPoly& psi) {
  ensure_invariant(ctx, psi);
  int margin = brown_halmos_margin(ctx);
  if (basis.window() <= margin)
    fail(errc::window_too_small, "window must exceed the safe margin " + std::to_string(margin));

  Mat T_psi = toeplitz_matrix(ctx, basis, psi).entries;
  std::vector<Mat> T_p;
  T_p.reserve(ctx.d);
  for (int j = 0; j < ctx.d; ++j)
    T_p.push_back(toeplitz_matrix(ctx, basis, ctx.theta[j]).entries);

  // theta_d^t, computed exactly and compressed; for analytic multipliers this
  // agrees with the t-th matrix power on the interior window.
  LaurentPoly theta_d_t = LaurentPoly::constant(ctx.d, 1.0);
  for (int rep = 0; rep < ctx.t; ++rep) theta_d_t = theta_d_t * ctx.theta.back();
  Mat T_pd_t = toeplitz_matrix(ctx, basis, theta_d_t).entries;

  auto interior = interior_positions(basis, basis.analytic_indices(), basis.window() - margin);
  RelationReport report;
  report.interior_count = static_cast<int>(interior.size());

  Mat r0 = T_p.back().adjoint() * T_psi * T_p.back() - T_psi;
  report.residuals.emplace_back("T_pd^* T T_pd = T", restricted_max_abs(r0, interior, interior));
  for (int j = 1; j < ctx.d; ++j) {
    Mat lhs = T_p[ctx.d - j - 1].adjoint() * T_psi * T_pd_t;
    Mat rhs = T_psi * T_p[j - 1];
    report.residuals.emplace_back(
        "T_p" + std::to_string(ctx.d - j) + "^* T T_pd^t = T T_p" + std::to_string(j),
        restricted_max_abs(lhs - rhs, interior, interior));
  }
  return report;
}

RelationReport check_hankel_intertwining(const QuotientContext& ctx, const BasisSet& basis,
                                         const LaurentPoly& psi_phi) {
  int margin = *std::max_element(ctx.degrees.begin(), ctx.degrees.end());
  if (basis.window() <= margin)
    fail(errc::window_too_small, "window must exceed the safe margin " + std::to_string(margin));

  Mat h = small_hankel_matrix(ctx, basis, psi_phi).entries;
  auto interior = interior_positions(basis, basis.analytic_indices(), basis.window() - margin);
  RelationReport report;
  report.interior_count = static_cast<int>(interior.size());
  for (int j = 0; j < ctx.d; ++j) {
    Mat T = toeplitz_matrix(ctx, basis, ctx.theta[j]).entries;
    // Conjugate linearity: h(T f) has matrix h * conj(T) on coefficient
    // vectors, so the relation reads T^H h = h conj(T).
    Mat diff = T.adjoint() * h - h * T.conjugate();
    report.residuals.emplace_back("T_p" + std::to_string(j + 1) + "^* h = h T_p" +
                                      std::to_string(j + 1),
                                  restricted_max_abs(diff, interior, interior));
  }
  return report;
}

BmoIdentityReport bmo_identity_check(const QuotientContext& ctx, const BasisSet& basis,
                                     const LaurentPoly& f_pullback, std::span<const cplx> z,
                                     int q) {
  ensure_invariant(ctx, f_pullback);
  TorusQuadrature quad(ctx, q);
  BmoIdentityReport report;

  // Route A: grid quadrature with the closed-form kernel.
  cplx ext = quad.poisson_extension(f_pullback, z);
  report.extension = ext;
  double lhs = 0.0;
  {
    double acc = 0.0;
    for (std::size_t i = 0; i < quad.num_points(); ++i) {
      cplx fv = eval(f_pullback, quad.point(i));
      acc += std::norm(fv - ext) * quad.weighted_poisson(z, i);
    }
    double order = static_cast<double>(ctx.group.size());
    lhs = acc / (order * static_cast<double>(quad.num_points()));
  }
  report.lhs = lhs;

  // Route B: ||f s_hat_p||^2 by exact coefficient pairing against the
  // truncated kernel section. ell * (s_p o theta) = sqrt(|G|) * sum_lambda
  // conj(t_lambda(p)) e_lambda is a Laurent polynomial, so
  // ||f s_hat_p||^2 = || f * sum conj(t_lambda(p)) e_lambda ||_nu^2 / S(p,p).
  double diag = szego_kernel(ctx, z, z).real();
  LaurentPoly section(ctx.d);
  for (std::size_t i : basis.analytic_indices()) {
    const BasisEntry& entry = basis.entry(i);
    cplx tv = t_lambda_value(ctx, entry, z);
    if (tv != cplx(0.0)) section += entry.e.scaled(std::conj(tv));
  }
  double fs_norm_sq = std::pow(norm_nu(f_pullback * section), 2) / diag;
  report.rhs = fs_norm_sq - std::norm(ext);
  report.residual1 = std::abs(report.lhs - report.rhs);

  report.hankel_f = opnorm(big_hankel_matrix(ctx, basis, f_pullback).entries);
  report.hankel_fbar = opnorm(big_hankel_matrix(ctx, basis, conj_on_torus(f_pullback)).entries);
  double bound = 2.0 * (report.hankel_f * report.hankel_f +
                        report.hankel_fbar * report.hankel_fbar);
  report.residual2 = std::max(0.0, report.lhs - bound);
  return report;
}

int matrix_rank(const OperatorMatrix& op, double tol) { return numerical_rank(op.entries, tol); }

int count_low_degree_analytic(const QuotientContext& ctx, int d0) {
  int count = 0;
  std::vector<int> lambda(ctx.d);
  // Descending-sorted nonnegative vectors with sum <= d0.
  std::function<void(int, int, int)> rec = [&](int pos, int remaining, int cap) {
    if (pos == ctx.d) {
      LaurentPoly img = project_p_rho(ctx.group, ctx.rho, LaurentPoly::monomial(lambda));
      if (norm_nu(img) > 1e-9) ++count;
      return;
    }
    for (int v = std::min(cap, remaining); v >= 0; --v) {
      lambda[pos] = v;
      rec(pos + 1, remaining - v, v);
    }
  };
  rec(0, d0, d0);
  return count;
}

double grid_sup_norm(const LaurentPoly& psi, int q) {
  if (q < 4) fail(errc::invalid_parameters, "grid order must be >= 4");
  std::vector<cplx> roots(q);
  for (int k = 0; k < q; ++k)
    roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / q);
  std::size_t total = 1;
  for (int j = 0; j < psi.dims(); ++j) total *= static_cast<std::size_t>(q);
  std::vector<int> idx(psi.dims(), 0);
  std::vector<cplx> pt(psi.dims());
  double sup = 0.0;
  for (std::size_t n = 0; n < total; ++n) {
    for (int j = 0; j < psi.dims(); ++j) pt[j] = roots[idx[j]];
    sup = std::max(sup, std::abs(eval(psi, pt)));
    int j = 0;
    while (j < psi.dims() && ++idx[j] == q) idx[j++] = 0;
  }
  return sup;
}

std::string operator_matrix_to_json(const OperatorMatrix& op) {
  nlohmann::ordered_json j;
  j["rows"] = op.rows;
  j["cols"] = op.cols;
  j["entries"] = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < op.entries.rows(); ++i) {
    for (Eigen::Index k = 0; k < op.entries.cols(); ++k) {
      j["entries"].push_back({op.entries(i, k).real(), op.entries(i, k).imag()});
    }
  }
  j["meta"] = {{"symbol", op.meta.symbol}, {"window", op.meta.window}, {"margin", op.meta.margin}};
  return j.dump();
}

OperatorMatrix operator_matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    OperatorMatrix op;
    op.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    op.cols = j.at("cols").get<std::vector<std::vector<int>>>();
    auto flat = j.at("entries");
    if (flat.size() != op.rows.size() * op.cols.size())
      fail(errc::malformed_input, "entry count mismatch");
    op.entries = Mat::Zero(static_cast<Eigen::Index>(op.rows.size()),
                           static_cast<Eigen::Index>(op.cols.size()));
    std::size_t n = 0;
    for (std::size_t i = 0; i < op.rows.size(); ++i)
      for (std::size_t k = 0; k < op.cols.size(); ++k, ++n)
        op.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
            cplx(flat[n][0].get<double>(), flat[n][1].get<double>());
    if (j.contains("meta")) {
      op.meta.symbol = j["meta"].value("symbol", "");
      op.meta.window = j["meta"].value("window", 0);
      op.meta.margin = j["meta"].value("margin", 0);
    }
    return op;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::malformed_input, std::string("bad OperatorMatrix JSON: ") + e.what());
  }
}

}  // namespace qhl
