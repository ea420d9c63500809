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

#include "core/kernels.hpp"

#include <cmath>
#include <numbers>

namespace qhl {

namespace {

constexpr double kZeroTol = 1e-12;

void ensure_interior(std::span<const cplx> z, int d) {
  if (static_cast<int>(z.size()) != d) fail(errc::dimension_mismatch, "point arity mismatch");
  for (const cplx& zj : z)
    if (std::abs(zj) >= 1.0) fail(errc::outside_domain, "point must lie in the open polydisc");
}

cplx ell_at(const QuotientContext& ctx, std::span<const cplx> z) {
  cplx v = eval(ctx.ell, z);
  if (std::abs(v) <= kZeroTol) fail(errc::zero_of_ell, "ell_rho vanishes at the chosen preimage");
  return v;
}

// Polydisc Szego kernel prod_j (1 - u_j conj(w_j))^-1.
cplx polydisc_szego(std::span<const cplx> u, std::span<const cplx> w) {
  cplx prod = 1.0;
  for (std::size_t j = 0; j < u.size(); ++j) prod *= 1.0 - u[j] * std::conj(w[j]);
  return 1.0 / prod;
}

// sum_sigma conj(rho(sigma)) S(sigma.z, w): the kernel numerator before the
// 1/(ell(z) conj(ell(w))) factor.
cplx szego_numerator(const QuotientContext& ctx, std::span<const cplx> z,
                     std::span<const cplx> w) {
  cplx acc = 0.0;
  for (const auto& g : ctx.group) {
    std::vector<cplx> gz = apply_to_point(g, z);
    acc += std::conj(ctx.rho.value(g)) * polydisc_szego(gz, w);
  }
  return acc;
}

}  // namespace

cplx szego_kernel(const QuotientContext& ctx, std::span<const cplx> z, std::span<const cplx> w) {
  ensure_interior(z, ctx.d);
  if (static_cast<int>(w.size()) != ctx.d) fail(errc::dimension_mismatch, "point arity mismatch");
  for (const cplx& wj : w)
    if (std::abs(wj) > 1.0 + kZeroTol) fail(errc::outside_domain, "second point outside the closed polydisc");
  return szego_numerator(ctx, z, w) / (ell_at(ctx, z) * std::conj(ell_at(ctx, w)));
}

cplx t_lambda_value(const QuotientContext& ctx, const BasisEntry& entry,
                    std::span<const cplx> w) {
  double root_order = std::sqrt(static_cast<double>(ctx.group.size()));
  return root_order * eval(entry.e, w) / ell_at(ctx, w);
}

cplx szego_kernel_series(const QuotientContext& ctx, const BasisSet& basis,
                         std::span<const cplx> z, std::span<const cplx> w) {
  ensure_interior(z, ctx.d);
  ensure_interior(w, ctx.d);
  cplx acc = 0.0;
  for (std::size_t i : basis.analytic_indices()) {
    const BasisEntry& entry = basis.entry(i);
    acc += t_lambda_value(ctx, entry, z) * std::conj(t_lambda_value(ctx, entry, w));
  }
  return acc;
}

double reproducing_check(const QuotientContext& ctx, const BasisSet& basis,
                         const LaurentPoly& f, std::span<const cplx> w) {
  ensure_interior(w, ctx.d);
  if (!f.is_polynomial())
    fail(errc::invalid_parameters, "reproducing_check expects a polynomial datum");
  if (relative_invariance_residual(ctx.group, ctx.rho, f) > 1e-10)
    fail(errc::non_invariant_symbol, "datum is not rho-relative invariant");

  cplx series = 0.0;
  for (std::size_t i : basis.analytic_indices()) {
    const BasisEntry& entry = basis.entry(i);
    cplx coeff = inner_nu(f, entry.e);
    if (coeff != cplx(0.0)) series += coeff * t_lambda_value(ctx, entry, w);
  }
  double root_order = std::sqrt(static_cast<double>(ctx.group.size()));
  cplx direct = root_order * eval(f, w) / ell_at(ctx, w);
  return std::abs(series - direct);
}

double poisson_szego(const QuotientContext& ctx, std::span<const cplx> z,
                     std::span<const cplx> zeta) {
  ensure_interior(z, ctx.d);
  if (static_cast<int>(zeta.size()) != ctx.d)
    fail(errc::dimension_mismatch, "point arity mismatch");
  for (const cplx& c : zeta)
    if (std::abs(std::abs(c) - 1.0) > 1e-9)
      fail(errc::invalid_parameters, "zeta must lie on the torus");
  cplx num = szego_kernel(ctx, z, zeta);
  cplx diag = szego_kernel(ctx, z, z);
  return std::norm(num) / diag.real();
}

TorusQuadrature::TorusQuadrature(const QuotientContext& ctx, int q) : ctx_(&ctx), q_(q) {
  if (q < 4) fail(errc::invalid_parameters, "grid order must be >= 4");
  std::vector<cplx> roots(q);
  for (int k = 0; k < q; ++k)
    roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / q);

  std::size_t total = 1;
  for (int j = 0; j < ctx.d; ++j) total *= static_cast<std::size_t>(q);
  points_.reserve(total);
  ell_sq_.reserve(total);
  std::vector<int> idx(ctx.d, 0);
  std::vector<cplx> pt(ctx.d);
  for (std::size_t n = 0; n < total; ++n) {
    for (int j = 0; j < ctx.d; ++j) pt[j] = roots[idx[j]];
    points_.push_back(pt);
    ell_sq_.push_back(std::norm(eval(ctx.ell, pt)));
    int j = 0;
    while (j < ctx.d && ++idx[j] == q) idx[j++] = 0;
  }
}

double TorusQuadrature::weighted_poisson(std::span<const cplx> z, std::size_t i) const {
  // P(p, theta(zeta)) |ell(zeta)|^2 = |sum_sigma conj(rho) S(sigma.z, zeta)|^2
  //                                   / (|ell(z)|^2 S(p,p)),
  // with no zeta-singularity: the |ell(zeta)|^2 weight cancels the kernel's
  // 1/|ell(zeta)|^2 factor.
  cplx num = szego_numerator(*ctx_, z, points_[i]);
  double ell_z_sq = std::norm(ell_at(*ctx_, z));
  double diag = (szego_numerator(*ctx_, z, z) / ell_z_sq).real();
  return std::norm(num) / (ell_z_sq * diag);
}

cplx TorusQuadrature::integrate(const std::vector<cplx>& values) const {
  if (values.size() != points_.size())
    fail(errc::invalid_parameters, "value list does not match grid");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) acc += values[i] * ell_sq_[i];
  double order = static_cast<double>(ctx_->group.size());
  return acc / (order * static_cast<double>(points_.size()));
}

cplx TorusQuadrature::poisson_extension(const LaurentPoly& f_pullback,
                                        std::span<const cplx> z) const {
  ensure_interior(z, ctx_->d);
  cplx num_acc = 0.0;
  double ell_z_sq = std::norm(ell_at(*ctx_, z));
  double diag = (szego_numerator(*ctx_, z, z) / ell_z_sq).real();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    cplx fv = eval(f_pullback, points_[i]);
    num_acc += fv * std::norm(szego_numerator(*ctx_, z, points_[i]));
  }
  double order = static_cast<double>(ctx_->group.size());
  return num_acc / (ell_z_sq * diag * order * static_cast<double>(points_.size()));
}

cplx poisson_extension(const QuotientContext& ctx, const LaurentPoly& f_pullback,
                       std::span<const cplx> z, int q) {
  if (relative_invariance_residual(ctx.group, Character{0, 0, ctx.m, ctx.t}, f_pullback) > 1e-10)
    fail(errc::non_invariant_symbol, "pull-back datum is not G-invariant");
  TorusQuadrature quad(ctx, q);
  return quad.poisson_extension(f_pullback, z);
}

}  // namespace qhl
