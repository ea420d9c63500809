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

#ifndef QHL_KERNELS_HPP
#define QHL_KERNELS_HPP

#include "core/basis.hpp"
#include "core/group.hpp"

namespace qhl {

// Quotient points are always represented by chosen preimages z in the
// polydisc; all integrals are pulled back to T^d through
//   integral over the Silov boundary of H d(mu) =
//     (1/|G|) * integral over T^d of (H o theta) |ell_rho|^2 d(nu).

/// Szego kernel of the quotient Hardy space, evaluated at (theta(z), theta(w))
/// through the closed form
///   (ell(z) conj(ell(w)))^-1 sum_sigma conj(rho(sigma)) S(sigma.z, w)
/// with S the polydisc Szego kernel prod_j (1 - u_j conj(w_j))^-1.
/// Throws outside-domain when either point leaves the open polydisc and
/// zero-of-ell when ell_rho vanishes at z or w. The second argument may lie
/// on the torus (the kernel extends continuously there for interior z).
cplx szego_kernel(const QuotientContext& ctx, std::span<const cplx> z, std::span<const cplx> w);

/// Truncated basis expansion sum over analytic lambda of
/// t_lambda(theta z) conj(t_lambda(theta w)), with
/// t_lambda(theta w) = sqrt(|G|) e_lambda(w) / ell(w). Converges to
/// szego_kernel as the window grows; kept as an independent route.
cplx szego_kernel_series(const QuotientContext& ctx, const BasisSet& basis,
                         std::span<const cplx> z, std::span<const cplx> w);

/// Value t_lambda(theta(w)) of a quotient-side basis function.
cplx t_lambda_value(const QuotientContext& ctx, const BasisEntry& entry,
                    std::span<const cplx> w);

/// Residual of the reproducing identity for a relative-invariant polynomial f
/// (the T^d-side datum of a quotient function): compares the coefficient
/// expansion sum_lambda <f, e_lambda> t_lambda(theta w) against the direct
/// value sqrt(|G|) f(w)/ell(w).
double reproducing_check(const QuotientContext& ctx, const BasisSet& basis,
                         const LaurentPoly& f, std::span<const cplx> w);

/// Poisson-Szego kernel |S(p, q)|^2 / S(p, p) at p = theta(z), q = theta(zeta)
/// for interior z and zeta on the torus.
double poisson_szego(const QuotientContext& ctx, std::span<const cplx> z,
                     std::span<const cplx> zeta);

/// Tensor grid of q-th roots of unity on T^d; integrates
/// (1/|G|) * mean_grid( f(zeta) * weight(zeta) * |ell(zeta)|^2 ) exactly for
/// Laurent integrands of bandwidth below q and spectrally for smooth ones.
/// `weighted_poisson` below folds |ell(zeta)|^2 into the kernel so that
/// zeros of ell on the grid are harmless.
class TorusQuadrature {
 public:
  TorusQuadrature(const QuotientContext& ctx, int q);

  int q() const { return q_; }
  std::size_t num_points() const { return points_.size(); }
  const std::vector<cplx>& point(std::size_t i) const { return points_[i]; }

  /// Poisson-Szego kernel times |ell(zeta_i)|^2 at grid node i, for the
  /// interior point z. Finite even where ell vanishes on the grid.
  double weighted_poisson(std::span<const cplx> z, std::size_t i) const;

  /// (1/|G|) * mean of values[i] * |ell(zeta_i)|^2.
  cplx integrate(const std::vector<cplx>& values) const;

  /// Pushforward integral of a Laurent datum against the Poisson-Szego
  /// kernel at p = theta(z); this is the Poisson-Szego extension f~(p).
  cplx poisson_extension(const LaurentPoly& f_pullback, std::span<const cplx> z) const;

 private:
  const QuotientContext* ctx_;
  int q_;
  std::vector<std::vector<cplx>> points_;
  std::vector<double> ell_sq_;  // |ell(zeta_i)|^2
};

/// Poisson-Szego extension on a q^d tensor grid; f_pullback is the
/// G-invariant torus datum f composed with theta. Requires q >= 4.
cplx poisson_extension(const QuotientContext& ctx, const LaurentPoly& f_pullback,
                       std::span<const cplx> z, int q);

}  // namespace qhl

#endif
