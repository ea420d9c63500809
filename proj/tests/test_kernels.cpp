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

#include <Eigen/Eigenvalues>
#include <cmath>

#include "core/numerics.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace qhl;

namespace {

std::vector<cplx> pt(std::initializer_list<cplx> vals) { return std::vector<cplx>(vals); }

// Interior points avoiding the zero set of ell_rho.
std::vector<std::vector<cplx>> good_points(const QuotientContext& ctx, int count, unsigned seed,
                                           double radius = 0.5) {
  auto gen = testing::rng(seed);
  std::vector<std::vector<cplx>> out;
  while (static_cast<int>(out.size()) < count) {
    auto z = testing::random_disc_point(gen, ctx.d, radius);
    if (std::abs(eval(ctx.ell, z)) > 1e-2) out.push_back(z);
  }
  return out;
}

}  // namespace

TEST_CASE("Szego kernel at the center of the symmetrized bidisc") {
  QuotientContext ctx = QuotientContext::create(1, 1, 2, 0, 0);
  auto zero = pt({cplx(0.0), cplx(0.0)});

  // Closed form: the group sum degenerates to |G| at the origin.
  cplx closed = szego_kernel(ctx, zero, zero);
  CHECK(closed.real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(closed.imag()) <= 1e-14);

  // Second route: truncated expansion over the analytic basis.
  BasisSet basis(ctx, 8);
  cplx series = szego_kernel_series(ctx, basis, zero, zero);
  CHECK(std::abs(series - closed) <= 1e-10);
}

TEST_CASE("Hermitian symmetry and series agreement") {
  QuotientContext ctx = QuotientContext::create(1, 1, 2, 0, 0);
  BasisSet basis(ctx, 24);

  auto z = pt({cplx(0.5), cplx(0.2)});
  auto w = pt({cplx(0.1), cplx(0.3)});
  cplx closed = szego_kernel(ctx, z, w);
  cplx series = szego_kernel_series(ctx, basis, z, w);
  CHECK(std::abs(closed - series) <= 1e-6);

  for (auto [a, c] : {std::pair{0, 0}, {1, 0}}) {
    QuotientContext cc = QuotientContext::create(1, 1, 2, a, c);
    for (const auto& zz : good_points(cc, 5, 31)) {
      for (const auto& ww : good_points(cc, 5, 32)) {
        cplx lhs = szego_kernel(cc, zz, ww);
        cplx rhs = std::conj(szego_kernel(cc, ww, zz));
        CHECK(std::abs(lhs - rhs) <= 1e-12);
      }
    }
  }
}

TEST_CASE("kernel values do not depend on the chosen preimage") {
  for (auto [m, t, a] : {std::tuple{1, 1, 1}, {2, 1, 0}, {2, 1, 1}}) {
    QuotientContext ctx = QuotientContext::create(m, t, 2, a, 0);
    auto zs = good_points(ctx, 4, 33);
    auto ws = good_points(ctx, 4, 34);
    for (std::size_t i = 0; i < zs.size(); ++i) {
      cplx base = szego_kernel(ctx, zs[i], ws[i]);
      for (const auto& g : ctx.group) {
        auto gz = apply_to_point(g, zs[i]);
        CHECK(std::abs(szego_kernel(ctx, gz, ws[i]) - base) <= 1e-10);
      }
    }
  }
}

TEST_CASE("kernel positivity on interior samples") {
  for (auto [a, c] : {std::pair{0, 0}, {1, 0}}) {
    QuotientContext ctx = QuotientContext::create(1, 1, 2, a, c);
    auto zs = good_points(ctx, 6, 35);
    Mat K(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) K(i, j) = szego_kernel(ctx, zs[i], zs[j]);
    Eigen::SelfAdjointEigenSolver<Mat> eig((K + K.adjoint()) * 0.5);
    CHECK(eig.eigenvalues().minCoeff() >= -1e-9);
  }
}

TEST_CASE("reproducing identity") {
  QuotientContext ctx = QuotientContext::create(1, 1, 2, 0, 0);
  BasisSet basis(ctx, 8);

  // Constants reproduce: f = ell (trivial character: the constant datum).
  for (const auto& w : good_points(ctx, 3, 36))
    CHECK(reproducing_check(ctx, basis, ctx.ell, w) <= 1e-10);

  auto w0 = pt({cplx(0.4), cplx(-0.2)});
  CHECK(reproducing_check(ctx, basis, ctx.theta[0], w0) <= 1e-8);

  // Residual is orbit well-defined.
  double base = reproducing_check(ctx, basis, ctx.theta[0], w0);
  for (const auto& g : ctx.group) {
    auto gw = apply_to_point(g, w0);
    CHECK(std::abs(reproducing_check(ctx, basis, ctx.theta[0], gw) - base) <= 1e-10);
  }

  // Sign character: datum must be relative invariant.
  QuotientContext sgn = QuotientContext::create(1, 1, 2, 1, 0);
  BasisSet sbasis(sgn, 8);
  for (const auto& w : good_points(sgn, 3, 37)) {
    CHECK(reproducing_check(sgn, sbasis, sgn.ell, w) <= 1e-8);
    CHECK(reproducing_check(sgn, sbasis, sgn.ell * sgn.theta[0], w) <= 1e-8);
  }
  CHECK_THROWS_AS(reproducing_check(sgn, sbasis, sgn.theta[0], w0), Error);
}

TEST_CASE("Poisson-Szego kernel basics") {
  QuotientContext ctx = QuotientContext::create(1, 1, 2, 0, 0);
  auto zero = pt({cplx(0.0), cplx(0.0)});

  auto gen = testing::rng(38);
  for (int k = 0; k < 10; ++k) {
    auto zeta_pt = testing::random_torus_point(gen, 2);
    CHECK(poisson_szego(ctx, zero, zeta_pt) == doctest::Approx(2.0).epsilon(1e-10));
  }

  for (int k = 0; k < 100; ++k) {
    auto z = good_points(ctx, 1, 39 + static_cast<unsigned>(k)).front();
    auto zeta_pt = testing::random_torus_point(gen, 2);
    if (std::abs(eval(ctx.ell, zeta_pt)) < 1e-6) continue;
    CHECK(poisson_szego(ctx, z, zeta_pt) >= 0.0);
  }

  // Total mass against the pushforward measure equals 1.
  for (auto [a, c] : {std::pair{0, 0}, {1, 0}}) {
    QuotientContext cc = QuotientContext::create(1, 1, 2, a, c);
    TorusQuadrature quad(cc, 64);
    auto z = good_points(cc, 1, 41).front();
    double mass = 0.0;
    for (std::size_t i = 0; i < quad.num_points(); ++i) mass += quad.weighted_poisson(z, i);
    mass /= static_cast<double>(cc.group.size()) * static_cast<double>(quad.num_points());
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  }

  auto boundary = pt({cplx(1.0), cplx(0.0)});
  auto torus_pt = pt({cplx(1.0), cplx(1.0)});
  CHECK_THROWS_AS(poisson_szego(ctx, boundary, torus_pt), Error);
}

TEST_CASE("Poisson-Szego extension reproduces analytic data") {
  QuotientContext ctx = QuotientContext::create(1, 1, 2, 0, 0);

  auto z = pt({cplx(0.3, 0.1), cplx(-0.2, 0.2)});
  CHECK(std::abs(poisson_extension(ctx, LaurentPoly::constant(2, 1.0), z, 32) - cplx(1.0)) <=
        1e-8);

  cplx ext = poisson_extension(ctx, ctx.theta[0], z, 128);
  CHECK(std::abs(ext - eval(ctx.theta[0], z)) <= 1e-6);

  // Doubling the grid barely moves the value.
  cplx ext2 = poisson_extension(ctx, ctx.theta[0], z, 256);
  CHECK(std::abs(ext - ext2) <= 1e-8);

  CHECK_THROWS_AS(poisson_extension(ctx, ctx.theta[0], z, 3), Error);

  LaurentPoly not_invariant(2);
  not_invariant.add_term({1, 0}, 1.0);
  CHECK_THROWS_AS(poisson_extension(ctx, not_invariant, z, 16), Error);
}

TEST_CASE("kernel preconditions") {
  QuotientContext sgn = QuotientContext::create(1, 1, 2, 1, 0);
  auto zero = pt({cplx(0.0), cplx(0.0)});
  auto diag = pt({cplx(0.3), cplx(0.3)});
  auto ok = pt({cplx(0.3), cplx(-0.4)});
  CHECK_THROWS_AS(szego_kernel(sgn, zero, ok), Error);   // ell vanishes at 0
  CHECK_THROWS_AS(szego_kernel(sgn, diag, ok), Error);   // ell vanishes on the diagonal
  CHECK_THROWS_AS(szego_kernel(sgn, pt({cplx(1.2), cplx(0.0)}), ok), Error);
  CHECK(std::abs(szego_kernel(sgn, ok, ok)) > 0.0);
}
