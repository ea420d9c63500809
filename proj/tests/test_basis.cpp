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

#include "core/basis.hpp"

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"

using namespace qhl;
using qhl::testing::coeff_distance;

namespace {
LaurentPoly zeta(int d, std::vector<int> alpha, cplx c = 1.0) {
  LaurentPoly p(d);
  p.add_term(alpha, c);
  return p;
}
}  // namespace

TEST_CASE("symmetrized basis at window 1, trivial character of S2") {
  QuotientContext ctx = QuotientContext::create(1, 1, 2, 0, 0);
  BasisSet basis(ctx, 1);

  CHECK(basis.size() == 6);
  CHECK(basis.analytic_indices().size() == 3);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto at = [&](std::vector<int> lambda) -> const BasisEntry& {
    auto idx = basis.find(lambda);
    REQUIRE(idx.has_value());
    return basis.entry(*idx);
  };

  CHECK(coeff_distance(at({0, 0}).e, LaurentPoly::constant(2, 1.0)) <= 1e-14);
  CHECK(coeff_distance(at({1, 0}).e,
                       (zeta(2, {1, 0}) + zeta(2, {0, 1})).scaled(inv_sqrt2)) <= 1e-14);
  CHECK(coeff_distance(at({1, 1}).e, zeta(2, {1, 1})) <= 1e-14);
  CHECK(at({1, -1}).analytic == false);
  CHECK(at({1, -1}).degree == 0);
}

TEST_CASE("sign character of S2 kills symmetric candidates") {
  QuotientContext ctx = QuotientContext::create(1, 1, 2, 1, 0);
  BasisSet basis(ctx, 1);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto idx = basis.find({1, 0});
  REQUIRE(idx.has_value());
  CHECK(coeff_distance(basis.entry(*idx).e,
                       (zeta(2, {1, 0}) - zeta(2, {0, 1})).scaled(inv_sqrt2)) <= 1e-14);

  CHECK_FALSE(basis.find({0, 0}).has_value());
  CHECK_FALSE(basis.find({1, 1}).has_value());
  CHECK(basis.size() == 3);
  CHECK(basis.analytic_indices().size() == 1);
}

TEST_CASE("constant entry present exactly for the trivial character") {
  for (auto [m, t, d] : {std::tuple{1, 1, 2}, {2, 1, 2}, {2, 2, 2}}) {
    for (const auto& chi : characters_1d(m, t, d)) {
      QuotientContext ctx = QuotientContext::create(m, t, d, chi.a, chi.c);
      BasisSet basis(ctx, 1);
      CHECK(basis.find(std::vector<int>(d, 0)).has_value() == chi.is_trivial());
    }
  }
}

TEST_CASE("entries are orthonormal, relative invariant and canonically phased") {
  for (auto [m, t, d, D] : {std::tuple{1, 1, 2, 6}, {2, 1, 2, 6}, {2, 2, 2, 6},
                            std::tuple{1, 1, 3, 4}, {2, 1, 3, 4}}) {
    for (const auto& chi : characters_1d(m, t, d)) {
      QuotientContext ctx = QuotientContext::create(m, t, d, chi.a, chi.c);
      BasisSet basis(ctx, D);
      CHECK(basis.gram_residual() <= 1e-10);
      for (const auto& entry : basis.entries()) {
        CHECK(std::is_sorted(entry.lambda.rbegin(), entry.lambda.rend()));
        bool nonneg = std::all_of(entry.lambda.begin(), entry.lambda.end(),
                                  [](int v) { return v >= 0; });
        CHECK(entry.analytic == nonneg);
        CHECK(relative_invariance_residual(ctx.group, ctx.rho, entry.e) <= 1e-12);
        cplx lead = entry.e.coeff(entry.lambda);
        CHECK(lead.real() > 0.0);
        CHECK(std::abs(lead.imag()) <= 1e-14);
      }
    }
  }
}

TEST_CASE("relative_factor divides out ell_rho") {
  QuotientContext triv = QuotientContext::create(1, 1, 2, 0, 0);
  BasisSet basis_triv(triv, 3);
  for (std::size_t i : basis_triv.analytic_indices()) {
    // ell = 1 for the trivial character, so the cofactor is the entry itself.
    CHECK(coeff_distance(relative_factor(triv, basis_triv.entry(i)), basis_triv.entry(i).e) <=
          1e-14);
  }

  QuotientContext sign = QuotientContext::create(1, 1, 2, 1, 0);
  BasisSet basis_sign(sign, 3);
  auto idx = basis_sign.find({1, 0});
  REQUIRE(idx.has_value());
  LaurentPoly ghat = relative_factor(sign, basis_sign.entry(*idx));
  CHECK(coeff_distance(ghat, LaurentPoly::constant(2, 1.0 / std::sqrt(2.0))) <= 1e-14);

  auto idx21 = basis_sign.find({2, 1});
  REQUIRE(idx21.has_value());
  LaurentPoly ghat21 = relative_factor(sign, basis_sign.entry(*idx21));
  // e ~ (zeta1^2 zeta2 - zeta1 zeta2^2)/sqrt(2) so the cofactor is a multiple
  // of zeta1 zeta2; it must be G-invariant.
  CHECK(coeff_distance(ghat21, zeta(2, {1, 1}, 1.0 / std::sqrt(2.0))) <= 1e-12);
  Character trivial{0, 0, 1, 1};
  CHECK(relative_invariance_residual(sign.group, trivial, ghat21) <= 1e-12);

  // Every analytic cofactor is invariant: the divide-out route agrees with
  // multiplying back.
  for (std::size_t i : basis_sign.analytic_indices()) {
    LaurentPoly g = relative_factor(sign, basis_sign.entry(i));
    CHECK(coeff_distance(sign.ell * g, basis_sign.entry(i).e) <= 1e-12);
    CHECK(relative_invariance_residual(sign.group, trivial, g) <= 1e-12);
  }
}

TEST_CASE("basis JSON export") {
  QuotientContext ctx = QuotientContext::create(1, 1, 2, 0, 0);
  BasisSet basis(ctx, 2);
  auto j = nlohmann::json::parse(basis_to_json(basis));
  CHECK(j.is_array());
  CHECK(j.size() == basis.size());
  CHECK(j[0].contains("lambda"));
  CHECK(j[0].contains("terms"));
}
