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

#include "core/group.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace qhl;
using qhl::testing::coeff_distance;

namespace {

LaurentPoly zeta(int d, std::vector<int> alpha, cplx c = 1.0) {
  LaurentPoly p(d);
  p.add_term(alpha, c);
  return p;
}

std::vector<int> key_of(const GroupElement& g) {
  std::vector<int> k = g.perm;
  k.insert(k.end(), g.exps.begin(), g.exps.end());
  return k;
}

// Exhaustive group axioms through the composition table.
void check_group_axioms(const std::vector<GroupElement>& group) {
  std::set<std::vector<int>> keys;
  for (const auto& g : group) keys.insert(key_of(g));
  REQUIRE(keys.size() == group.size());

  bool has_identity = false;
  for (const auto& g : group) has_identity = has_identity || g.is_identity();
  CHECK(has_identity);

  for (const auto& g : group) {
    CHECK(keys.count(key_of(group_inverse(g))) == 1);
    CHECK(group_compose(g, group_inverse(g)).is_identity());
    for (const auto& h : group) CHECK(keys.count(key_of(group_compose(g, h))) == 1);
  }
}

GroupElement element(int m, int t, int d, std::vector<int> perm, std::vector<int> exps) {
  GroupElement g;
  g.m = m;
  g.t = t;
  g.d = d;
  g.perm = std::move(perm);
  g.exps = std::move(exps);
  return g;
}

}  // namespace

TEST_CASE("enumerate_group orders and closure") {
  CHECK(enumerate_group(1, 1, 3).size() == 6);
  CHECK(enumerate_group(2, 1, 2).size() == 8);

  auto klein = enumerate_group(2, 2, 2);
  CHECK(klein.size() == 4);
  check_group_axioms(klein);

  check_group_axioms(enumerate_group(2, 1, 2));
  check_group_axioms(enumerate_group(3, 1, 2));
  check_group_axioms(enumerate_group(2, 1, 3));

  CHECK_THROWS_AS(enumerate_group(3, 2, 2), Error);  // t does not divide m
  CHECK_THROWS_AS(enumerate_group(2, 1, 1), Error);  // d too small
}

TEST_CASE("composition convention (g o h).z = g.(h.z)") {
  GroupElement id = group_identity(2, 1, 2);
  GroupElement flip = element(2, 1, 2, {0, 1}, {1, 0});
  GroupElement swap = element(1, 1, 2, {1, 0}, {0, 0});

  CHECK(group_compose(group_identity(1, 1, 2), swap) == swap);
  CHECK(group_compose(swap, swap).is_identity());
  CHECK(group_compose(flip, flip).is_identity());
  CHECK(group_compose(id, flip) == flip);

  auto gen = testing::rng(201);
  auto group = enumerate_group(2, 1, 2);
  for (const auto& g : group) {
    for (const auto& h : group) {
      auto z = testing::random_disc_point(gen, 2);
      auto lhs = apply_to_point(group_compose(g, h), z);
      auto rhs = apply_to_point(g, apply_to_point(h, z));
      for (int j = 0; j < 2; ++j) CHECK(std::abs(lhs[j] - rhs[j]) <= 1e-12);
    }
  }
}

TEST_CASE("act_on_poly matches the pointwise action") {
  GroupElement swap = element(1, 1, 2, {1, 0}, {0, 0});
  CHECK(coeff_distance(act_on_poly(swap, zeta(2, {2, 0})), zeta(2, {0, 2})) == 0.0);

  GroupElement flip = element(2, 1, 2, {0, 1}, {1, 0});
  CHECK(coeff_distance(act_on_poly(flip, zeta(2, {1, 0})), zeta(2, {1, 0}, -1.0)) == 0.0);

  auto gen = testing::rng(202);
  for (auto [m, t, d] : {std::tuple{1, 1, 2}, {2, 1, 2}, {3, 1, 2}, {2, 2, 2}}) {
    auto group = enumerate_group(m, t, d);
    LaurentPoly f = testing::random_laurent(gen, d);
    for (const auto& g : group) {
      CHECK(coeff_distance(act_on_poly(group_identity(m, t, d), f), f) == 0.0);
      LaurentPoly gf = act_on_poly(g, f);
      for (int k = 0; k < 20; ++k) {
        auto z = testing::random_torus_point(gen, d);
        cplx lhs = eval(gf, z);
        cplx rhs = eval(f, apply_to_point(g, z));
        CHECK(std::abs(lhs - rhs) <= 1e-12);
      }
    }
  }
}

TEST_CASE("characters: count, multiplicativity, distinctness") {
  // Brute-force homomorphism search over unimodular values on tiny groups.
  auto brute_force_count = [](int m, int t, int d) {
    auto group = enumerate_group(m, t, d);
    int n = static_cast<int>(group.size());
    // Candidate values are 12th roots of unity; every character of these
    // small groups takes values among them.
    std::vector<cplx> roots;
    for (int k = 0; k < 12; ++k)
      roots.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / 12.0));
    std::vector<std::size_t> table(static_cast<std::size_t>(n) * n);
    auto index_of = [&](const GroupElement& g) {
      for (int i = 0; i < n; ++i)
        if (group[i] == g) return static_cast<std::size_t>(i);
      REQUIRE(false);
      return std::size_t{0};
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        table[static_cast<std::size_t>(i) * n + j] = index_of(group_compose(group[i], group[j]));

    int found = 0;
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> ok_prefix = [&](int upto) {
      for (int i = 0; i <= upto; ++i)
        for (int j = 0; j <= upto; ++j) {
          std::size_t k = table[static_cast<std::size_t>(i) * n + j];
          if (static_cast<int>(k) > upto) continue;
          cplx lhs = roots[assign[k]];
          cplx rhs = roots[assign[i]] * roots[assign[j]];
          if (std::abs(lhs - rhs) > 1e-9) return false;
        }
      return true;
    };
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n) {
        ++found;
        return;
      }
      for (int v = 0; v < 12; ++v) {
        assign[pos] = v;
        if (ok_prefix(pos)) rec(pos + 1);
      }
    };
    rec(0);
    return found;
  };

  CHECK(characters_1d(1, 1, 2).size() == 2);
  CHECK(brute_force_count(1, 1, 2) == 2);

  CHECK(characters_1d(2, 1, 2).size() == 4);

  // Degenerate dihedral case: the Klein group has 4 characters but only 2 in
  // the supported determinant-type family.
  CHECK(characters_1d(2, 2, 2).size() == 2);
  CHECK(brute_force_count(2, 2, 2) == 4);

  for (auto [m, t, d] : {std::tuple{1, 1, 2}, {2, 1, 2}, {3, 1, 2}, {2, 1, 3}}) {
    auto chars = characters_1d(m, t, d);
    auto group = enumerate_group(m, t, d);
    // Trivial character present.
    CHECK(std::any_of(chars.begin(), chars.end(),
                      [](const Character& chi) { return chi.is_trivial(); }));
    // Unimodular values.
    for (const auto& chi : chars)
      for (const auto& g : group) CHECK(std::abs(chi.value(g)) == doctest::Approx(1.0));
    // Distinct characters disagree somewhere.
    for (std::size_t i = 0; i < chars.size(); ++i)
      for (std::size_t j = i + 1; j < chars.size(); ++j) {
        bool differ = false;
        for (const auto& g : group)
          differ = differ || std::abs(chars[i].value(g) - chars[j].value(g)) > 1e-9;
        CHECK(differ);
      }
  }
}

TEST_CASE("theta_map fixed forms and invariance") {
  auto t112 = theta_map(1, 1, 2);
  CHECK(coeff_distance(t112[0], zeta(2, {1, 0}) + zeta(2, {0, 1})) == 0.0);
  CHECK(coeff_distance(t112[1], zeta(2, {1, 1})) == 0.0);

  auto t222 = theta_map(2, 2, 2);
  CHECK(coeff_distance(t222[0], zeta(2, {2, 0}) + zeta(2, {0, 2})) == 0.0);
  CHECK(coeff_distance(t222[1], zeta(2, {1, 1})) == 0.0);

  auto t212 = theta_map(2, 1, 2);
  CHECK(coeff_distance(t212[0], zeta(2, {2, 0}) + zeta(2, {0, 2})) == 0.0);
  CHECK(coeff_distance(t212[1], zeta(2, {2, 2})) == 0.0);

  for (auto [m, t, d] : {std::tuple{1, 1, 2}, {2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {2, 1, 3},
                         std::tuple{4, 2, 2}}) {
    auto group = enumerate_group(m, t, d);
    auto thetas = theta_map(m, t, d);
    for (int j = 0; j < d; ++j) {
      int expect = j + 1 < d ? (j + 1) * m : d * m / t;
      CHECK(thetas[j].total_degree() == expect);
      for (const auto& g : group)
        CHECK(coeff_distance(act_on_poly(g, thetas[j]), thetas[j]) == 0.0);
    }
  }
}

TEST_CASE("project_p_rho: fixed values, idempotence, range") {
  auto s2 = enumerate_group(1, 1, 2);
  Character triv{0, 0, 1, 1}, sign{1, 0, 1, 1};

  LaurentPoly p = project_p_rho(s2, triv, zeta(2, {1, 0}));
  CHECK(coeff_distance(p, (zeta(2, {1, 0}) + zeta(2, {0, 1})).scaled(0.5)) <= 1e-15);

  CHECK(project_p_rho(s2, sign, zeta(2, {1, 1})).is_zero());

  LaurentPoly inv = zeta(2, {1, 0}) + zeta(2, {0, 1});
  CHECK(coeff_distance(project_p_rho(s2, triv, inv), inv) <= 1e-15);

  auto gen = testing::rng(203);
  for (auto [m, t, d] : {std::tuple{1, 1, 2}, {2, 1, 2}, {2, 2, 2}}) {
    auto group = enumerate_group(m, t, d);
    for (const auto& chi : characters_1d(m, t, d)) {
      std::uniform_int_distribution<int> e(-3, 3);
      for (int trial = 0; trial < 67; ++trial) {
        std::vector<int> alpha(d);
        for (auto& a : alpha) a = e(gen);
        LaurentPoly mono = zeta(d, alpha);
        LaurentPoly once = project_p_rho(group, chi, mono);
        CHECK(coeff_distance(project_p_rho(group, chi, once), once) <= 1e-12);
        CHECK(relative_invariance_residual(group, chi, once) <= 1e-12);
      }
    }
  }
}

TEST_CASE("compute_ell_rho minimal relative invariants") {
  auto s2 = enumerate_group(1, 1, 2);
  Character triv{0, 0, 1, 1}, sign{1, 0, 1, 1};

  CHECK(coeff_distance(compute_ell_rho(s2, triv, 4), LaurentPoly::constant(2, 1.0)) == 0.0);
  CHECK(coeff_distance(compute_ell_rho(s2, sign, 4), zeta(2, {1, 0}) - zeta(2, {0, 1})) <=
        1e-12);

  // Divisibility of every projected monomial is verified internally up to
  // the cap; degree 8 covers the stated range.
  auto g212 = enumerate_group(2, 1, 2);
  Character refl{1, 0, 2, 1};
  LaurentPoly ell = compute_ell_rho(g212, refl, 8);
  CHECK(coeff_distance(ell, zeta(2, {2, 0}) - zeta(2, {0, 2})) <= 1e-12);

  auto gen = testing::rng(204);
  for (const auto& g : g212) {
    cplx phase = refl.value(g);
    LaurentPoly moved = act_on_poly(g, ell);
    for (int k = 0; k < 20; ++k) {
      auto z = testing::random_disc_point(gen, 2);
      CHECK(std::abs(eval(moved, z) - phase * eval(ell, z)) <= 1e-12);
    }
  }
}

TEST_CASE("QuotientContext bundles consistent data") {
  for (auto [m, t, d] : {std::tuple{1, 1, 2}, {1, 1, 3}, {2, 1, 2}, {2, 2, 2}, {3, 1, 2}}) {
    int expected_order = 1;
    for (int k = 0; k < d; ++k) expected_order *= m;
    for (int k = 2; k <= d; ++k) expected_order *= k;
    expected_order /= t;

    for (const auto& chi : characters_1d(m, t, d)) {
      QuotientContext ctx = QuotientContext::create(m, t, d, chi.a, chi.c);
      CHECK(static_cast<int>(ctx.group.size()) == expected_order);
      CHECK(ctx.m0 == ctx.ell.total_degree());
      CHECK(ctx.ell.is_homogeneous());
      CHECK(relative_invariance_residual(ctx.group, ctx.rho, ctx.ell) <= 1e-12);
      for (int j = 0; j < d; ++j) CHECK(ctx.degrees[j] == ctx.theta[j].total_degree());
    }
  }
  CHECK_THROWS_AS(QuotientContext::create(2, 1, 2, 0, 3), Error);
  CHECK_THROWS_AS(QuotientContext::create(2, 3, 2, 0, 0), Error);
}

TEST_CASE("substitute_theta pulls (p,pbar) symbols back to the torus") {
  QuotientContext ctx = QuotientContext::create(1, 1, 2, 0, 0);

  CHECK(coeff_distance(substitute_theta(zeta(4, {1, 0, 0, 0}), ctx),
                       zeta(2, {1, 0}) + zeta(2, {0, 1})) == 0.0);
  CHECK(coeff_distance(substitute_theta(zeta(4, {0, 0, 0, 1}), ctx), zeta(2, {-1, -1})) == 0.0);

  LaurentPoly mixed = substitute_theta(zeta(4, {1, 0, 0, 1}), ctx);
  CHECK(coeff_distance(mixed, zeta(2, {0, -1}) + zeta(2, {-1, 0})) <= 1e-15);
  GroupElement swap;
  swap.m = swap.t = 1;
  swap.d = 2;
  swap.perm = {1, 0};
  swap.exps = {0, 0};
  CHECK(coeff_distance(act_on_poly(swap, mixed), mixed) <= 1e-15);

  CHECK_THROWS_AS(substitute_theta(zeta(2, {1, 0}), ctx), Error);
  CHECK_THROWS_AS(substitute_theta(zeta(4, {-1, 0, 0, 0}), ctx), Error);
}
