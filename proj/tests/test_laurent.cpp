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

#include "core/laurent.hpp"

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
}  // namespace

TEST_CASE("arithmetic on fixed examples") {
  LaurentPoly z1 = zeta(2, {1, 0});
  LaurentPoly z2 = zeta(2, {0, 1});

  CHECK((z1 + z1.scaled(-1.0)).is_zero());

  LaurentPoly prod = (z1 + z2) * (z1 - z2);
  LaurentPoly expect = zeta(2, {2, 0}) - zeta(2, {0, 2});
  CHECK(coeff_distance(prod, expect) == doctest::Approx(0.0));

  LaurentPoly cancel = zeta(2, {1, -1}) * zeta(2, {-1, 1});
  CHECK(coeff_distance(cancel, LaurentPoly::constant(2, 1.0)) == doctest::Approx(0.0));
}

TEST_CASE("ring axioms on random triples") {
  auto gen = testing::rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = testing::random_laurent(gen, 2);
    LaurentPoly b = testing::random_laurent(gen, 2);
    LaurentPoly c = testing::random_laurent(gen, 2);
    CHECK(coeff_distance((a * b) * c, a * (b * c)) <= 1e-12);
    CHECK(coeff_distance((a + b) * c, a * c + b * c) <= 1e-12);
    CHECK(coeff_distance(a * b, b * a) <= 1e-12);
  }
}

TEST_CASE("conj_on_torus") {
  CHECK(coeff_distance(conj_on_torus(zeta(2, {1, -3}, 2.0)), zeta(2, {-1, 3}, 2.0)) == 0.0);
  CHECK(coeff_distance(conj_on_torus(zeta(1, {1}, cplx(0, 1))), zeta(1, {-1}, cplx(0, -1))) ==
        0.0);

  // Real symmetric support is fixed pointwise.
  LaurentPoly sym = zeta(2, {1, 0}) + zeta(2, {-1, 0}) + LaurentPoly::constant(2, 3.0);
  CHECK(coeff_distance(conj_on_torus(sym), sym) == 0.0);

  auto gen = testing::rng(102);
  for (int trial = 0; trial < 20; ++trial) {
    LaurentPoly f = testing::random_laurent(gen, 3);
    CHECK(coeff_distance(conj_on_torus(conj_on_torus(f)), f) <= 1e-14);
    for (int k = 0; k < 5; ++k) {
      auto z = testing::random_torus_point(gen, 3);
      cplx lhs = eval(conj_on_torus(f), z);
      cplx rhs = std::conj(eval(f, z));
      CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
  }
}

TEST_CASE("inner_nu is the coefficient pairing") {
  CHECK(inner_nu(zeta(2, {1, 2}), zeta(2, {1, 2})) == cplx(1.0));
  CHECK(inner_nu(zeta(2, {1, 2}), zeta(2, {2, 1})) == cplx(0.0));

  LaurentPoly s = zeta(2, {1, 0}) + zeta(2, {0, 1});
  CHECK(inner_nu(s, s).real() == doctest::Approx(2.0));

  LaurentPoly diff = zeta(2, {1, 0}) - zeta(2, {0, 1});
  LaurentPoly sq = diff * diff;  // coefficients 1, -2, 1
  CHECK(inner_nu(sq, sq).real() == doctest::Approx(6.0));

  auto gen = testing::rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    LaurentPoly f = testing::random_laurent(gen, 2);
    double n2 = inner_nu(f, f).real();
    CHECK(n2 >= 0.0);
    CHECK((n2 == 0.0) == f.is_zero());
  }
}

TEST_CASE("eval") {
  CHECK(eval(LaurentPoly::constant(2, 5.0), std::vector<cplx>{cplx(0.3), cplx(-2.0)}) ==
        cplx(5.0));
  CHECK(eval(zeta(2, {1, 1}), std::vector<cplx>{cplx(2.0), cplx(3.0)}) == cplx(6.0));
  CHECK_THROWS_AS(eval(zeta(2, {-1, 0}), std::vector<cplx>{cplx(0.0), cplx(1.0)}), Error);
}

TEST_CASE("divide_exact on fixed examples") {
  LaurentPoly z1 = zeta(2, {1, 0}), z2 = zeta(2, {0, 1});
  LaurentPoly num = zeta(2, {2, 0}) - zeta(2, {0, 2});
  CHECK(coeff_distance(divide_exact(num, z1 - z2), z1 + z2) <= 1e-12);

  auto gen104 = testing::rng(104);
  LaurentPoly f = testing::random_laurent(gen104, 2);
  CHECK(coeff_distance(divide_exact(f, LaurentPoly::constant(2, 1.0)), f) == 0.0);

  LaurentPoly num2 = zeta(2, {2, 1}) - zeta(2, {1, 2});
  CHECK(coeff_distance(divide_exact(num2, z1 - z2), zeta(2, {1, 1})) <= 1e-12);

  CHECK_THROWS_AS(divide_exact(z1 + z2, z1 - z2), Error);
}

TEST_CASE("divide_exact round trip on random structured pairs") {
  auto gen = testing::rng(105);
  for (int trial = 0; trial < 30; ++trial) {
    LaurentPoly q = testing::random_laurent(gen, 2, 4, 2);
    LaurentPoly g = testing::random_laurent(gen, 2, 3, 2);
    if (g.is_zero() || q.is_zero()) continue;
    LaurentPoly f = q * g;
    CHECK(coeff_distance(divide_exact(f, g), q) <= 1e-9);
  }
}

TEST_CASE("homogeneous_component") {
  LaurentPoly f = LaurentPoly::constant(2, 1.0) + zeta(2, {1, 0}) + zeta(2, {1, 1});
  CHECK(coeff_distance(homogeneous_component(f, 2), zeta(2, {1, 1})) == 0.0);
  CHECK(homogeneous_component(f, 7).is_zero());
  CHECK_THROWS_AS(homogeneous_component(zeta(2, {-1, 0}), 0), Error);

  auto gen = testing::rng(106);
  for (int trial = 0; trial < 10; ++trial) {
    LaurentPoly g = testing::random_polynomial(gen, 2, 6, 4);
    LaurentPoly sum(2);
    for (int k = 0; k <= g.total_degree(); ++k) sum += homogeneous_component(g, k);
    CHECK(coeff_distance(sum, g) == 0.0);
  }
}

TEST_CASE("json round trip") {
  auto gen = testing::rng(107);
  LaurentPoly f = testing::random_laurent(gen, 3);
  LaurentPoly back = laurent_from_json(to_json(f));
  CHECK(back.dims() == f.dims());
  CHECK(coeff_distance(back, f) == 0.0);

  CHECK_THROWS_AS(laurent_from_json("{not json"), Error);
  CHECK_THROWS_AS(laurent_from_json("{\"terms\": []}"), Error);
}

TEST_CASE("coefficient pruning keeps support clean") {
  LaurentPoly f(1);
  f.add_term({0}, 1.0);
  f.add_term({0}, -1.0 + 1e-16);
  CHECK(f.is_zero());
}
