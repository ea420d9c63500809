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

#ifndef QHL_TEST_HELPERS_HPP
#define QHL_TEST_HELPERS_HPP

#include <numbers>
#include <random>

#include "core/laurent.hpp"

namespace qhl::testing {

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline cplx random_unit(std::mt19937& gen) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(gen));
}

inline cplx random_cplx(std::mt19937& gen, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(gen), u(gen)};
}

inline std::vector<cplx> random_torus_point(std::mt19937& gen, int d) {
  std::vector<cplx> z(d);
  for (auto& zi : z) zi = random_unit(gen);
  return z;
}

inline std::vector<cplx> random_disc_point(std::mt19937& gen, int d, double radius = 0.6) {
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<cplx> z(d);
  for (auto& zi : z) zi = cplx(u(gen), u(gen));
  return z;
}

inline LaurentPoly random_laurent(std::mt19937& gen, int d, int terms = 5, int spread = 3) {
  std::uniform_int_distribution<int> e(-spread, spread);
  LaurentPoly f(d);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> alpha(d);
    for (auto& a : alpha) a = e(gen);
    f.add_term(alpha, random_cplx(gen));
  }
  return f;
}

inline LaurentPoly random_polynomial(std::mt19937& gen, int d, int terms = 5, int max_deg = 3) {
  std::uniform_int_distribution<int> e(0, max_deg);
  LaurentPoly f(d);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> alpha(d);
    for (auto& a : alpha) a = e(gen);
    f.add_term(alpha, random_cplx(gen));
  }
  return f;
}

inline double coeff_distance(const LaurentPoly& a, const LaurentPoly& b) {
  return (a - b).max_abs_coeff();
}

}  // namespace qhl::testing

#endif
