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

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace qhl {

void LaurentPoly::add_term(const std::vector<int>& alpha, cplx c) {
  if (static_cast<int>(alpha.size()) != dims_)
    fail(errc::dimension_mismatch, "exponent arity does not match dims");
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) <= kCoeffPruneTol) terms_.erase(it);
}

double LaurentPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [a, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

int LaurentPoly::total_degree() const {
  int deg = 0;
  for (const auto& [a, c] : terms_)
    deg = std::max(deg, static_cast<int>(std::accumulate(a.begin(), a.end(), 0L)));
  return deg;
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [a, c] : terms_)
    for (int e : a)
      if (e < 0) return false;
  return true;
}

bool LaurentPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d0 = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0L);
  for (const auto& [a, c] : terms_)
    if (std::accumulate(a.begin(), a.end(), 0L) != d0) return false;
  return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_dims(o);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_dims(o);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_dims(b);
  LaurentPoly out(a.dims_);
  std::vector<int> e(a.dims_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.dims_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::scaled(cplx s) const {
  LaurentPoly out(dims_);
  for (const auto& [a, c] : terms_) out.add_term(a, c * s);
  return out;
}

LaurentPoly conj_on_torus(const LaurentPoly& f) {
  LaurentPoly out(f.dims());
  std::vector<int> e(f.dims());
  for (const auto& [a, c] : f.terms()) {
    for (int i = 0; i < f.dims(); ++i) e[i] = -a[i];
    out.add_term(e, std::conj(c));
  }
  return out;
}

cplx inner_nu(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.dims() != g.dims()) fail(errc::dimension_mismatch, "inner_nu arity mismatch");
  // Pair through the smaller support.
  const LaurentPoly& small = f.term_count() <= g.term_count() ? f : g;
  const LaurentPoly& big = f.term_count() <= g.term_count() ? g : f;
  bool small_is_f = &small == &f;
  cplx acc = 0.0;
  for (const auto& [a, c] : small.terms()) {
    cplx o = big.coeff(a);
    if (o == cplx(0.0)) continue;
    acc += small_is_f ? c * std::conj(o) : o * std::conj(c);
  }
  return acc;
}

double norm_nu(const LaurentPoly& f) {
  double s = 0.0;
  for (const auto& [a, c] : f.terms()) s += std::norm(c);
  return std::sqrt(s);
}

cplx eval(const LaurentPoly& f, std::span<const cplx> z) {
  if (static_cast<int>(z.size()) != f.dims())
    fail(errc::dimension_mismatch, "evaluation point arity mismatch");
  cplx acc = 0.0;
  for (const auto& [a, c] : f.terms()) {
    cplx term = c;
    for (int i = 0; i < f.dims(); ++i) {
      int e = a[i];
      if (e == 0) continue;
      if (e < 0) {
        if (z[i] == cplx(0.0)) fail(errc::zero_division, "negative power at z_i = 0");
        term *= std::pow(cplx(1.0) / z[i], -e);
      } else {
        term *= std::pow(z[i], e);
      }
    }
    acc += term;
  }
  return acc;
}

LaurentPoly homogeneous_component(const LaurentPoly& f, int k) {
  if (!f.is_polynomial())
    fail(errc::invalid_parameters, "homogeneous_component needs nonnegative support");
  LaurentPoly out(f.dims());
  for (const auto& [a, c] : f.terms())
    if (std::accumulate(a.begin(), a.end(), 0L) == k) out.add_term(a, c);
  return out;
}

namespace {

// Componentwise minimum exponent over the support.
std::vector<int> support_floor(const LaurentPoly& f) {
  std::vector<int> lo(f.dims(), 0);
  bool first = true;
  for (const auto& [a, c] : f.terms()) {
    if (first) {
      lo = a;
      first = false;
    } else {
      for (int i = 0; i < f.dims(); ++i) lo[i] = std::min(lo[i], a[i]);
    }
  }
  return lo;
}

LaurentPoly shifted(const LaurentPoly& f, const std::vector<int>& shift) {
  LaurentPoly out(f.dims());
  std::vector<int> e(f.dims());
  for (const auto& [a, c] : f.terms()) {
    for (int i = 0; i < f.dims(); ++i) e[i] = a[i] + shift[i];
    out.add_term(e, c);
  }
  return out;
}

}  // namespace

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.dims() != g.dims()) fail(errc::dimension_mismatch, "divide_exact arity mismatch");
  if (g.is_zero()) fail(errc::invalid_parameters, "division by the zero polynomial");
  if (f.is_zero()) return LaurentPoly::zero(f.dims());

  // Clear negative exponents: monomials are units, so Laurent divisibility of
  // f by g is polynomial divisibility of the shifted representatives.
  std::vector<int> fl = support_floor(f), gl = support_floor(g);
  std::vector<int> neg_fl(f.dims()), neg_gl(f.dims());
  for (int i = 0; i < f.dims(); ++i) {
    neg_fl[i] = -fl[i];
    neg_gl[i] = -gl[i];
  }
  LaurentPoly num = shifted(f, neg_fl);
  LaurentPoly den = shifted(g, neg_gl);

  const double residual_tol = 1e-10 * f.max_abs_coeff();
  const auto& lead_g = *den.terms().rbegin();

  LaurentPoly q(f.dims());
  LaurentPoly rem = num;
  std::vector<int> e(f.dims());
  while (!rem.is_zero()) {
    const auto& lead_r = *rem.terms().rbegin();
    bool divides = true;
    for (int i = 0; i < f.dims(); ++i) {
      e[i] = lead_r.first[i] - lead_g.first[i];
      if (e[i] < 0) divides = false;
    }
    if (!divides) {
      // Drop a stuck term only if it is residual noise; anything larger is a failure.
      if (std::abs(lead_r.second) <= residual_tol) {
        rem -= LaurentPoly::monomial(lead_r.first, lead_r.second);
        continue;
      }
      fail(errc::not_divisible, "no exact quotient exists");
    }
    cplx qc = lead_r.second / lead_g.second;
    q.add_term(e, qc);
    rem -= LaurentPoly::monomial(e, qc) * den;
  }

  // Undo the clearing shift: q_true = zeta^(fl - gl) * q.
  std::vector<int> back(f.dims());
  for (int i = 0; i < f.dims(); ++i) back[i] = fl[i] - gl[i];
  return shifted(q, back);
}

std::string to_json(const LaurentPoly& f) {
  nlohmann::ordered_json j;
  j["dims"] = f.dims();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [a, c] : f.terms()) {
    nlohmann::ordered_json t;
    t["alpha"] = a;
    t["re"] = c.real();
    t["im"] = c.imag();
    j["terms"].push_back(t);
  }
  return j.dump();
}

LaurentPoly laurent_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::malformed_input, std::string("bad JSON: ") + e.what());
  }
  try {
    LaurentPoly p(j.at("dims").get<int>());
    for (const auto& t : j.at("terms")) {
      std::vector<int> alpha = t.at("alpha").get<std::vector<int>>();
      p.add_term(alpha, cplx(t.at("re").get<double>(), t.at("im").get<double>()));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::malformed_input, std::string("bad LaurentPoly JSON: ") + e.what());
  } catch (const Error&) {
    throw;
  }
}

}  // namespace qhl
