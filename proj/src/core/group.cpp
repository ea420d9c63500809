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
#include <cmath>
#include <numbers>

namespace qhl {

namespace {

// exp(2*pi*i*k/m) through a table lookup on k mod m, so that phases that are
// forced to be 1 (multiples of m) come out exactly 1.0.
cplx root_of_unity(int m, long k) {
  static thread_local int cached_m = 0;
  static thread_local std::vector<cplx> table;
  if (cached_m != m) {
    table.resize(m);
    for (int j = 0; j < m; ++j)
      table[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / m);
    table[0] = 1.0;
    if (m % 2 == 0) table[m / 2] = -1.0;
    if (m % 4 == 0) {
      table[m / 4] = cplx(0.0, 1.0);
      table[3 * m / 4] = cplx(0.0, -1.0);
    }
    cached_m = m;
  }
  long r = k % m;
  if (r < 0) r += m;
  return table[r];
}

int perm_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t j = i, len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

void check_params(int m, int t, int d) {
  if (m < 1 || t < 1 || d < 2 || m % t != 0)
    fail(errc::invalid_parameters, "need m,t >= 1, d >= 2 and t | m");
}

void check_same_group(const GroupElement& g, const GroupElement& h) {
  if (g.m != h.m || g.t != h.t || g.d != h.d)
    fail(errc::invalid_parameters, "elements of different groups");
}

long exps_sum(const GroupElement& g) {
  return std::accumulate(g.exps.begin(), g.exps.end(), 0L);
}

}  // namespace

bool GroupElement::is_identity() const {
  for (int j = 0; j < d; ++j)
    if (perm[j] != j || exps[j] != 0) return false;
  return true;
}

GroupElement group_identity(int m, int t, int d) {
  check_params(m, t, d);
  GroupElement e;
  e.m = m;
  e.t = t;
  e.d = d;
  e.perm.resize(d);
  for (int j = 0; j < d; ++j) e.perm[j] = j;
  e.exps.assign(d, 0);
  return e;
}

GroupElement group_compose(const GroupElement& g, const GroupElement& h) {
  check_same_group(g, h);
  GroupElement out;
  out.m = g.m;
  out.t = g.t;
  out.d = g.d;
  out.perm.resize(g.d);
  out.exps.resize(g.d);
  // ((g o h).z)_j = eps^(g.exps[j]) (h.z)_(g.perm[j])
  //              = eps^(g.exps[j] + h.exps[g.perm[j]]) z_(h.perm[g.perm[j]]).
  for (int j = 0; j < g.d; ++j) {
    out.perm[j] = h.perm[g.perm[j]];
    out.exps[j] = (g.exps[j] + h.exps[g.perm[j]]) % g.m;
  }
  return out;
}

GroupElement group_inverse(const GroupElement& g) {
  GroupElement out;
  out.m = g.m;
  out.t = g.t;
  out.d = g.d;
  out.perm.resize(g.d);
  out.exps.resize(g.d);
  for (int j = 0; j < g.d; ++j) out.perm[g.perm[j]] = j;
  for (int j = 0; j < g.d; ++j) {
    int e = (-g.exps[out.perm[j]]) % g.m;
    out.exps[j] = e < 0 ? e + g.m : e;
  }
  return out;
}

std::vector<cplx> apply_to_point(const GroupElement& g, std::span<const cplx> z) {
  if (static_cast<int>(z.size()) != g.d) fail(errc::dimension_mismatch, "point arity mismatch");
  std::vector<cplx> out(g.d);
  for (int j = 0; j < g.d; ++j) out[j] = root_of_unity(g.m, g.exps[j]) * z[g.perm[j]];
  return out;
}

LaurentPoly act_on_poly(const GroupElement& g, const LaurentPoly& f) {
  if (f.dims() != g.d) fail(errc::dimension_mismatch, "polynomial arity mismatch");
  LaurentPoly out(g.d);
  std::vector<int> beta(g.d);
  for (const auto& [alpha, c] : f.terms()) {
    long phase_exp = 0;
    for (int j = 0; j < g.d; ++j) {
      phase_exp += static_cast<long>(g.exps[j]) * alpha[j];
      beta[g.perm[j]] = alpha[j];
    }
    out.add_term(beta, c * root_of_unity(g.m, phase_exp));
  }
  return out;
}

std::vector<GroupElement> enumerate_group(int m, int t, int d) {
  check_params(m, t, d);
  std::vector<int> perm(d);
  for (int j = 0; j < d; ++j) perm[j] = j;

  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(std::pow(m, d)) * 24 / t);
  do {
    std::vector<int> exps(d, 0);
    while (true) {
      long s = std::accumulate(exps.begin(), exps.end(), 0L);
      if (s % t == 0) {
        GroupElement g;
        g.m = m;
        g.t = t;
        g.d = d;
        g.perm = perm;
        g.exps = exps;
        out.push_back(std::move(g));
      }
      // Odometer over {0..m-1}^d.
      int i = 0;
      while (i < d && ++exps[i] == m) exps[i++] = 0;
      if (i == d) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

cplx Character::value(const GroupElement& g) const {
  cplx v = root_of_unity(g.m, static_cast<long>(c) * exps_sum(g));
  if (a == 1 && perm_sign(g.perm) < 0) v = -v;
  return v;
}

std::vector<Character> characters_1d(int m, int t, int d) {
  check_params(m, t, d);
  auto group = enumerate_group(m, t, d);
  std::vector<Character> out;
  for (int a = 0; a <= 1; ++a) {
    for (int c = 0; c < m / t; ++c) {
      Character chi{a, c, m, t};
      // Exhaustive multiplicativity; the family is multiplicative by
      // construction, so a failure here is a bug.
      for (const auto& g : group) {
        for (const auto& h : group) {
          cplx lhs = chi.value(group_compose(g, h));
          cplx rhs = chi.value(g) * chi.value(h);
          if (std::abs(lhs - rhs) > 1e-12)
            fail(errc::internal, "character family lost multiplicativity");
        }
      }
      out.push_back(chi);
    }
  }
  return out;
}

std::vector<LaurentPoly> theta_map(int m, int t, int d) {
  check_params(m, t, d);
  std::vector<LaurentPoly> out;
  out.reserve(d);
  // E_i(z_1^m,...,z_d^m) accumulated over subsets of size i.
  for (int i = 1; i < d; ++i) {
    LaurentPoly e(d);
    std::vector<int> pick(i);
    for (int j = 0; j < i; ++j) pick[j] = j;
    while (true) {
      std::vector<int> alpha(d, 0);
      for (int j : pick) alpha[j] = m;
      e.add_term(alpha, 1.0);
      int j = i - 1;
      while (j >= 0 && pick[j] == d - i + j) --j;
      if (j < 0) break;
      ++pick[j];
      for (int k = j + 1; k < i; ++k) pick[k] = pick[k - 1] + 1;
    }
    out.push_back(std::move(e));
  }
  out.push_back(LaurentPoly::monomial(std::vector<int>(d, m / t)));
  return out;
}

LaurentPoly project_p_rho(const std::vector<GroupElement>& group, const Character& rho,
                          const LaurentPoly& f) {
  if (group.empty()) fail(errc::invalid_parameters, "empty group");
  LaurentPoly acc(f.dims());
  for (const auto& g : group) {
    // rho(g^-1) = conj(rho(g)) since |rho| = 1.
    acc += act_on_poly(g, f).scaled(std::conj(rho.value(g)));
  }
  return acc.scaled(1.0 / static_cast<double>(group.size()));
}

LaurentPoly invariantize(const std::vector<GroupElement>& group, const LaurentPoly& f) {
  Character trivial{0, 0, group.front().m, group.front().t};
  return project_p_rho(group, trivial, f);
}

double relative_invariance_residual(const std::vector<GroupElement>& group,
                                    const Character& rho, const LaurentPoly& f) {
  double worst = 0.0;
  for (const auto& g : group) {
    LaurentPoly diff = act_on_poly(g, f) - f.scaled(rho.value(g));
    worst = std::max(worst, diff.max_abs_coeff());
  }
  return worst;
}

namespace {

// Canonical (descending-sorted) exponent monomials of total degree k in d vars.
void canonical_monomials(int d, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> alpha(d, 0);
  // Partitions of k into at most d parts, largest first.
  std::function<void(int, int, int)> rec = [&](int pos, int remaining, int cap) {
    if (pos == d) {
      if (remaining == 0) out.push_back(alpha);
      return;
    }
    for (int v = std::min(cap, remaining); v >= 0; --v) {
      if (remaining - v > (d - pos - 1) * v) continue;  // later parts cannot exceed v
      alpha[pos] = v;
      rec(pos + 1, remaining - v, v);
    }
    alpha[pos] = 0;
  };
  rec(0, k, k);
}

}  // namespace

LaurentPoly compute_ell_rho(const std::vector<GroupElement>& group, const Character& rho,
                            int degree_cap) {
  if (degree_cap < 0) fail(errc::invalid_parameters, "degree_cap must be >= 0");
  const int d = group.front().d;

  LaurentPoly ell(d);
  int found_degree = -1;
  for (int k = 0; k <= degree_cap && found_degree < 0; ++k) {
    std::vector<std::vector<int>> monos;
    canonical_monomials(d, k, monos);
    std::vector<LaurentPoly> images;
    for (const auto& alpha : monos) {
      LaurentPoly img = project_p_rho(group, rho, LaurentPoly::monomial(alpha));
      if (!img.is_zero()) images.push_back(std::move(img));
    }
    if (images.empty()) continue;
    // The relative invariants of minimal degree form a one-dimensional space
    // generated by ell_rho, so all nonzero images here must be proportional.
    ell = images.front();
    for (std::size_t i = 1; i < images.size(); ++i) {
      const auto& lead = *ell.terms().rbegin();
      cplx ratio = images[i].coeff(lead.first) / lead.second;
      LaurentPoly diff = images[i] - ell.scaled(ratio);
      if (diff.max_abs_coeff() > 1e-10)
        fail(errc::internal, "minimal-degree relative invariants are not proportional");
    }
    found_degree = k;
  }
  if (found_degree < 0)
    fail(errc::not_found, "no nonzero relative invariant up to the degree cap");

  // Normalize the graded-lex-largest monomial to +1.
  ell = ell.scaled(1.0 / ell.terms().rbegin()->second);

  // Every higher-degree relative invariant must factor through ell_rho.
  for (int k = found_degree + 1; k <= degree_cap; ++k) {
    std::vector<std::vector<int>> monos;
    canonical_monomials(d, k, monos);
    for (const auto& alpha : monos) {
      LaurentPoly img = project_p_rho(group, rho, LaurentPoly::monomial(alpha));
      if (img.is_zero()) continue;
      divide_exact(img, ell);  // throws not-divisible on failure
    }
  }
  return ell;
}

QuotientContext QuotientContext::create(int m, int t, int d, int char_a, int char_c) {
  check_params(m, t, d);
  if (char_a < 0 || char_a > 1 || char_c < 0 || char_c >= m / t)
    fail(errc::invalid_parameters, "character outside the supported (a,c) family");

  QuotientContext ctx;
  ctx.m = m;
  ctx.t = t;
  ctx.d = d;
  ctx.group = enumerate_group(m, t, d);
  ctx.rho = Character{char_a, char_c, m, t};
  ctx.theta = theta_map(m, t, d);
  ctx.degrees.resize(d);
  for (int j = 0; j < d; ++j) ctx.degrees[j] = ctx.theta[j].total_degree();
  ctx.ell = compute_ell_rho(ctx.group, ctx.rho, 2 * d * m);
  ctx.m0 = ctx.ell.total_degree();
  return ctx;
}

LaurentPoly substitute_theta(const LaurentPoly& g_in_p, const QuotientContext& ctx) {
  if (g_in_p.dims() != 2 * ctx.d)
    fail(errc::malformed_input, "(p,pbar) symbols use 2d variables");
  if (!g_in_p.is_polynomial())
    fail(errc::malformed_input, "(p,pbar) symbols need nonnegative exponents");

  std::vector<LaurentPoly> conj_theta;
  conj_theta.reserve(ctx.d);
  for (const auto& th : ctx.theta) conj_theta.push_back(conj_on_torus(th));

  LaurentPoly out(ctx.d);
  for (const auto& [alpha, c] : g_in_p.terms()) {
    LaurentPoly term = LaurentPoly::constant(ctx.d, c);
    for (int j = 0; j < ctx.d; ++j)
      for (int rep = 0; rep < alpha[j]; ++rep) term = term * ctx.theta[j];
    for (int j = 0; j < ctx.d; ++j)
      for (int rep = 0; rep < alpha[ctx.d + j]; ++rep) term = term * conj_theta[j];
    out += term;
  }
  return out;
}

}  // namespace qhl
