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

#ifndef QHL_GROUP_HPP
#define QHL_GROUP_HPP

#include <vector>

#include "core/laurent.hpp"

namespace qhl {

/// One element of the monomial-unitary group G(m,t,d): a permutation of the d
/// coordinates together with m-th roots of unity, acting as
///   (g.z)_j = eps^(exps[j]) * z_(perm[j]),  eps = exp(2*pi*i/m).
/// The exponent sum is 0 mod t, perm uses one-line notation, exps lives in
/// {0..m-1}^d.
struct GroupElement {
  std::vector<int> perm;
  std::vector<int> exps;
  int m = 1, t = 1, d = 2;

  bool is_identity() const;
  bool operator==(const GroupElement& o) const {
    return perm == o.perm && exps == o.exps && m == o.m && t == o.t && d == o.d;
  }
};

GroupElement group_identity(int m, int t, int d);

/// Composition with the fixed convention (g o h).z = g.(h.z).
GroupElement group_compose(const GroupElement& g, const GroupElement& h);

GroupElement group_inverse(const GroupElement& g);

/// Image of the point z under g.
std::vector<cplx> apply_to_point(const GroupElement& g, std::span<const cplx> z);

/// The induced action on functions, (g.f)(z) = f(g.z). A monomial zeta^alpha
/// maps to eps^(exps . alpha) times the monomial with exponents permuted by
/// beta[perm[j]] = alpha[j].
LaurentPoly act_on_poly(const GroupElement& g, const LaurentPoly& f);

/// All m^d * d!/t elements of G(m,t,d). Throws invalid-parameters unless
/// t | m and d >= 2.
std::vector<GroupElement> enumerate_group(int m, int t, int d);

/// Determinant-type one-dimensional representation
///   g -> sgn(perm)^a * eps^(c * sum(exps)),  a in {0,1}, c in {0..m/t-1}.
/// Degenerate small groups may possess further one-dimensional characters
/// outside this family; those are not modeled here.
struct Character {
  int a = 0, c = 0;
  int m = 1, t = 1;

  cplx value(const GroupElement& g) const;
  bool is_trivial() const { return a == 0 && c == 0; }
};

/// The full supported character family for G(m,t,d); every member passes an
/// exhaustive multiplicativity check at construction.
std::vector<Character> characters_1d(int m, int t, int d);

/// Rudin's basic polynomials for G(m,t,d):
///   theta_i = E_i(z_1^m, ..., z_d^m) for i < d,  theta_d = (z_1...z_d)^(m/t),
/// with E_i the elementary symmetric polynomials.
std::vector<LaurentPoly> theta_map(int m, int t, int d);

/// Averaging projection P_rho(psi) = (1/|G|) sum_sigma rho(sigma^-1) sigma(psi)
/// onto the rho-relative invariants.
LaurentPoly project_p_rho(const std::vector<GroupElement>& group, const Character& rho,
                          const LaurentPoly& f);

/// Minimal-degree homogeneous generator ell_rho of the relative invariants,
/// normalized so its graded-lex-largest monomial has coefficient +1. Searches
/// P_rho images of canonical monomials degree by degree and verifies that
/// every image up to degree_cap is exactly divisible by the result. Throws
/// not-found when no nonzero relative invariant exists up to degree_cap.
LaurentPoly compute_ell_rho(const std::vector<GroupElement>& group, const Character& rho,
                            int degree_cap);

/// Bundles everything downstream computations need about one (G(m,t,d), rho)
/// pair: the enumerated group, the basic polynomials and their degrees, and
/// the relative invariant ell_rho.
struct QuotientContext {
  int m = 1, t = 1, d = 2;
  std::vector<GroupElement> group;
  Character rho;
  std::vector<LaurentPoly> theta;
  std::vector<int> degrees;  // degrees m_1..m_d of theta_1..theta_d
  LaurentPoly ell{1};
  int m0 = 0;                // degree of ell_rho

  static QuotientContext create(int m, int t, int d, int char_a, int char_c);
};

/// G-invariantization (1/|G|) sum_g g(f); equals f when f is invariant.
LaurentPoly invariantize(const std::vector<GroupElement>& group, const LaurentPoly& f);

/// Largest coefficientwise deviation of f from rho-relative invariance,
/// max_g ||g(f) - rho(g) f||_inf.
double relative_invariance_residual(const std::vector<GroupElement>& group,
                                    const Character& rho, const LaurentPoly& f);

/// Symbols given on the quotient side as polynomials in the 2d variables
/// (p_1..p_d, pbar_1..pbar_d) pull back to the torus by substituting
/// p_j -> theta_j and pbar_j -> conj_on_torus(theta_j).
LaurentPoly substitute_theta(const LaurentPoly& g_in_p, const QuotientContext& ctx);

}  // namespace qhl

#endif
