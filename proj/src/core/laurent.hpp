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

#ifndef QHL_LAURENT_HPP
#define QHL_LAURENT_HPP

#include <complex>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace qhl {

using cplx = std::complex<double>;

/// Coefficients with modulus at or below this are dropped from the support.
inline constexpr double kCoeffPruneTol = 1e-14;

/// Graded-lexicographic order on exponent vectors: total degree first, then
/// lexicographic. The maximal element under this order is the leading term
/// used by multivariate division.
struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long sa = std::accumulate(a.begin(), a.end(), 0L);
    long sb = std::accumulate(b.begin(), b.end(), 0L);
    if (sa != sb) return sa < sb;
    return a < b;
  }
};

/// Finitely supported complex function on Z^d exponents, i.e. a Laurent
/// polynomial on the d-torus. Immutable value semantics; all arithmetic
/// prunes coefficients below kCoeffPruneTol.
class LaurentPoly {
 public:
  using TermMap = std::map<std::vector<int>, cplx, GradedLexLess>;

  explicit LaurentPoly(int dims) : dims_(dims) {
    if (dims <= 0) fail(errc::invalid_parameters, "dims must be positive");
  }

  static LaurentPoly zero(int dims) { return LaurentPoly(dims); }

  static LaurentPoly constant(int dims, cplx c) {
    LaurentPoly p(dims);
    p.add_term(std::vector<int>(dims, 0), c);
    return p;
  }

  static LaurentPoly monomial(std::vector<int> alpha, cplx c = 1.0) {
    LaurentPoly p(static_cast<int>(alpha.size()));
    p.add_term(alpha, c);
    return p;
  }

  int dims() const { return dims_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient at alpha (zero if absent).
  cplx coeff(const std::vector<int>& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? cplx(0.0) : it->second;
  }

  /// Accumulates c onto the coefficient at alpha, pruning if tiny.
  void add_term(const std::vector<int>& alpha, cplx c);

  /// Largest |coefficient| over the support (0 for the zero polynomial).
  double max_abs_coeff() const;

  /// Max total degree over the support; 0 for the zero polynomial.
  int total_degree() const;

  /// True when every exponent is componentwise nonnegative.
  bool is_polynomial() const;

  /// True when all terms share the same total degree (vacuously true for 0).
  bool is_homogeneous() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(cplx s) const;

 private:
  int dims_;
  TermMap terms_;

  void check_dims(const LaurentPoly& o) const {
    if (o.dims_ != dims_) fail(errc::dimension_mismatch, "mismatched variable counts");
  }
};

/// Pointwise complex conjugate on the torus: coefficient c at alpha moves to
/// conj(c) at -alpha (zbar = 1/z when |z| = 1).
LaurentPoly conj_on_torus(const LaurentPoly& f);

/// Integral of f * conj(g) against normalized Haar measure on T^d, which is
/// the coefficient pairing sum_alpha c_alpha * conj(d_alpha).
cplx inner_nu(const LaurentPoly& f, const LaurentPoly& g);

/// L2(T^d) norm of f.
double norm_nu(const LaurentPoly& f);

/// Evaluates f at z. Throws zero-division when a negative power meets z_i = 0.
cplx eval(const LaurentPoly& f, std::span<const cplx> z);

/// Degree-k part of a polynomial (nonnegative support required).
LaurentPoly homogeneous_component(const LaurentPoly& f, int k);

/// Exact quotient q with q*g = f. Residual terms up to
/// 1e-10 * max|coeff of f| are forgiven; otherwise throws not-divisible.
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g);

/// JSON serialization: {"dims": d, "terms": [{"alpha": [..], "re": x, "im": y}, ...]}.
std::string to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const std::string& text);

}  // namespace qhl

#endif
