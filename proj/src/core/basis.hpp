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

#ifndef QHL_BASIS_HPP
#define QHL_BASIS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/group.hpp"

namespace qhl {

/// One orthonormal basis vector e_lambda of the rho-relative invariants.
/// lambda is the canonical (descending-sorted) exponent vector of the
/// symmetrized monomial; analytic marks lambda in Z_+^d.
struct BasisEntry {
  std::vector<int> lambda;
  LaurentPoly e{1};
  bool analytic = false;
  int degree = 0;  // algebraic total degree, sum of lambda
};

/// Truncated orthonormal basis of R_rho^G L2(T^d) built from P_rho(zeta^alpha)
/// over the box window max|alpha_i| <= D. Candidates whose projection
/// vanishes are dropped; permutation mates of alpha give the same vector up
/// to a unimodular constant and are deduplicated through the canonical
/// representative. Entries are sorted by (degree, lexicographic lambda) and
/// each is normalized with the coefficient of zeta^lambda positive real.
class BasisSet {
 public:
  BasisSet(const QuotientContext& ctx, int window);

  const QuotientContext& ctx() const { return *ctx_; }
  int window() const { return window_; }

  const std::vector<BasisEntry>& entries() const { return entries_; }
  const std::vector<std::size_t>& analytic_indices() const { return analytic_; }
  const std::vector<std::size_t>& coanalytic_indices() const { return coanalytic_; }

  const BasisEntry& entry(std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }

  /// Index of the entry with the given canonical lambda, if present.
  std::optional<std::size_t> find(const std::vector<int>& lambda) const;

  /// Largest |Gram(i,j) - delta_ij| over all pairs.
  double gram_residual() const;

 private:
  const QuotientContext* ctx_;
  int window_;
  std::vector<BasisEntry> entries_;
  std::vector<std::size_t> analytic_, coanalytic_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// The G-invariant cofactor g_hat with ell_rho * g_hat = e_lambda, defined for
/// analytic entries. A division failure indicates a basis construction bug
/// and is treated as fatal.
LaurentPoly relative_factor(const QuotientContext& ctx, const BasisEntry& entry);

/// JSON export: list of {lambda, terms} objects.
std::string basis_to_json(const BasisSet& basis);

}  // namespace qhl

#endif
