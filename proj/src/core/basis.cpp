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
#include <functional>

#include "json.hpp"

namespace qhl {

namespace {

// Multiset projections of distinct candidates have disjoint monomial support,
// so a norm this small can only be an exactly-vanishing symmetrization plus
// float dust.
constexpr double kZeroProjectionTol = 1e-9;

// All descending-sorted vectors in {-D..D}^d.
void canonical_windows(int d, int D, std::vector<std::vector<int>>& out) {
  std::vector<int> lambda(d);
  std::function<void(int, int)> rec = [&](int pos, int hi) {
    if (pos == d) {
      out.push_back(lambda);
      return;
    }
    for (int v = hi; v >= -D; --v) {
      lambda[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, D);
}

}  // namespace

BasisSet::BasisSet(const QuotientContext& ctx, int window) : ctx_(&ctx), window_(window) {
  if (window < 0) fail(errc::invalid_parameters, "window must be >= 0");

  std::vector<std::vector<int>> candidates;
  canonical_windows(ctx.d, window, candidates);

  for (auto& lambda : candidates) {
    LaurentPoly e = project_p_rho(ctx.group, ctx.rho, LaurentPoly::monomial(lambda));
    double n = norm_nu(e);
    if (n <= kZeroProjectionTol) continue;
    e = e.scaled(1.0 / n);
    // P_rho is self-adjoint, so the coefficient at lambda equals
    // ||P_rho(zeta^lambda)||^2 / n > 0; rotate away any residual phase.
    cplx lead = e.coeff(lambda);
    if (std::abs(lead) <= kZeroProjectionTol)
      fail(errc::internal, "canonical coefficient vanished in a nonzero projection");
    e = e.scaled(std::abs(lead) / lead);

    BasisEntry entry;
    entry.lambda = lambda;
    entry.analytic = std::all_of(lambda.begin(), lambda.end(), [](int v) { return v >= 0; });
    entry.degree = static_cast<int>(std::accumulate(lambda.begin(), lambda.end(), 0L));
    entry.e = std::move(e);
    entries_.push_back(std::move(entry));
  }

  std::sort(entries_.begin(), entries_.end(), [](const BasisEntry& a, const BasisEntry& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.lambda < b.lambda;
  });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    index_[entries_[i].lambda] = i;
    (entries_[i].analytic ? analytic_ : coanalytic_).push_back(i);
  }
}

std::optional<std::size_t> BasisSet::find(const std::vector<int>& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double BasisSet::gram_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = i; j < entries_.size(); ++j) {
      cplx g = inner_nu(entries_[i].e, entries_[j].e);
      double expect = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(g - expect));
    }
  }
  return worst;
}

LaurentPoly relative_factor(const QuotientContext& ctx, const BasisEntry& entry) {
  if (!entry.analytic)
    fail(errc::invalid_parameters, "relative_factor is defined on analytic entries");
  try {
    return divide_exact(entry.e, ctx.ell);
  } catch (const Error& e) {
    if (e.code() == errc::not_divisible)
      fail(errc::internal, "basis entry not divisible by ell_rho");
    throw;
  }
}

std::string basis_to_json(const BasisSet& basis) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& entry : basis.entries()) {
    nlohmann::ordered_json item;
    item["lambda"] = entry.lambda;
    item["analytic"] = entry.analytic;
    item["degree"] = entry.degree;
    item["terms"] = nlohmann::ordered_json::array();
    for (const auto& [a, c] : entry.e.terms()) {
      nlohmann::ordered_json t;
      t["alpha"] = a;
      t["re"] = c.real();
      t["im"] = c.imag();
      item["terms"].push_back(t);
    }
    j.push_back(item);
  }
  return j.dump();
}

}  // namespace qhl
