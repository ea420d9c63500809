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

#ifndef QHL_REPORT_HPP
#define QHL_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/operators.hpp"
#include "core/pisier.hpp"

namespace qhl {

enum class ReportFormat { csv, json };

/// Text payload of one experiment run plus the outcome of the checks baked
/// into it. Output is byte-deterministic for fixed inputs: stable field
/// order, 12 significant digits.
struct ReportResult {
  std::string text;
  bool checks_passed = true;
  std::vector<std::string> failures;
};

/// %.12g formatting shared by every emitter.
std::string format_double(double v);

ReportResult report_group(int m, int t, int d, ReportFormat fmt);

ReportResult report_basis(const QuotientContext& ctx, int window, ReportFormat fmt);

ReportResult report_kernel(const QuotientContext& ctx, int window, int num_points,
                           unsigned seed, ReportFormat fmt);

/// Brown-Halmos residuals for `num_symbols` seeded random invariant symbols,
/// or for the single provided symbol when `symbol` is set.
ReportResult report_toeplitz_check(const QuotientContext& ctx, int window, int num_symbols,
                                   unsigned seed, const std::optional<LaurentPoly>& symbol,
                                   ReportFormat fmt);

/// Finite-rank table over all gamma with |gamma| <= gamma_max.
ReportResult report_hankel_rank(const QuotientContext& ctx, int window, int gamma_max,
                                double tol, ReportFormat fmt);

/// Single row at N, or a doubling sweep N/8, N/4, N/2, N when sweep is set.
ReportResult report_nehari(const QuotientContext& ctx, int N, int window, int q, bool sweep,
                           ReportFormat fmt);

ReportResult report_bmo(const QuotientContext& ctx, int window, int q, ReportFormat fmt);

ReportResult report_pisier(ReportFormat fmt);

/// CSV with the header N,D,hankel_norm,phi0_sup_lower,lambda1_prime,lambda2_prime.
std::string nehari_csv(const std::vector<NehariReport>& rows);

/// Deterministic seeded helpers shared with the test suites.
std::vector<std::vector<cplx>> sample_interior_points(const QuotientContext& ctx, int count,
                                                      unsigned seed, double radius = 0.5);
LaurentPoly random_invariant_symbol(const QuotientContext& ctx, unsigned seed, int terms = 4,
                                    int spread = 2);

}  // namespace qhl

#endif
