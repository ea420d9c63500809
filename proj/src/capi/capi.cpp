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

#include "qhl/qhl.h"

#include <cstring>
#include <new>
#include <string>

#include "core/basis.hpp"
#include "core/kernels.hpp"
#include "core/report.hpp"

struct qhl_context {
  qhl::QuotientContext ctx;
};

struct qhl_basis {
  qhl::QuotientContext ctx;  // owned copy so the basis outlives its creator
  qhl::BasisSet basis;
  qhl_basis(const qhl::QuotientContext& c, int window) : ctx(c), basis(ctx, window) {}
};

namespace {

thread_local std::string g_last_error;

qhl_status status_of(const qhl::Error& e) {
  using qhl::errc;
  switch (e.code()) {
    case errc::internal:
      return QHL_ERR_INTERNAL;
    default:
      return QHL_ERR_INVALID_ARGUMENT;
  }
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
qhl_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const qhl::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QHL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QHL_ERR_INTERNAL;
  }
}

qhl_status finish_report(const qhl::ReportResult& report, char** out) {
  if (out) *out = dup_string(report.text);
  if (!report.checks_passed) {
    g_last_error = report.failures.empty() ? "check failed" : report.failures.front();
    return QHL_ERR_CHECK_FAILED;
  }
  return QHL_OK;
}

qhl::ReportFormat to_format(qhl_format fmt) {
  return fmt == QHL_FORMAT_JSON ? qhl::ReportFormat::json : qhl::ReportFormat::csv;
}

std::vector<qhl::cplx> read_point(const double* reim, int d) {
  std::vector<qhl::cplx> z(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) z[static_cast<std::size_t>(j)] = {reim[2 * j], reim[2 * j + 1]};
  return z;
}

}  // namespace

extern "C" {

const char* qhl_version(void) { return "0.1.0"; }

const char* qhl_status_name(qhl_status status) {
  switch (status) {
    case QHL_OK: return "ok";
    case QHL_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case QHL_ERR_CHECK_FAILED: return "check-failed";
    case QHL_ERR_IO: return "io-error";
    case QHL_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* qhl_last_error(void) { return g_last_error.c_str(); }

void qhl_string_free(char* text) { delete[] text; }

qhl_status qhl_context_create(int m, int t, int d, int char_a, int char_c,
                              qhl_context** out) {
  if (!out) return QHL_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&]() -> qhl_status {
    auto* handle = new qhl_context{qhl::QuotientContext::create(m, t, d, char_a, char_c)};
    *out = handle;
    return QHL_OK;
  });
}

void qhl_context_destroy(qhl_context* ctx) { delete ctx; }

int qhl_context_group_order(const qhl_context* ctx) {
  return ctx ? static_cast<int>(ctx->ctx.group.size()) : 0;
}

int qhl_context_ell_degree(const qhl_context* ctx) { return ctx ? ctx->ctx.m0 : 0; }

qhl_status qhl_character_count(int m, int t, int d, int* out) {
  if (!out) return QHL_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qhl_status {
    *out = static_cast<int>(qhl::characters_1d(m, t, d).size());
    return QHL_OK;
  });
}

qhl_status qhl_basis_build(const qhl_context* ctx, int window, qhl_basis** out) {
  if (!ctx || !out) return QHL_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&]() -> qhl_status {
    *out = new qhl_basis(ctx->ctx, window);
    return QHL_OK;
  });
}

void qhl_basis_destroy(qhl_basis* basis) { delete basis; }

int qhl_basis_size(const qhl_basis* basis) {
  return basis ? static_cast<int>(basis->basis.size()) : 0;
}

int qhl_basis_analytic_size(const qhl_basis* basis) {
  return basis ? static_cast<int>(basis->basis.analytic_indices().size()) : 0;
}

qhl_status qhl_basis_gram_residual(const qhl_basis* basis, double* out) {
  if (!basis || !out) return QHL_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qhl_status {
    *out = basis->basis.gram_residual();
    return QHL_OK;
  });
}

qhl_status qhl_basis_to_json(const qhl_basis* basis, char** out) {
  if (!basis || !out) return QHL_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qhl_status {
    *out = dup_string(qhl::basis_to_json(basis->basis));
    return QHL_OK;
  });
}

qhl_status qhl_szego_eval(const qhl_context* ctx, const double* z_reim, const double* w_reim,
                          double* out_re, double* out_im) {
  if (!ctx || !z_reim || !w_reim || !out_re || !out_im) return QHL_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qhl_status {
    auto z = read_point(z_reim, ctx->ctx.d);
    auto w = read_point(w_reim, ctx->ctx.d);
    qhl::cplx v = qhl::szego_kernel(ctx->ctx, z, w);
    *out_re = v.real();
    *out_im = v.imag();
    return QHL_OK;
  });
}

qhl_status qhl_poisson_extension(const qhl_context* ctx, const char* laurent_json,
                                 const double* z_reim, int q, double* out_re,
                                 double* out_im) {
  if (!ctx || !laurent_json || !z_reim || !out_re || !out_im)
    return QHL_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qhl_status {
    qhl::LaurentPoly f = qhl::laurent_from_json(laurent_json);
    auto z = read_point(z_reim, ctx->ctx.d);
    qhl::cplx v = qhl::poisson_extension(ctx->ctx, f, z, q);
    *out_re = v.real();
    *out_im = v.imag();
    return QHL_OK;
  });
}

qhl_status qhl_report_group(int m, int t, int d, qhl_format fmt, char** out) {
  if (!out) return QHL_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qhl_status {
    return finish_report(qhl::report_group(m, t, d, to_format(fmt)), out);
  });
}

qhl_status qhl_report_basis(const qhl_context* ctx, int window, qhl_format fmt, char** out) {
  if (!ctx || !out) return QHL_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qhl_status {
    return finish_report(qhl::report_basis(ctx->ctx, window, to_format(fmt)), out);
  });
}

qhl_status qhl_report_kernel(const qhl_context* ctx, int window, int num_points,
                             unsigned seed, qhl_format fmt, char** out) {
  if (!ctx || !out) return QHL_ERR_INVALID_ARGUMENT;
  if (num_points < 1) return QHL_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qhl_status {
    return finish_report(qhl::report_kernel(ctx->ctx, window, num_points, seed, to_format(fmt)),
                         out);
  });
}

qhl_status qhl_report_toeplitz_check(const qhl_context* ctx, int window, int num_symbols,
                                     unsigned seed, const char* symbol_json, qhl_format fmt,
                                     char** out) {
  if (!ctx || !out) return QHL_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qhl_status {
    std::optional<qhl::LaurentPoly> symbol;
    if (symbol_json) symbol = qhl::laurent_from_json(symbol_json);
    return finish_report(qhl::report_toeplitz_check(ctx->ctx, window, num_symbols, seed,
                                                    symbol, to_format(fmt)),
                         out);
  });
}

qhl_status qhl_report_hankel_rank(const qhl_context* ctx, int window, int gamma_max,
                                  double tol, qhl_format fmt, char** out) {
  if (!ctx || !out) return QHL_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qhl_status {
    return finish_report(
        qhl::report_hankel_rank(ctx->ctx, window, gamma_max, tol, to_format(fmt)), out);
  });
}

qhl_status qhl_report_nehari(const qhl_context* ctx, int series_cutoff, int window, int grid,
                             int sweep, qhl_format fmt, char** out) {
  if (!ctx || !out) return QHL_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qhl_status {
    return finish_report(qhl::report_nehari(ctx->ctx, series_cutoff, window, grid, sweep != 0,
                                            to_format(fmt)),
                         out);
  });
}

qhl_status qhl_report_bmo(const qhl_context* ctx, int window, int grid, qhl_format fmt,
                          char** out) {
  if (!ctx || !out) return QHL_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qhl_status {
    return finish_report(qhl::report_bmo(ctx->ctx, window, grid, to_format(fmt)), out);
  });
}

qhl_status qhl_report_pisier(qhl_format fmt, char** out) {
  if (!out) return QHL_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> qhl_status {
    return finish_report(qhl::report_pisier(to_format(fmt)), out);
  });
}

}  // extern "C"
