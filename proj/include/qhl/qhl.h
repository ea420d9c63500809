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

/* C interface to the qhl shared library.
 *
 * Conventions:
 *  - Every function returns a qhl_status; QHL_OK is 0.
 *  - Objects are opaque handles created/destroyed by matching calls.
 *  - Report runners allocate NUL-terminated text through qhl_string_free;
 *    on QHL_ERR_CHECK_FAILED the text is still produced so callers can see
 *    which embedded check failed.
 *  - The last error message is thread local (qhl_last_error).
 */

#ifndef QHL_H
#define QHL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qhl_status {
  QHL_OK = 0,
  QHL_ERR_INVALID_ARGUMENT = 1, /* bad parameters or a violated precondition */
  QHL_ERR_CHECK_FAILED = 2,     /* a mathematical check embedded in a run failed */
  QHL_ERR_IO = 3,
  QHL_ERR_INTERNAL = 4
} qhl_status;

typedef enum qhl_format { QHL_FORMAT_CSV = 0, QHL_FORMAT_JSON = 1 } qhl_format;

const char* qhl_version(void);
const char* qhl_status_name(qhl_status status);

/* Message describing the most recent failure on this thread ("" if none). */
const char* qhl_last_error(void);

void qhl_string_free(char* text);

/* ---- handles ---------------------------------------------------------- */

/* Group G(m,t,d) with a chosen one-dimensional character (a, c), together
 * with the basic polynomials and the minimal relative invariant. */
typedef struct qhl_context qhl_context;

qhl_status qhl_context_create(int m, int t, int d, int char_a, int char_c,
                              qhl_context** out);
void qhl_context_destroy(qhl_context* ctx);

int qhl_context_group_order(const qhl_context* ctx);
int qhl_context_ell_degree(const qhl_context* ctx);

/* Number of supported characters of G(m,t,d), 2 * m / t. */
qhl_status qhl_character_count(int m, int t, int d, int* out);

/* Truncated orthonormal basis at the box window max|lambda_i| <= window. */
typedef struct qhl_basis qhl_basis;

qhl_status qhl_basis_build(const qhl_context* ctx, int window, qhl_basis** out);
void qhl_basis_destroy(qhl_basis* basis);
int qhl_basis_size(const qhl_basis* basis);
int qhl_basis_analytic_size(const qhl_basis* basis);
qhl_status qhl_basis_gram_residual(const qhl_basis* basis, double* out);
qhl_status qhl_basis_to_json(const qhl_basis* basis, char** out);

/* ---- spot evaluations -------------------------------------------------- */

/* Szego kernel of the quotient at (theta(z), theta(w)); points are length-d
 * interleaved re/im arrays. */
qhl_status qhl_szego_eval(const qhl_context* ctx, const double* z_reim,
                          const double* w_reim, double* out_re, double* out_im);

/* Poisson-Szego extension of the invariant Laurent datum (JSON) at theta(z),
 * on a q^d grid. */
qhl_status qhl_poisson_extension(const qhl_context* ctx, const char* laurent_json,
                                 const double* z_reim, int q, double* out_re,
                                 double* out_im);

/* ---- experiment runners ------------------------------------------------ */

qhl_status qhl_report_group(int m, int t, int d, qhl_format fmt, char** out);
qhl_status qhl_report_basis(const qhl_context* ctx, int window, qhl_format fmt, char** out);
qhl_status qhl_report_kernel(const qhl_context* ctx, int window, int num_points,
                             unsigned seed, qhl_format fmt, char** out);
/* symbol_json may be NULL: then num_symbols seeded random invariant symbols
 * are used. A provided symbol must be G-invariant. */
qhl_status qhl_report_toeplitz_check(const qhl_context* ctx, int window, int num_symbols,
                                     unsigned seed, const char* symbol_json,
                                     qhl_format fmt, char** out);
qhl_status qhl_report_hankel_rank(const qhl_context* ctx, int window, int gamma_max,
                                  double tol, qhl_format fmt, char** out);
qhl_status qhl_report_nehari(const qhl_context* ctx, int series_cutoff, int window,
                             int grid, int sweep, qhl_format fmt, char** out);
qhl_status qhl_report_bmo(const qhl_context* ctx, int window, int grid, qhl_format fmt,
                          char** out);
qhl_status qhl_report_pisier(qhl_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QHL_H */
