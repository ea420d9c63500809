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

// Command-line front end. Talks to the library exclusively through the C API.
//
// Exit codes: 0 success, 1 when a mathematical check or I/O fails, 2 on
// invalid input (unknown subcommand, bad flags, violated preconditions).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qhl/qhl.h"

namespace {

struct CommonOpts {
  int m = 1, t = 1, d = 2;
  int char_a = 0, char_c = 0;
  int window = 8;
  int series = 16;
  int grid = 128;
  unsigned seed = 42;
  std::string out_path;
  std::string format = "csv";
};

void add_group_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--m", opts.m, "group parameter m (default 1)");
  cmd->add_option("--t", opts.t, "group parameter t, must divide m (default 1)");
  cmd->add_option("--d", opts.d, "dimension d >= 2 (default 2)");
}

void add_character_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--a", opts.char_a, "character sign exponent, 0 or 1 (default 0)");
  cmd->add_option("--c", opts.char_c, "character phase index in 0..m/t-1 (default 0)");
}

void add_output_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out_path, "output path (default stdout)");
  cmd->add_option("--format", opts.format, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
}

qhl_format format_of(const CommonOpts& opts) {
  return opts.format == "json" ? QHL_FORMAT_JSON : QHL_FORMAT_CSV;
}

int emit(const CommonOpts& opts, const char* text) {
  if (!text) return 1;
  if (opts.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(opts.out_path, std::ios::binary);
  if (!os || !(os << text) || !os.flush()) {
    std::cerr << "error: cannot write " << opts.out_path << "\n";
    return 1;
  }
  return 0;
}

// Shared tail: write the report, translate the library status to an exit code.
int finish(const CommonOpts& opts, qhl_status status, char* text) {
  std::unique_ptr<char, decltype(&qhl_string_free)> guard(text, &qhl_string_free);
  if (status == QHL_ERR_INVALID_ARGUMENT) {
    std::cerr << "error: " << qhl_last_error() << "\n";
    return 2;
  }
  if (status != QHL_OK && status != QHL_ERR_CHECK_FAILED) {
    std::cerr << "error: " << qhl_last_error() << "\n";
    return 1;
  }
  int io_rc = emit(opts, text);
  if (io_rc != 0) return io_rc;
  if (status == QHL_ERR_CHECK_FAILED) {
    std::cerr << "check failed: " << qhl_last_error() << "\n";
    return 1;
  }
  return 0;
}

struct ContextHandle {
  qhl_context* ptr = nullptr;
  ~ContextHandle() { qhl_context_destroy(ptr); }
};

int make_context(const CommonOpts& opts, ContextHandle& handle) {
  qhl_status st = qhl_context_create(opts.m, opts.t, opts.d, opts.char_a, opts.char_c,
                                     &handle.ptr);
  if (st != QHL_OK) {
    std::cerr << "error: " << qhl_last_error() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hardy spaces of quotient domains: groups, kernels, Toeplitz and "
               "Hankel truncations, and the associated norm experiments"};
  app.require_subcommand(1);

  CommonOpts opts;

  CLI::App* cmd_group = app.add_subcommand("group", "enumerate G(m,t,d) and its characters");
  add_group_flags(cmd_group, opts);
  add_output_flags(cmd_group, opts);

  CLI::App* cmd_basis = app.add_subcommand("basis", "build the basis and report the Gram residual");
  add_group_flags(cmd_basis, opts);
  add_character_flags(cmd_basis, opts);
  cmd_basis->add_option("--window", opts.window, "truncation window D (default 8)");
  add_output_flags(cmd_basis, opts);

  CLI::App* cmd_kernel = app.add_subcommand("kernel", "Szego evaluations and reproducing residuals");
  add_group_flags(cmd_kernel, opts);
  add_character_flags(cmd_kernel, opts);
  cmd_kernel->add_option("--window", opts.window, "truncation window D (default 8)");
  int num_points = 5;
  cmd_kernel->add_option("--points", num_points, "number of sample points (default 5)");
  cmd_kernel->add_option("--seed", opts.seed, "sampling seed (default 42)");
  add_output_flags(cmd_kernel, opts);

  CLI::App* cmd_toeplitz = app.add_subcommand("toeplitz-check", "Brown-Halmos residuals");
  add_group_flags(cmd_toeplitz, opts);
  add_character_flags(cmd_toeplitz, opts);
  cmd_toeplitz->add_option("--window", opts.window, "truncation window D (default 8)");
  int num_symbols = 10;
  std::string symbol_path;
  cmd_toeplitz->add_option("--symbols", num_symbols, "number of random invariant symbols (default 10)");
  cmd_toeplitz->add_option("--symbol-file", symbol_path, "JSON Laurent symbol to check instead");
  cmd_toeplitz->add_option("--seed", opts.seed, "symbol seed (default 42)");
  add_output_flags(cmd_toeplitz, opts);

  CLI::App* cmd_rank = app.add_subcommand("hankel-rank", "finite-rank table for monomial symbols");
  add_group_flags(cmd_rank, opts);
  add_character_flags(cmd_rank, opts);
  cmd_rank->add_option("--window", opts.window, "truncation window D (default 8)");
  int gamma_max = 3;
  double rank_tol = 1e-8;
  cmd_rank->add_option("--gamma-max", gamma_max, "largest |gamma| (default 3)");
  cmd_rank->add_option("--tol", rank_tol, "numerical rank tolerance (default 1e-8)");
  add_output_flags(cmd_rank, opts);

  CLI::App* cmd_nehari = app.add_subcommand("nehari", "bounded Hankel norm vs divergent sup bound");
  add_group_flags(cmd_nehari, opts);
  add_character_flags(cmd_nehari, opts);
  int nehari_window = -1;
  cmd_nehari->add_option("--N", opts.series, "series truncation (default 16)");
  cmd_nehari->add_option("--D", nehari_window, "basis window, >= N (default: N)");
  cmd_nehari->add_option("--q", opts.grid, "grid order, >= 4N (default 128)");
  bool sweep = false;
  cmd_nehari->add_flag("--sweep", sweep, "emit a doubling sweep N/8..N");
  add_output_flags(cmd_nehari, opts);

  CLI::App* cmd_bmo = app.add_subcommand("bmo", "mean-oscillation identity residuals");
  add_group_flags(cmd_bmo, opts);
  add_character_flags(cmd_bmo, opts);
  cmd_bmo->add_option("--window", opts.window, "truncation window D (default 8)");
  cmd_bmo->add_option("--q", opts.grid, "quadrature grid order (default 128)");
  add_output_flags(cmd_bmo, opts);

  CLI::App* cmd_pisier = app.add_subcommand("pisier", "matrix relations, norm sandwich, growth sweep");
  add_output_flags(cmd_pisier, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  char* text = nullptr;
  if (app.got_subcommand(cmd_group)) {
    qhl_status st = qhl_report_group(opts.m, opts.t, opts.d, format_of(opts), &text);
    return finish(opts, st, text);
  }

  ContextHandle ctx;
  if (int rc = make_context(opts, ctx); rc != 0) return rc;

  if (app.got_subcommand(cmd_basis)) {
    qhl_status st = qhl_report_basis(ctx.ptr, opts.window, format_of(opts), &text);
    return finish(opts, st, text);
  }
  if (app.got_subcommand(cmd_kernel)) {
    qhl_status st = qhl_report_kernel(ctx.ptr, opts.window, num_points, opts.seed,
                                      format_of(opts), &text);
    return finish(opts, st, text);
  }
  if (app.got_subcommand(cmd_toeplitz)) {
    std::string symbol_json;
    const char* symbol_arg = nullptr;
    if (!symbol_path.empty()) {
      std::ifstream is(symbol_path, std::ios::binary);
      if (!is) {
        std::cerr << "error: cannot read " << symbol_path << "\n";
        return 2;
      }
      std::ostringstream buf;
      buf << is.rdbuf();
      symbol_json = buf.str();
      symbol_arg = symbol_json.c_str();
    }
    qhl_status st = qhl_report_toeplitz_check(ctx.ptr, opts.window, num_symbols, opts.seed,
                                              symbol_arg, format_of(opts), &text);
    return finish(opts, st, text);
  }
  if (app.got_subcommand(cmd_rank)) {
    qhl_status st = qhl_report_hankel_rank(ctx.ptr, opts.window, gamma_max, rank_tol,
                                           format_of(opts), &text);
    return finish(opts, st, text);
  }
  if (app.got_subcommand(cmd_nehari)) {
    if (nehari_window < 0) nehari_window = opts.series;
    qhl_status st = qhl_report_nehari(ctx.ptr, opts.series, nehari_window, opts.grid,
                                      sweep ? 1 : 0, format_of(opts), &text);
    return finish(opts, st, text);
  }
  if (app.got_subcommand(cmd_bmo)) {
    qhl_status st = qhl_report_bmo(ctx.ptr, opts.window, opts.grid, format_of(opts), &text);
    return finish(opts, st, text);
  }
  if (app.got_subcommand(cmd_pisier)) {
    qhl_status st = qhl_report_pisier(format_of(opts), &text);
    return finish(opts, st, text);
  }
  std::cerr << "error: unknown subcommand\n";
  return 2;
}
