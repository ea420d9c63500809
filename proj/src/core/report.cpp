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

#include "core/report.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "core/kernels.hpp"
#include "core/parallel.hpp"
#include "json.hpp"

namespace qhl {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string ints_to_string(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string format_cplx(cplx v) {
  return format_double(v.real()) + (v.imag() < 0 ? "-" : "+") +
         format_double(std::abs(v.imag())) + "i";
}

void note_check(ReportResult& r, bool ok, const std::string& what) {
  if (!ok) {
    r.checks_passed = false;
    r.failures.push_back(what);
  }
}

// All gamma in Z_+^d with 1 <= |gamma| <= gamma_max, lexicographic.
std::vector<std::vector<int>> gamma_list(int d, int gamma_max) {
  std::vector<std::vector<int>> out;
  std::vector<int> g(d, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == d) {
      if (std::accumulate(g.begin(), g.end(), 0) >= 1) out.push_back(g);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      g[pos] = v;
      rec(pos + 1, remaining - v);
    }
    g[pos] = 0;
  };
  rec(0, gamma_max);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<std::vector<cplx>> sample_interior_points(const QuotientContext& ctx, int count,
                                                      unsigned seed, double radius) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<std::vector<cplx>> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<cplx> z(ctx.d);
    for (int j = 0; j < ctx.d; ++j) z[j] = cplx(u(rng), u(rng));
    if (std::abs(eval(ctx.ell, z)) > 1e-2) out.push_back(std::move(z));
  }
  return out;
}

LaurentPoly random_invariant_symbol(const QuotientContext& ctx, unsigned seed, int terms,
                                    int spread) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> e(-spread, spread);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  LaurentPoly f(ctx.d);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> alpha(ctx.d);
    for (int j = 0; j < ctx.d; ++j) alpha[j] = e(rng);
    f.add_term(alpha, cplx(u(rng), u(rng)));
  }
  LaurentPoly psi = invariantize(ctx.group, f);
  if (psi.is_zero()) psi = LaurentPoly::constant(ctx.d, 1.0);
  return psi;
}

ReportResult report_group(int m, int t, int d, ReportFormat fmt) {
  auto group = enumerate_group(m, t, d);
  auto chars = characters_1d(m, t, d);

  ReportResult r;
  if (fmt == ReportFormat::csv) {
    std::ostringstream os;
    os << "m,t,d,order,num_characters\n"
       << m << ',' << t << ',' << d << ',' << group.size() << ',' << chars.size() << '\n';
    os << "element,perm,exps\n";
    for (std::size_t i = 0; i < group.size(); ++i)
      os << i << ',' << ints_to_string(group[i].perm) << ',' << ints_to_string(group[i].exps)
         << '\n';
    os << "character,a,c\n";
    for (std::size_t i = 0; i < chars.size(); ++i)
      os << i << ',' << chars[i].a << ',' << chars[i].c << '\n';
    r.text = os.str();
  } else {
    ordered_json j;
    j["m"] = m;
    j["t"] = t;
    j["d"] = d;
    j["order"] = group.size();
    j["elements"] = ordered_json::array();
    for (const auto& g : group)
      j["elements"].push_back({{"perm", g.perm}, {"exps", g.exps}});
    j["characters"] = ordered_json::array();
    for (const auto& chi : chars) j["characters"].push_back({{"a", chi.a}, {"c", chi.c}});
    r.text = j.dump(2) + "\n";
  }
  return r;
}

ReportResult report_basis(const QuotientContext& ctx, int window, ReportFormat fmt) {
  BasisSet basis(ctx, window);
  double gram = basis.gram_residual();

  ReportResult r;
  note_check(r, gram <= 1e-10, "gram residual " + format_double(gram) + " above 1e-10");
  if (fmt == ReportFormat::csv) {
    std::ostringstream os;
    os << "window,size,analytic,coanalytic,gram_residual,pass\n";
    os << window << ',' << basis.size() << ',' << basis.analytic_indices().size() << ','
       << basis.coanalytic_indices().size() << ',' << format_double(gram) << ','
       << (r.checks_passed ? 1 : 0) << '\n';
    r.text = os.str();
  } else {
    ordered_json j;
    j["window"] = window;
    j["size"] = basis.size();
    j["gram_residual"] = gram;
    j["pass"] = r.checks_passed;
    j["basis"] = nlohmann::ordered_json::parse(basis_to_json(basis));
    r.text = j.dump(2) + "\n";
  }
  return r;
}

ReportResult report_kernel(const QuotientContext& ctx, int window, int num_points,
                           unsigned seed, ReportFormat fmt) {
  BasisSet basis(ctx, window);
  auto zs = sample_interior_points(ctx, num_points, seed, 0.45);
  auto ws = sample_interior_points(ctx, num_points, seed + 1, 0.45);
  // A relative-invariant polynomial datum for the reproducing test.
  LaurentPoly f = ctx.ell * (LaurentPoly::constant(ctx.d, 1.0) + ctx.theta[0]);

  ReportResult r;
  std::ostringstream os;
  ordered_json rows = ordered_json::array();
  if (fmt == ReportFormat::csv)
    os << "point,closed,series,series_gap,hermitian_residual,orbit_residual,"
          "reproducing_residual\n";
  for (int i = 0; i < num_points; ++i) {
    std::span<const cplx> z(zs[i]);
    std::span<const cplx> w(ws[i]);
    cplx closed = szego_kernel(ctx, z, w);
    cplx series = szego_kernel_series(ctx, basis, z, w);
    double gap = std::abs(closed - series);
    double herm = std::abs(closed - std::conj(szego_kernel(ctx, w, z)));
    double orbit = 0.0;
    for (const auto& g : ctx.group) {
      std::vector<cplx> gz = apply_to_point(g, z);
      orbit = std::max(orbit, std::abs(szego_kernel(ctx, gz, w) - closed));
    }
    double repro = reproducing_check(ctx, basis, f, w);
    note_check(r, herm <= 1e-10, "hermitian symmetry residual " + format_double(herm));
    note_check(r, orbit <= 1e-10, "orbit invariance residual " + format_double(orbit));
    if (window >= f.total_degree() + 1)
      note_check(r, repro <= 1e-8, "reproducing residual " + format_double(repro));
    if (fmt == ReportFormat::csv) {
      os << i << ',' << format_cplx(closed) << ',' << format_cplx(series) << ','
         << format_double(gap) << ',' << format_double(herm) << ',' << format_double(orbit)
         << ',' << format_double(repro) << '\n';
    } else {
      rows.push_back({{"point", i},
                      {"closed", {closed.real(), closed.imag()}},
                      {"series", {series.real(), series.imag()}},
                      {"series_gap", gap},
                      {"hermitian_residual", herm},
                      {"orbit_residual", orbit},
                      {"reproducing_residual", repro}});
    }
  }
  if (fmt == ReportFormat::csv) {
    r.text = os.str();
  } else {
    ordered_json j;
    j["window"] = window;
    j["pass"] = r.checks_passed;
    j["rows"] = rows;
    r.text = j.dump(2) + "\n";
  }
  return r;
}

ReportResult report_toeplitz_check(const QuotientContext& ctx, int window, int num_symbols,
                                   unsigned seed, const std::optional<LaurentPoly>& symbol,
                                   ReportFormat fmt) {
  BasisSet basis(ctx, window);
  std::vector<LaurentPoly> symbols;
  if (symbol) {
    symbols.push_back(*symbol);
  } else {
    for (int k = 0; k < num_symbols; ++k)
      symbols.push_back(random_invariant_symbol(ctx, seed + static_cast<unsigned>(k)));
  }

  ReportResult r;
  std::ostringstream os;
  ordered_json rows = ordered_json::array();
  if (fmt == ReportFormat::csv) os << "symbol,relation,residual,interior,pass\n";
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    RelationReport rel = check_brown_halmos(ctx, basis, symbols[s]);
    for (const auto& [name, res] : rel.residuals) {
      bool ok = res <= 1e-10;
      note_check(r, ok, "relation " + name + " residual " + format_double(res));
      if (fmt == ReportFormat::csv)
        os << s << ',' << name << ',' << format_double(res) << ',' << rel.interior_count << ','
           << (ok ? 1 : 0) << '\n';
      else
        rows.push_back({{"symbol", s},
                        {"relation", name},
                        {"residual", res},
                        {"interior", rel.interior_count},
                        {"pass", ok}});
    }
  }
  if (fmt == ReportFormat::csv) {
    r.text = os.str();
  } else {
    ordered_json j;
    j["window"] = window;
    j["pass"] = r.checks_passed;
    j["rows"] = rows;
    r.text = j.dump(2) + "\n";
  }
  return r;
}

ReportResult report_hankel_rank(const QuotientContext& ctx, int window, int gamma_max,
                                double tol, ReportFormat fmt) {
  BasisSet basis(ctx, window);
  auto gammas = gamma_list(ctx.d, gamma_max);

  struct Row {
    std::vector<int> gamma;
    int d0 = 0, bound = 0, rank = 0;
    bool ok = false;
  };
  std::vector<Row> table(gammas.size());
  parallel_for(gammas.size(), [&](std::size_t i) {
    Row row;
    row.gamma = gammas[i];
    row.d0 = ctx.m0;
    LaurentPoly psi = LaurentPoly::constant(ctx.d, 1.0);
    for (int j = 0; j < ctx.d; ++j) {
      row.d0 += gammas[i][j] * ctx.degrees[j];
      for (int rep = 0; rep < gammas[i][j]; ++rep) psi = psi * ctx.theta[j];
    }
    row.bound = count_low_degree_analytic(ctx, row.d0);
    row.rank = matrix_rank(small_hankel_matrix(ctx, basis, psi), tol);
    row.ok = row.rank <= row.bound;
    table[i] = std::move(row);
  });

  ReportResult r;
  std::ostringstream os;
  ordered_json rows = ordered_json::array();
  if (fmt == ReportFormat::csv) os << "gamma,d0,bound,rank,pass\n";
  for (const auto& row : table) {
    note_check(r, row.ok,
               "rank " + std::to_string(row.rank) + " above bound " + std::to_string(row.bound) +
                   " at gamma " + ints_to_string(row.gamma));
    if (fmt == ReportFormat::csv)
      os << ints_to_string(row.gamma) << ',' << row.d0 << ',' << row.bound << ',' << row.rank
         << ',' << (row.ok ? 1 : 0) << '\n';
    else
      rows.push_back({{"gamma", row.gamma},
                      {"d0", row.d0},
                      {"bound", row.bound},
                      {"rank", row.rank},
                      {"pass", row.ok}});
  }
  if (fmt == ReportFormat::csv) {
    r.text = os.str();
  } else {
    ordered_json j;
    j["window"] = window;
    j["tol"] = tol;
    j["pass"] = r.checks_passed;
    j["rows"] = rows;
    r.text = j.dump(2) + "\n";
  }
  return r;
}

std::string nehari_csv(const std::vector<NehariReport>& rows) {
  std::ostringstream os;
  os << "N,D,hankel_norm,phi0_sup_lower,lambda1_prime,lambda2_prime\n";
  for (const auto& row : rows)
    os << row.N << ',' << row.D << ',' << format_double(row.hankel_norm) << ','
       << format_double(row.phi0_sup_lower) << ',' << row.lambda1_prime << ','
       << row.lambda2_prime << '\n';
  return os.str();
}

ReportResult report_nehari(const QuotientContext& ctx, int N, int window, int q, bool sweep,
                           ReportFormat fmt) {
  std::vector<int> cutoffs;
  if (sweep) {
    for (int n = N / 8; n <= N; n *= 2)
      if (n >= 2) cutoffs.push_back(n);
    if (cutoffs.empty()) cutoffs.push_back(N);
  } else {
    cutoffs.push_back(N);
  }

  std::vector<NehariReport> rows(cutoffs.size());
  parallel_for(cutoffs.size(), [&](std::size_t i) {
    rows[i] = nehari_experiment(ctx, cutoffs[i], window, q);
  });

  ReportResult r;
  if (fmt == ReportFormat::csv) {
    r.text = nehari_csv(rows);
  } else {
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (const auto& row : rows)
      j["rows"].push_back({{"N", row.N},
                           {"D", row.D},
                           {"hankel_norm", row.hankel_norm},
                           {"phi0_sup_lower", row.phi0_sup_lower},
                           {"lambda1_prime", row.lambda1_prime},
                           {"lambda2_prime", row.lambda2_prime}});
    r.text = j.dump(2) + "\n";
  }
  return r;
}

ReportResult report_bmo(const QuotientContext& ctx, int window, int q, ReportFormat fmt) {
  BasisSet basis(ctx, window);
  std::vector<LaurentPoly> symbols;
  symbols.push_back(ctx.theta[0] + conj_on_torus(ctx.theta[0]));
  symbols.push_back(ctx.theta.back() + conj_on_torus(ctx.theta.back()).scaled(0.5));
  symbols.push_back(LaurentPoly::constant(ctx.d, 1.0) +
                    ctx.theta[0] * conj_on_torus(ctx.theta.back()));
  auto points = sample_interior_points(ctx, 3, 7, 0.4);

  ReportResult r;
  std::ostringstream os;
  ordered_json rows = ordered_json::array();
  if (fmt == ReportFormat::csv)
    os << "symbol,point,lhs,rhs,residual1,residual2,hankel_f,hankel_fbar\n";
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    for (std::size_t p = 0; p < points.size(); ++p) {
      BmoIdentityReport b = bmo_identity_check(ctx, basis, symbols[s], points[p], q);
      note_check(r, b.residual1 <= 1e-6,
                 "two-quadrature residual " + format_double(b.residual1));
      if (fmt == ReportFormat::csv)
        os << s << ',' << p << ',' << format_double(b.lhs) << ',' << format_double(b.rhs) << ','
           << format_double(b.residual1) << ',' << format_double(b.residual2) << ','
           << format_double(b.hankel_f) << ',' << format_double(b.hankel_fbar) << '\n';
      else
        rows.push_back({{"symbol", s},
                        {"point", p},
                        {"lhs", b.lhs},
                        {"rhs", b.rhs},
                        {"residual1", b.residual1},
                        {"residual2", b.residual2},
                        {"hankel_f", b.hankel_f},
                        {"hankel_fbar", b.hankel_fbar}});
    }
  }
  if (fmt == ReportFormat::csv) {
    r.text = os.str();
  } else {
    ordered_json j;
    j["window"] = window;
    j["q"] = q;
    j["pass"] = r.checks_passed;
    j["rows"] = rows;
    r.text = j.dump(2) + "\n";
  }
  return r;
}

ReportResult report_pisier(ReportFormat fmt) {
  ReportResult r;
  std::vector<std::tuple<std::string, std::string, double>> checks;

  BaseMatrices b = base_matrices();
  checks.emplace_back("base_identity", "V^2=I", (b.V * b.V - Mat::Identity(2, 2)).norm());
  checks.emplace_back("base_identity", "C^2=0", (b.C * b.C).norm());
  checks.emplace_back("base_identity", "CV=C", (b.C * b.V - b.C).norm());
  checks.emplace_back("base_identity", "VC=-C", (b.V * b.C + b.C).norm());
  checks.emplace_back("base_identity", "C*C=E11", (b.C.adjoint() * b.C - b.E11).norm());
  checks.emplace_back("base_identity", "CC*=E22", (b.C * b.C.adjoint() - b.E22).norm());
  checks.emplace_back("base_identity", "VC+CV=0", (b.V * b.C + b.C * b.V).norm());

  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 1; n <= 4; ++n) {
    std::vector<cplx> a(static_cast<std::size_t>(n));
    for (auto& c : a) c = cplx(u(rng), u(rng));
    CcNormResult cc = cc_norm_check(a, n);
    double overshoot = std::max(cc.lower - cc.norm, cc.norm - cc.upper);
    checks.emplace_back("sandwich", "n=" + std::to_string(n), std::max(0.0, overshoot));
  }
  for (int mn = 1; mn <= 6; ++mn) {
    std::vector<cplx> alpha(static_cast<std::size_t>(mn));
    for (auto& c : alpha) c = cplx(u(rng), u(rng));
    checks.emplace_back("isometry", "mn=" + std::to_string(mn),
                        lambda_isometry_check(alpha, mn));
  }

  FOperator F = build_F(PisierParams{4, 8});
  {
    Eigen::Index h = F.block_dim, K = F.num_blocks;
    double worst = 0.0;
    Mat lhs = F.S.adjoint() * F.X, rhs = F.X * F.S;
    for (Eigen::Index i = 0; i + 1 < K; ++i)
      for (Eigen::Index j = 0; j + 1 < K; ++j)
        worst = std::max(worst,
                         (lhs.block(i * h, j * h, h, h) - rhs.block(i * h, j * h, h, h)).norm());
    checks.emplace_back("hankel_intertwine", "S*X=XS", worst);
    checks.emplace_back("shift_norm", "||S||=1", std::abs(opnorm(F.S) - 1.0));
    checks.emplace_back("hankel_block", "X00=W0",
                        (F.X.topLeftCorner(h, h) - build_W(0, 4)).norm());
  }

  std::vector<DeltaGrowthReport> growth;
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 3; ++n)
      if (m * n <= 6) growth.push_back(delta_growth_experiment(m, n));

  std::ostringstream os;
  ordered_json j;
  if (fmt == ReportFormat::csv) os << "check,detail,residual,pass\n";
  ordered_json jchecks = ordered_json::array();
  for (const auto& [kind, detail, residual] : checks) {
    bool ok = residual <= 1e-9;
    note_check(r, ok, kind + " " + detail + " residual " + format_double(residual));
    if (fmt == ReportFormat::csv)
      os << kind << ',' << detail << ',' << format_double(residual) << ',' << (ok ? 1 : 0)
         << '\n';
    else
      jchecks.push_back(
          {{"check", kind}, {"detail", detail}, {"residual", residual}, {"pass", ok}});
  }
  ordered_json jgrowth = ordered_json::array();
  if (fmt == ReportFormat::csv) os << "m,n,lhs_ratio,paper_bound,margin\n";
  for (const auto& g : growth) {
    bool ok = g.lhs_ratio >= g.paper_bound - 1e-9;
    note_check(r, ok,
               "growth ratio " + format_double(g.lhs_ratio) + " below bound " +
                   format_double(g.paper_bound));
    if (fmt == ReportFormat::csv)
      os << g.m << ',' << g.n << ',' << format_double(g.lhs_ratio) << ','
         << format_double(g.paper_bound) << ',' << format_double(g.margin()) << '\n';
    else
      jgrowth.push_back({{"m", g.m},
                         {"n", g.n},
                         {"lhs_ratio", g.lhs_ratio},
                         {"paper_bound", g.paper_bound},
                         {"margin", g.margin()}});
  }
  if (fmt == ReportFormat::csv) {
    r.text = os.str();
  } else {
    j["pass"] = r.checks_passed;
    j["checks"] = jchecks;
    j["growth"] = jgrowth;
    r.text = j.dump(2) + "\n";
  }
  return r;
}

}  // namespace qhl
