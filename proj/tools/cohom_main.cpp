// Command-line front end: representation info, the 1-D and top-degree
// coboundary solvers, the splitting, form primitives, the verification
// suites, and a small benchmark. JSON in/out for vectors and forms, CSV for
// reports. Exit codes: 0 success/pass, 1 usage or validation error,
// 2 tolerance failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "cohom/distributions.hpp"
#include "cohom/errors.hpp"
#include "cohom/forms.hpp"
#include "cohom/homogeneous.hpp"
#include "cohom/instances.hpp"
#include "cohom/json_io.hpp"
#include "cohom/lemma_lab.hpp"
#include "cohom/solve_top.hpp"

namespace {

using namespace cohom;

void check_precision_env() {
  const char* prec = std::getenv("COHOM_PRECISION");
  if (!prec) return;
  std::string p(prec);
  if (p == "double" || p.empty()) return;
  if (p == "extended") {
    std::cerr << "note: this build computes in double precision; "
                 "COHOM_PRECISION=extended is not available and double is used\n";
    return;
  }
  throw Error(ErrorCode::BadInput, "COHOM_PRECISION must be double or extended");
}

int run_solve1d(const std::string& input, const std::string& output,
                const std::string& backend, double tol, const std::string& defects_csv,
                long long window_radius) {
  CoeffTensor f = tensor_from_json(read_file(input));
  if (window_radius > 0)
    f = f.embedded(Window::hull(f.window(), symmetric_window(f.params(), window_radius)));
  if (!defects_csv.empty())
    write_file(defects_csv, kernel_defect_csv(f.params(), kernel_defect(f)));
  SolveOptions opts;
  opts.tol = tol;
  opts.backend = backend_from_name(backend);
  CoeffTensor g = solve_1d(f, opts);
  double fnorm = norm0(f);
  Window interior = f.window().interior(f.params(), 1);
  double res = norm0((apply_X(g, 1) - f).restricted(interior));
  double row_res = difference_rhs_check(f.params().factor(1), g, f);
  if (!output.empty()) write_file(output, tensor_to_json(g));
  std::printf("solve1d: residual %.3e (max row %.3e, |f|_0 %.3e)\n", res, row_res, fnorm);
  return res <= tol * std::max(fnorm, 1e-300) ? 0 : 2;
}

int run_split(const std::string& input, double ratio, const std::string& out_f1,
              const std::string& out_fmu, const std::string& report, double tol) {
  CoeffTensor f = tensor_from_json(read_file(input));
  SplitResult sr = split(f, SplitWeight{ratio});
  if (!out_f1.empty()) write_file(out_f1, tensor_to_json(sr.f1));
  if (!out_fmu.empty()) write_file(out_fmu, tensor_to_json(sr.fmu));
  SplitKernelReport rep = verify_split_kernels(sr.f1, sr.fmu, tol);
  if (!report.empty()) write_file(report, split_report_csv(sr, rep));
  std::printf("split: worst f1 defect %.3e, worst fmu defect %.3e (%s)\n",
              rep.worst_f1, rep.worst_fmu, rep.pass ? "pass" : "FAIL");
  return rep.pass ? 0 : 2;
}

int run_solve_top(const std::string& input, const std::string& out_prefix, double s,
                  double t, double tol, const std::string& report,
                  const std::vector<int>& axis_order, int threads,
                  const std::string& backend, const std::string& defects_csv) {
  CoeffTensor f = tensor_from_json(read_file(input));
  if (!defects_csv.empty())
    write_file(defects_csv, kernel_defect_csv(f.params(), kernel_defect(f)));
  TopOptions opts;
  opts.tol = tol;
  opts.backend = backend_from_name(backend);
  opts.axis_order = axis_order;
  opts.threads = threads;
  TopResult r = solve_top(f, opts);
  double res = residual(f, r.g);
  double fnorm = norm0(f);

  double sd = sobolev_index(s, f.d());
  double fs = sobolev_norm(f, sd);
  std::string csv = top_report_csv(r.rows);
  char buf[160];
  std::snprintf(buf, sizeof(buf), "total,%.17g\n", res);
  csv += buf;
  for (int i = 0; i < f.d(); ++i) {
    double ratio = fs > 0 ? sobolev_norm(r.g[static_cast<std::size_t>(i)], t) / fs : 0.0;
    std::snprintf(buf, sizeof(buf), "ratio_g%d,%.17g\n", i + 1, ratio);
    csv += buf;
  }
  if (!report.empty()) write_file(report, csv);
  for (int i = 0; i < f.d(); ++i)
    write_file(out_prefix + std::to_string(i + 1) + ".json",
               tensor_to_json(r.g[static_cast<std::size_t>(i)]));
  std::printf("solve-top: residual %.3e, |f|_0 %.3e (s_d = %g)\n", res, fnorm, sd);
  return res <= tol * std::max(fnorm, 1e-300) ? 0 : 2;
}

int run_primitive(const std::string& form_path, const std::string& out, double tol,
                  int threads, const std::string& backend) {
  DifferentialForm w = form_from_json(read_file(form_path));
  PrimitiveOptions opts;
  opts.tol = tol;
  opts.threads = threads;
  opts.backend = backend_from_name(backend);
  PrimitiveResult r = solve_primitive(w, opts);
  if (!out.empty()) write_file(out, form_to_json(r.eta));
  for (const auto& [label, res] : r.per_m)
    std::printf("primitive: %s residual %.3e\n", label.c_str(), res);
  std::printf("primitive: residual %.3e\n", r.residual);
  return r.residual <= tol * std::max(form_norm0(w), 1e-300) ? 0 : 2;
}

int run_verify(const std::string& suite, long long max_k, const std::string& report,
               int threads) {
  std::vector<std::string> suites =
      suite == "all" ? lemma_suites() : std::vector<std::string>{suite};
  std::vector<VerificationReport> reports;
  bool all_pass = true;
  for (const auto& id : suites) {
    VerificationReport rep = verify(id, GridSpec{max_k}, threads);
    std::printf("%-10s %-4s  worst=%.6g at [%s]  (%.0f ms, %lld excluded)\n",
                rep.lemma.c_str(), rep.pass ? "pass" : "FAIL", rep.worst_ratio,
                rep.worst_at.c_str(), rep.runtime_ms, rep.excluded_points);
    for (const auto& [name, value] : rep.constants)
      std::printf("    %s = %.6g\n", name.c_str(), value);
    all_pass = all_pass && rep.pass;
    reports.push_back(std::move(rep));
  }
  if (!report.empty()) write_file(report, report_csv(reports));
  return all_pass ? 0 : 2;
}

int run_bench(const std::string& out, std::uint64_t seed) {
  std::string csv = "operation,radius,millis\n";
  char buf[128];
  auto time_it = [&](const char* name, long long radius, auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0).count();
    std::snprintf(buf, sizeof(buf), "%s,%lld,%.3f\n", name, radius, ms);
    csv += buf;
    std::printf("%-12s radius %-4lld %10.3f ms\n", name, radius, ms);
  };

  for (long long radius : {32LL, 64LL, 128LL}) {
    TensorParams tp{{make_first_principal(0.3), make_complementary(0.1875)}};
    Rng rng(seed, static_cast<std::uint64_t>(radius));
    CoeffTensor f = random_decaying(tp, symmetric_window(tp, radius), rng, radius / 4.0);
    time_it("apply_X", radius, [&] { apply_X(f, 1); });
    time_it("pi_chain", radius, [&] {
      for (int rep = 0; rep < 1000; ++rep) pi_product(tp.factors[1], 32 * radius);
    });
    TensorParams pair{{make_first_principal(0.3), make_first_principal(0.5)}};
    Rng rng2(seed, static_cast<std::uint64_t>(radius) + 7);
    CoeffTensor fk = random_in_kernel(pair, radius / 2, rng2, radius / 8.0);
    time_it("solve_top", radius, [&] { solve_top(fk, TopOptions{}); });
  }
  if (!out.empty()) write_file(out, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coboundary solvers and verification suites for diagonal actions "
               "on products of SL(2,R) representations"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 1;
  std::uint64_t seed = 1;
  app.add_option("--threads", threads, "worker threads (results are thread-count independent)");
  app.add_option("--seed", seed, "seed for generated instances");

  // rep info
  auto* rep = app.add_subcommand("rep", "representation parameter utilities");
  auto* info = rep->add_subcommand("info", "classify (mu, epsilon) and print the parameters");
  double mu = 0.25;
  int epsilon = 0;
  std::string hint;
  info->add_option("--mu", mu, "Casimir parameter")->required();
  info->add_option("--epsilon", epsilon, "spectrum parity (0 or 1)")->required();
  info->add_option("--series", hint, "series hint, needed when mu alone is ambiguous");

  // solve1d and the oracle alias
  std::string input, output, backend = "formula", defects_csv;
  double tol = 1e-8;
  long long window_radius = 0;
  auto* s1 = app.add_subcommand("solve1d", "solve the one-factor coboundary equation");
  s1->add_option("--input", input, "tensor JSON")->required();
  s1->add_option("--output", output, "solution JSON");
  s1->add_option("--backend", backend, "formula|lsq");
  s1->add_option("--tol", tol, "relative tolerance");
  s1->add_option("--window", window_radius, "zero-pad the input to this radius");
  s1->add_option("--defects", defects_csv, "write the kernel-defect CSV here");

  auto* oracle = app.add_subcommand("oracle", "independent oracle backends");
  auto* o1 = oracle->add_subcommand("solve1d", "least-squares oracle for the one-factor equation");
  std::string o_input, o_output;
  double o_tol = 1e-8;
  o1->add_option("--input", o_input, "tensor JSON")->required();
  o1->add_option("--output", o_output, "solution JSON");
  o1->add_option("--tol", o_tol, "relative tolerance");

  // split
  std::string out_f1, out_fmu, report;
  double ratio = 0.5;
  auto* sp = app.add_subcommand("split", "split off the first-factor kernel part");
  sp->add_option("--input", input, "tensor JSON")->required();
  sp->add_option("--ratio", ratio, "geometric decay of the mass-1 weight");
  sp->add_option("--out-f1", out_f1, "first part JSON");
  sp->add_option("--out-fmu", out_fmu, "second part JSON");
  sp->add_option("--report", report, "kernel-defect report CSV");
  sp->add_option("--tol", tol, "defect tolerance");

  // solve-top
  std::string out_prefix = "g_";
  double s_order = 2.0, t_order = 0.5;
  std::vector<int> axis_order;
  auto* st = app.add_subcommand("solve-top", "solve the top-degree coboundary equation");
  st->add_option("--input", input, "tensor JSON")->required();
  st->add_option("--out-prefix", out_prefix, "write g_<i>.json with this prefix");
  st->add_option("--s", s_order, "source Sobolev order for the reported ratios");
  st->add_option("--t", t_order, "target Sobolev order for the reported ratios");
  st->add_option("--tol", tol, "relative tolerance");
  st->add_option("--report", report, "per-slice residual CSV");
  st->add_option("--axis-order", axis_order, "recursion order, a permutation of 1..d")
      ->delimiter(',');
  st->add_option("--backend", backend, "formula|lsq");
  st->add_option("--defects", defects_csv, "write the kernel-defect CSV here");

  // primitive
  std::string form_path, out_eta;
  auto* pr = app.add_subcommand("primitive", "primitive of a closed intermediate-degree form");
  pr->add_option("--form", form_path, "form JSON")->required();
  pr->add_option("--out", out_eta, "primitive JSON");
  pr->add_option("--tol", tol, "relative tolerance");
  pr->add_option("--backend", backend, "formula|lsq");

  // verify
  std::string suite = "all";
  long long max_k = 4096;
  auto* vf = app.add_subcommand("verify", "run the quantitative verification suites");
  vf->add_option("--suite", suite, "all or one suite id");
  vf->add_option("--grid-max-k", max_k, "index range of the grids");
  vf->add_option("--report", report, "per-grid-point CSV");

  // bench
  std::string bench_out;
  auto* be = app.add_subcommand("bench", "time the core operations (reporting only)");
  be->add_option("--out", bench_out, "CSV output");

  try {
    app.parse(argc, argv);
    check_precision_env();
    if (info->parsed()) {
      std::optional<Series> sh;
      if (!hint.empty()) sh = series_from_name(hint);
      IrrepParams p = classify(mu, epsilon, sh);
      std::printf("{\"series\":\"%s\",\"mu\":%.17g,\"epsilon\":%d,"
                  "\"nu\":[%.17g,%.17g],\"i_nu\":%d%s%s}\n",
                  series_name(p.series), p.mu, p.epsilon, p.nu.real(), p.nu.imag(),
                  p.i_nu, p.discrete() ? ",\"n\":" : "",
                  p.discrete() ? std::to_string(p.n).c_str() : "");
      return 0;
    }
    if (s1->parsed())
      return run_solve1d(input, output, backend, tol, defects_csv, window_radius);
    if (o1->parsed()) return run_solve1d(o_input, o_output, "lsq", o_tol, "", 0);
    if (sp->parsed()) return run_split(input, ratio, out_f1, out_fmu, report, tol);
    if (st->parsed())
      return run_solve_top(input, out_prefix, s_order, t_order, tol, report,
                           axis_order, threads, backend, defects_csv);
    if (pr->parsed()) return run_primitive(form_path, out_eta, tol, threads, backend);
    if (vf->parsed()) return run_verify(suite, max_k, report, threads);
    if (be->parsed()) return run_bench(bench_out, seed);
    std::cerr << app.help() << "\n";
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.tolerance_failure() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
